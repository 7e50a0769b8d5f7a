#include "wgm/locring.hpp"

#include <algorithm>

#include "wgm/parse.hpp"

namespace wgm {

RingPtr LocRing::make(Vars vars, std::vector<MPoly> dens)
{
    auto vp = make_vars(std::move(vars));
    auto ring = std::shared_ptr<LocRing>(new LocRing());
    ring->vars_ = vp;
    for (auto& d : dens) {
        if (!same_vars(d.vars_ptr(), vp))
            throw Error("denominator over wrong variable list");
        MPoly n = normalize_primitive(d);
        if (n.is_zero() || n.is_constant())
            throw Error("denominators must be non-constant: " + to_string(d));
        if (!is_squarefree(n))
            throw Error("denominator not squarefree: " + to_string(n));
        ring->dens_.push_back(std::move(n));
    }
    for (size_t i = 0; i < ring->dens_.size(); ++i)
        for (size_t j = i + 1; j < ring->dens_.size(); ++j)
            if (!gcd(ring->dens_[i], ring->dens_[j]).is_constant())
                throw Error("denominators not pairwise coprime: " +
                            to_string(ring->dens_[i]) + ", " +
                            to_string(ring->dens_[j]));
    return ring;
}

RingPtr LocRing::make(Vars vars, const std::vector<std::string>& dens)
{
    auto vp = make_vars(vars);
    std::vector<MPoly> ds;
    for (const auto& s : dens)
        ds.push_back(parse_poly(vp, s));
    return make(std::move(vars), std::move(ds));
}

int LocRing::var(const std::string& name) const
{
    int i = var_index(*vars_, name);
    if (i < 0)
        throw Error("unknown variable '" + name + "'");
    return i;
}

bool LocRing::operator==(const LocRing& o) const
{
    if (*vars_ != *o.vars_ || dens_.size() != o.dens_.size())
        return false;
    for (size_t i = 0; i < dens_.size(); ++i)
        if (dens_[i] != o.dens_[i])
            return false;
    return true;
}

bool same_ring(const RingPtr& a, const RingPtr& b)
{
    return a == b || (a && b && *a == *b);
}

LocElem::LocElem(RingPtr ring, MPoly num)
    : ring_(std::move(ring)), num_(std::move(num)), dexp_(ring_->ndens(), 0)
{
    if (!same_vars(num_.vars_ptr(), ring_->vars_ptr()))
        throw Error("numerator over wrong variable list");
    canonicalize();
}

LocElem::LocElem(RingPtr ring, MPoly num, std::vector<int> dexp)
    : ring_(std::move(ring)), num_(std::move(num)), dexp_(std::move(dexp))
{
    if (!same_vars(num_.vars_ptr(), ring_->vars_ptr()))
        throw Error("numerator over wrong variable list");
    if (dexp_.size() != static_cast<size_t>(ring_->ndens()))
        throw Error("denominator exponent vector has wrong length");
    for (int e : dexp_)
        if (e < 0)
            throw Error("negative denominator exponent");
    canonicalize();
}

void LocElem::canonicalize()
{
    if (num_.is_zero()) {
        std::fill(dexp_.begin(), dexp_.end(), 0);
        return;
    }
    for (int i = 0; i < ring_->ndens(); ++i) {
        MPoly q;
        while (dexp_[i] > 0 && try_divide(num_, ring_->dens()[i], &q)) {
            num_ = q;
            --dexp_[i];
        }
    }
}

LocElem LocElem::zero(const RingPtr& ring) { return LocElem(ring, MPoly(ring->vars_ptr())); }
LocElem LocElem::one(const RingPtr& ring) { return constant(ring, Rat(1)); }

LocElem LocElem::constant(const RingPtr& ring, const Rat& c)
{
    return LocElem(ring, MPoly(ring->vars_ptr(), c));
}

LocElem LocElem::var(const RingPtr& ring, int i)
{
    return LocElem(ring, MPoly::var(ring->vars_ptr(), i));
}

bool LocElem::is_polynomial() const
{
    for (int e : dexp_)
        if (e)
            return false;
    return true;
}

Rat LocElem::constant_value() const
{
    if (!is_constant())
        throw Error("constant_value on non-constant element");
    return num_.constant_value();
}

LocElem LocElem::operator-() const
{
    LocElem r = *this;
    r.num_ = -r.num_;
    return r;
}

LocElem operator+(const LocElem& a, const LocElem& b)
{
    if (!same_ring(a.ring_, b.ring_))
        throw Error("ring mismatch in +");
    LocElem r;
    r.ring_ = a.ring_;
    r.dexp_.resize(a.dexp_.size());
    MPoly na = a.num_, nb = b.num_;
    for (size_t i = 0; i < a.dexp_.size(); ++i) {
        int m = std::max(a.dexp_[i], b.dexp_[i]);
        r.dexp_[i] = m;
        const MPoly& h = a.ring_->dens()[i];
        if (m > a.dexp_[i])
            na = na * h.pow(m - a.dexp_[i]);
        if (m > b.dexp_[i])
            nb = nb * h.pow(m - b.dexp_[i]);
    }
    r.num_ = na + nb;
    r.canonicalize();
    return r;
}

LocElem operator-(const LocElem& a, const LocElem& b) { return a + (-b); }

LocElem operator*(const LocElem& a, const LocElem& b)
{
    if (!same_ring(a.ring_, b.ring_))
        throw Error("ring mismatch in *");
    LocElem r;
    r.ring_ = a.ring_;
    r.num_ = a.num_ * b.num_;
    r.dexp_.resize(a.dexp_.size());
    for (size_t i = 0; i < a.dexp_.size(); ++i)
        r.dexp_[i] = a.dexp_[i] + b.dexp_[i];
    r.canonicalize();
    return r;
}

LocElem LocElem::operator*(const Rat& c) const
{
    LocElem r = *this;
    r.num_ = r.num_ * c;
    if (r.num_.is_zero())
        std::fill(r.dexp_.begin(), r.dexp_.end(), 0);
    return r;
}

LocElem LocElem::pow(int e) const
{
    if (e < 0)
        return inverse().pow(-e);
    LocElem acc = one(ring_);
    LocElem base = *this;
    while (e) {
        if (e & 1)
            acc = acc * base;
        if (e >>= 1)
            base = base * base;
    }
    return acc;
}

bool LocElem::is_unit() const
{
    if (num_.is_zero())
        return false;
    MPoly n = num_, q;
    for (const auto& h : ring_->dens())
        while (try_divide(n, h, &q))
            n = q;
    return n.is_constant();
}

LocElem LocElem::inverse() const
{
    if (num_.is_zero())
        throw NonUnitError("inverse of zero");
    MPoly n = num_, q;
    std::vector<int> k(ring_->ndens(), 0);
    for (int i = 0; i < ring_->ndens(); ++i)
        while (try_divide(n, ring_->dens()[i], &q)) {
            n = q;
            ++k[i];
        }
    if (!n.is_constant())
        throw NonUnitError("not a unit of the localized ring: " + to_string(*this));
    // this = c * prod h^k / prod h^dexp; inverse = prod h^dexp / (c prod h^k)
    MPoly inum(ring_->vars_ptr(), Rat(1) / n.constant_value());
    for (int i = 0; i < ring_->ndens(); ++i)
        if (dexp_[i])
            inum = inum * ring_->dens()[i].pow(dexp_[i]);
    return LocElem(ring_, std::move(inum), std::move(k));
}

LocElem LocElem::derivative(int v) const
{
    // quotient rule against the declared denominators
    MPoly n = num_.derivative(v);
    LocElem r;
    r.ring_ = ring_;
    r.dexp_.resize(dexp_.size());
    MPoly part1 = n;
    MPoly part2(ring_->vars_ptr());
    for (size_t i = 0; i < dexp_.size(); ++i) {
        if (dexp_[i] == 0) {
            r.dexp_[i] = 0;
            continue;
        }
        r.dexp_[i] = dexp_[i] + 1;
        const MPoly& h = ring_->dens()[i];
        part1 = part1 * h;
        MPoly t = num_ * h.derivative(v) * Rat(dexp_[i]);
        for (size_t j = 0; j < dexp_.size(); ++j)
            if (j != i && dexp_[j] > 0)
                t = t * ring_->dens()[j];
        part2 += t;
    }
    r.num_ = part1 - part2;
    r.canonicalize();
    return r;
}

bool LocElem::operator==(const LocElem& o) const
{
    return same_ring(ring_, o.ring_) && dexp_ == o.dexp_ && num_ == o.num_;
}

std::string to_string(const LocElem& e)
{
    std::string num = to_string(e.num());
    bool trivial = true;
    for (int k : e.dexp())
        if (k)
            trivial = false;
    if (trivial)
        return num;
    std::string den;
    int nfac = 0;
    for (size_t i = 0; i < e.dexp().size(); ++i) {
        if (!e.dexp()[i])
            continue;
        if (nfac)
            den += "*";
        std::string h = to_string(e.ring()->dens()[i]);
        bool atom = e.ring()->dens()[i].terms().size() == 1;
        if (!atom)
            h = "(" + h + ")";
        den += h;
        if (e.dexp()[i] > 1)
            den += "^" + std::to_string(e.dexp()[i]);
        ++nfac;
    }
    bool num_atom = e.num().terms().size() == 1 && sgn(e.num().lead_coeff()) > 0;
    if (!num_atom)
        num = "(" + num + ")";
    if (nfac > 1)
        den = "(" + den + ")";
    return num + "/" + den;
}

namespace {

struct LocAlgebra {
    using Value = LocElem;
    RingPtr ring;

    Value from_int(const std::string& s) const
    {
        return LocElem::constant(ring, rat_parse(s));
    }
    Value from_ident(const std::string& s) const
    {
        return LocElem::var(ring, ring->var(s));
    }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value neg(const Value& a) const { return -a; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value div(const Value& a, const Value& b) const { return a * b.inverse(); }
    Value pow(const Value& a, long e) const { return a.pow(static_cast<int>(e)); }
};

}  // namespace

LocElem parse_locelem(const RingPtr& ring, const std::string& src)
{
    LocAlgebra alg{ring};
    return ExprParser<LocAlgebra>(alg, src).parse();
}

}  // namespace wgm
