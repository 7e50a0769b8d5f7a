#include "wgm/ratfun.hpp"

#include <algorithm>

namespace wgm {

PolyFrac::PolyFrac(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero())
        throw Error("PolyFrac: zero denominator");
    if (!same_vars(num_.vars_ptr(), den_.vars_ptr()))
        throw Error("PolyFrac: variable-list mismatch");
    reduce();
}

PolyFrac::PolyFrac(MPoly num)
    : num_(std::move(num)), den_(num_.vars_ptr(), Rat(1))
{
}

void PolyFrac::reduce()
{
    if (num_.is_zero()) {
        den_ = MPoly(num_.vars_ptr(), Rat(1));
        return;
    }
    MPoly g = gcd(num_, den_);
    if (!g.is_constant()) {
        MPoly q;
        try_divide(num_, g, &q);
        num_ = q;
        try_divide(den_, g, &q);
        den_ = q;
    }
    Rat lc = den_.lead_coeff();
    if (lc != Rat(1)) {
        Rat inv = Rat(1) / lc;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

PolyFrac PolyFrac::zero(const VarsPtr& vars) { return PolyFrac(MPoly(vars)); }
PolyFrac PolyFrac::one(const VarsPtr& vars) { return constant(vars, Rat(1)); }
PolyFrac PolyFrac::constant(const VarsPtr& vars, const Rat& c)
{
    return PolyFrac(MPoly(vars, c));
}
PolyFrac PolyFrac::var(const VarsPtr& vars, int i)
{
    return PolyFrac(MPoly::var(vars, i));
}

bool PolyFrac::is_polynomial() const { return den_.is_constant(); }
bool PolyFrac::is_constant() const { return num_.is_constant() && den_.is_constant(); }

Rat PolyFrac::constant_value() const
{
    if (!is_constant())
        throw Error("constant_value on non-constant fraction");
    if (num_.is_zero())
        return Rat(0);
    return num_.constant_value() / den_.constant_value();
}

PolyFrac PolyFrac::operator-() const
{
    PolyFrac r = *this;
    r.num_ = -r.num_;
    return r;
}

PolyFrac operator+(const PolyFrac& a, const PolyFrac& b)
{
    return PolyFrac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

PolyFrac operator-(const PolyFrac& a, const PolyFrac& b)
{
    return PolyFrac(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

PolyFrac operator*(const PolyFrac& a, const PolyFrac& b)
{
    return PolyFrac(a.num_ * b.num_, a.den_ * b.den_);
}

PolyFrac operator/(const PolyFrac& a, const PolyFrac& b)
{
    if (b.is_zero())
        throw Error("PolyFrac division by zero");
    return PolyFrac(a.num_ * b.den_, a.den_ * b.num_);
}

PolyFrac PolyFrac::inverse() const
{
    if (is_zero())
        throw Error("PolyFrac inverse of zero");
    return PolyFrac(den_, num_);
}

PolyFrac PolyFrac::pow(int e) const
{
    if (e < 0)
        return inverse().pow(-e);
    PolyFrac acc = one(vars_ptr());
    PolyFrac base = *this;
    while (e) {
        if (e & 1)
            acc = acc * base;
        if (e >>= 1)
            base = base * base;
    }
    return acc;
}

PolyFrac PolyFrac::derivative(int v) const
{
    return PolyFrac(num_.derivative(v) * den_ - num_ * den_.derivative(v),
                    den_ * den_);
}

bool PolyFrac::operator==(const PolyFrac& o) const
{
    return num_ == o.num_ && den_ == o.den_;
}

std::string to_string(const PolyFrac& f)
{
    if (f.is_polynomial())
        return to_string(f.num() * f.den().constant_value().get_den());
    // display with integer-cleaned numerator and denominator
    Int scale_den(1);
    for (const auto& [e, c] : f.num().terms())
        mpz_lcm(scale_den.get_mpz_t(), scale_den.get_mpz_t(),
                c.get_den().get_mpz_t());
    for (const auto& [e, c] : f.den().terms())
        mpz_lcm(scale_den.get_mpz_t(), scale_den.get_mpz_t(),
                c.get_den().get_mpz_t());
    Rat s(scale_den);
    MPoly n = f.num() * s, d = f.den() * s;
    Int g(0);
    for (const auto& [e, c] : n.terms())
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
    for (const auto& [e, c] : d.terms())
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
    if (g != 0) {
        Rat gi(Int(1), g);
        gi.canonicalize();
        n = n * gi;
        d = d * gi;
    }
    std::string ns = to_string(n), ds = to_string(d);
    if (n.terms().size() > 1)
        ns = "(" + ns + ")";
    if (d.terms().size() > 1 || d.lead_coeff() != Rat(1) || d.degree() == 0)
        ds = "(" + ds + ")";
    return ns + "/" + ds;
}

UniPoly::UniPoly(VarsPtr vars, int v, std::vector<PolyFrac> coeffs)
    : vars_(std::move(vars)), v_(v), c_(std::move(coeffs))
{
    for (const auto& f : c_)
        if (!f.is_zero() && (f.num().degree_in(v_) > 0 || f.den().degree_in(v_) > 0))
            throw Error("UniPoly coefficient involves the main variable");
    trim();
}

void UniPoly::trim()
{
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

UniPoly UniPoly::from_mpoly(const MPoly& p, int v)
{
    UniPoly r(p.vars_ptr(), v);
    r.c_.resize(p.degree_in(v) + 1, PolyFrac::zero(p.vars_ptr()));
    for (int k = 0; k <= p.degree_in(v); ++k)
        r.c_[k] = PolyFrac(p.coeff_in(v, k));
    r.trim();
    return r;
}

UniPoly UniPoly::from_frac(const PolyFrac& f, int v)
{
    UniPoly r(f.vars_ptr(), v);
    if (!f.is_zero())
        r.c_.push_back(f);
    return r;
}

PolyFrac UniPoly::coeff(int k) const
{
    if (k < 0 || k >= static_cast<int>(c_.size()))
        return PolyFrac::zero(vars_);
    return c_[k];
}

const PolyFrac& UniPoly::lc() const
{
    if (c_.empty())
        throw Error("lc of zero");
    return c_.back();
}

void UniPoly::set_coeff(int k, const PolyFrac& f)
{
    if (k >= static_cast<int>(c_.size()))
        c_.resize(k + 1, PolyFrac::zero(vars_));
    c_[k] = f;
    trim();
}

UniPoly UniPoly::operator-() const
{
    UniPoly r = *this;
    for (auto& f : r.c_)
        f = -f;
    return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b)
{
    UniPoly r = a;
    if (static_cast<int>(r.c_.size()) < static_cast<int>(b.c_.size()))
        r.c_.resize(b.c_.size(), PolyFrac::zero(a.vars_));
    for (size_t k = 0; k < b.c_.size(); ++k)
        r.c_[k] = r.c_[k] + b.c_[k];
    r.trim();
    return r;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b)
{
    UniPoly r(a.vars_, a.v_);
    if (a.is_zero() || b.is_zero())
        return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, PolyFrac::zero(a.vars_));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j)
            r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
    r.trim();
    return r;
}

UniPoly UniPoly::operator*(const PolyFrac& f) const
{
    UniPoly r = *this;
    for (auto& c : r.c_)
        c = c * f;
    r.trim();
    return r;
}

UniPoly UniPoly::shift(int k) const
{
    if (is_zero())
        return *this;
    UniPoly r(vars_, v_);
    r.c_.assign(c_.size() + k, PolyFrac::zero(vars_));
    for (size_t i = 0; i < c_.size(); ++i)
        r.c_[i + k] = c_[i];
    return r;
}

UniPoly UniPoly::monic() const
{
    if (is_zero())
        return *this;
    return *this * lc().inverse();
}

UniPoly UniPoly::derivative() const
{
    UniPoly r(vars_, v_);
    if (degree() < 1)
        return r;
    r.c_.assign(c_.size() - 1, PolyFrac::zero(vars_));
    for (size_t k = 1; k < c_.size(); ++k)
        r.c_[k - 1] = c_[k] * PolyFrac::constant(vars_, Rat(static_cast<long>(k)));
    r.trim();
    return r;
}

UniPoly UniPoly::coeff_derivative(int v) const
{
    UniPoly r = *this;
    for (auto& c : r.c_)
        c = c.derivative(v);
    r.trim();
    return r;
}

bool UniPoly::operator==(const UniPoly& o) const
{
    if (v_ != o.v_ || c_.size() != o.c_.size())
        return false;
    for (size_t k = 0; k < c_.size(); ++k)
        if (!(c_[k] == o.c_[k]))
            return false;
    return true;
}

MPoly UniPoly::to_mpoly() const
{
    MPoly r(vars_);
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero())
            continue;
        if (!c_[k].is_polynomial())
            throw Error("to_mpoly: fractional coefficient");
        Rat dc = c_[k].den().constant_value();
        r += (c_[k].num() * (Rat(1) / dc)).mul_var_pow(v_, static_cast<int>(k));
    }
    return r;
}

namespace {

/* scaling that clears coefficient denominators and the common content;
 * keeps Euclidean remainder sequences from blowing up */
PolyFrac content_scale(const UniPoly& p)
{
    const VarsPtr& vars = p.vars_ptr();
    MPoly den_lcm(vars, Rat(1));
    MPoly num_gcd(vars);
    for (int k = 0; k <= p.degree(); ++k) {
        PolyFrac c = p.coeff(k);
        if (c.is_zero())
            continue;
        MPoly g = gcd(den_lcm, c.den());
        MPoly q;
        try_divide(c.den(), g, &q);
        den_lcm = den_lcm * q;
        num_gcd = gcd(num_gcd, c.num());
    }
    return PolyFrac(den_lcm, num_gcd);
}

}  // namespace

void divmod(const UniPoly& a, const UniPoly& b, UniPoly* q, UniPoly* r)
{
    if (b.is_zero())
        throw Error("UniPoly division by zero");
    UniPoly quo(a.vars_ptr(), a.main_var());
    UniPoly rem = a;
    PolyFrac lcb = b.lc();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int k = rem.degree() - b.degree();
        PolyFrac f = rem.lc() / lcb;
        UniPoly t = UniPoly::from_frac(f, a.main_var()).shift(k);
        quo = quo + t;
        rem = rem - t * b;
    }
    if (q)
        *q = quo;
    if (r)
        *r = rem;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b)
{
    UniPoly u = a, v = b;
    while (!v.is_zero()) {
        UniPoly r;
        divmod(u, v, nullptr, &r);
        if (!r.is_zero())
            r = r * content_scale(r);
        u = v;
        v = r;
    }
    return u.is_zero() ? u : u.monic();
}

Bezout gcd_bezout(const UniPoly& a, const UniPoly& b)
{
    if (a.is_zero() && b.is_zero())
        throw Error("gcd_bezout(0, 0)");
    const VarsPtr& vars = a.vars_ptr();
    int mv = a.main_var();
    UniPoly r0 = a, r1 = b;
    UniPoly u0 = UniPoly::from_frac(PolyFrac::one(vars), mv);
    UniPoly u1(vars, mv);
    UniPoly v0(vars, mv);
    UniPoly v1 = UniPoly::from_frac(PolyFrac::one(vars), mv);
    while (!r1.is_zero()) {
        UniPoly q, r;
        divmod(r0, r1, &q, &r);
        UniPoly u2 = u0 - q * u1, v2 = v0 - q * v1;
        if (!r.is_zero()) {
            PolyFrac s = content_scale(r);
            r = r * s;
            u2 = u2 * s;
            v2 = v2 * s;
        }
        r0 = r1;
        r1 = r;
        u0 = u1;
        u1 = u2;
        v0 = v1;
        v1 = v2;
    }
    PolyFrac s = r0.lc().inverse();
    return Bezout{r0 * s, u0 * s, v0 * s};
}

std::vector<std::pair<UniPoly, int>> squarefree_decompose(const UniPoly& p)
{
    if (p.is_zero())
        throw Error("squarefree decomposition of zero");
    std::vector<std::pair<UniPoly, int>> out;
    UniPoly f = p.monic();
    if (f.degree() == 0)
        return out;
    UniPoly fp = f.derivative();
    UniPoly d0 = gcd(f, fp);
    UniPoly w, y, z, q;
    divmod(f, d0, &w, nullptr);
    divmod(fp, d0, &y, nullptr);
    z = y - w.derivative();
    int i = 1;
    while (!z.is_zero()) {
        UniPoly g = gcd(w, z);
        if (g.degree() > 0)
            out.emplace_back(g, i);
        divmod(w, g, &q, nullptr);
        w = q;
        divmod(z, g, &y, nullptr);
        z = y - w.derivative();
        ++i;
    }
    if (w.degree() > 0)
        out.emplace_back(w.monic(), i);
    std::sort(out.begin(), out.end(),
              [](const auto& l, const auto& r) { return l.second < r.second; });
    return out;
}

std::vector<std::pair<MPoly, int>> squarefree_decompose(const MPoly& p, int v)
{
    if (p.is_zero())
        throw Error("squarefree decomposition of zero");
    auto fac = squarefree_decompose(UniPoly::from_mpoly(p, v));
    std::vector<std::pair<MPoly, int>> out;
    for (auto& [f, m] : fac) {
        // clear coefficient denominators, keep primitive positive form
        MPoly acc(p.vars_ptr());
        for (int k = 0; k <= f.degree(); ++k) {
            const PolyFrac& c = f.coeff(k);
            if (c.is_zero())
                continue;
            MPoly w = c.num();
            MPoly rest(p.vars_ptr(), Rat(1));
            for (int j = 0; j <= f.degree(); ++j)
                if (j != k && !f.coeff(j).is_zero())
                    rest = rest * f.coeff(j).den();
            acc += (w * rest).mul_var_pow(v, k);
        }
        out.emplace_back(normalize_primitive(acc), m);
    }
    return out;
}

ParFrac partial_fractions(const UniPoly& num,
                          const std::vector<std::pair<UniPoly, int>>& factors)
{
    ParFrac out;
    const VarsPtr& vars = num.vars_ptr();
    int mv = num.main_var();
    UniPoly den = UniPoly::from_frac(PolyFrac::one(vars), mv);
    for (const auto& [q, m] : factors)
        for (int k = 0; k < m; ++k)
            den = den * q;
    UniPoly rem;
    divmod(num, den, &out.poly, &rem);

    // split rem/den across the coprime factor powers by Bezout, then
    // expand each r/q^m into layers by repeated division
    struct Piece {
        UniPoly num;
        int factor;
    };
    std::vector<Piece> pieces;
    UniPoly cur = rem;
    UniPoly curden = den;
    for (size_t i = 0; i < factors.size(); ++i) {
        UniPoly qi = factors[i].first;
        UniPoly qpow = UniPoly::from_frac(PolyFrac::one(vars), mv);
        for (int k = 0; k < factors[i].second; ++k)
            qpow = qpow * qi;
        UniPoly rest, t;
        divmod(curden, qpow, &rest, &t);
        if (!t.is_zero())
            throw Error("partial_fractions: factors do not divide denominator");
        if (rest.degree() == 0) {
            pieces.push_back({cur * rest.lc().inverse(), static_cast<int>(i)});
            break;
        }
        // cur/(qpow*rest) = a/qpow + b/rest with a = cur*v mod qpow
        Bezout bz = gcd_bezout(qpow, rest);
        if (bz.g.degree() != 0)
            throw Error("partial_fractions: factors not coprime");
        UniPoly a;
        divmod(cur * bz.v, qpow, nullptr, &a);
        UniPoly b;
        divmod(cur * bz.u, rest, nullptr, &b);
        pieces.push_back({a, static_cast<int>(i)});
        cur = b;
        curden = rest;
    }
    for (auto& piece : pieces) {
        const UniPoly& q = factors[piece.factor].first;
        int m = factors[piece.factor].second;
        UniPoly w = piece.num;
        for (int k = m; k >= 1 && !w.is_zero(); --k) {
            UniPoly r;
            divmod(w, q, &w, &r);
            if (!r.is_zero())
                out.terms.push_back({piece.factor, k, r});
        }
    }
    return out;
}

std::string to_string(const UniPoly& p)
{
    if (p.is_zero())
        return "0";
    std::string out;
    const std::string var = (*p.vars_ptr())[p.main_var()];
    for (int k = p.degree(); k >= 0; --k) {
        if (p.coeff(k).is_zero())
            continue;
        if (!out.empty())
            out += " + ";
        std::string c = to_string(p.coeff(k));
        if (k == 0) {
            out += c;
            continue;
        }
        std::string xs = var + (k > 1 ? "^" + std::to_string(k) : "");
        if (c == "1") {
            out += xs;
        } else {
            if (p.coeff(k).num().terms().size() > 1)
                c = "(" + c + ")";
            out += c + "*" + xs;
        }
    }
    return out;
}

}  // namespace wgm
