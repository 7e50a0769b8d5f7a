#include "wgm/mpoly.hpp"

#include <algorithm>
#include <sstream>

#include "wgm/parse.hpp"

namespace wgm {

MPoly::MPoly(VarsPtr vars, const Rat& c) : vars_(std::move(vars))
{
    if (!rat_is_zero(c))
        t_.emplace(Expo(vars_->size(), 0), c);
}

MPoly MPoly::var(const VarsPtr& vars, int i)
{
    Expo e(vars->size(), 0);
    e.at(i) = 1;
    return monomial(vars, std::move(e), Rat(1));
}

MPoly MPoly::monomial(const VarsPtr& vars, Expo e, const Rat& c)
{
    MPoly p(vars);
    if (e.size() != vars->size())
        throw Error("monomial: exponent length mismatch");
    if (!rat_is_zero(c))
        p.t_.emplace(std::move(e), c);
    return p;
}

bool MPoly::is_constant() const
{
    return t_.empty() || (t_.size() == 1 && expo_total(t_.begin()->first) == 0);
}

Rat MPoly::constant_value() const
{
    if (t_.empty())
        return Rat(0);
    if (!is_constant())
        throw Error("constant_value on non-constant polynomial");
    return t_.begin()->second;
}

int MPoly::degree() const
{
    if (t_.empty())
        return -1;
    return expo_total(t_.rbegin()->first);
}

int MPoly::degree_in(int v) const
{
    int d = 0;
    for (const auto& [e, c] : t_)
        d = std::max(d, e.at(v));
    return t_.empty() ? 0 : d;
}

Rat MPoly::coeff(const Expo& e) const
{
    auto it = t_.find(e);
    return it == t_.end() ? Rat(0) : it->second;
}

void MPoly::add_term(const Expo& e, const Rat& c)
{
    if (e.size() != vars_->size())
        throw Error("add_term: exponent length mismatch");
    auto it = t_.find(e);
    if (it == t_.end()) {
        if (!rat_is_zero(c))
            t_.emplace(e, c);
        return;
    }
    it->second += c;
    if (rat_is_zero(it->second))
        t_.erase(it);
}

MPoly MPoly::operator-() const
{
    MPoly r(vars_);
    for (const auto& [e, c] : t_)
        r.t_.emplace(e, -c);
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o)
{
    if (!same_vars(vars_, o.vars_))
        throw Error("polynomial variable-list mismatch");
    for (const auto& [e, c] : o.t_)
        add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o)
{
    if (!same_vars(vars_, o.vars_))
        throw Error("polynomial variable-list mismatch");
    for (const auto& [e, c] : o.t_)
        add_term(e, -c);
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b)
{
    if (!same_vars(a.vars_, b.vars_))
        throw Error("polynomial variable-list mismatch");
    MPoly r(a.vars_);
    Expo e(a.vars_->size());
    for (const auto& [ea, ca] : a.t_)
        for (const auto& [eb, cb] : b.t_) {
            for (size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

MPoly MPoly::operator*(const Rat& c) const
{
    MPoly r(vars_);
    if (rat_is_zero(c))
        return r;
    for (const auto& [e, a] : t_)
        r.t_.emplace(e, a * c);
    return r;
}

MPoly MPoly::pow(int e) const
{
    if (e < 0)
        throw Error("MPoly::pow: negative exponent");
    MPoly acc(vars_, Rat(1));
    MPoly base = *this;
    while (e) {
        if (e & 1)
            acc = acc * base;
        if (e >>= 1)
            base = base * base;
    }
    return acc;
}

bool MPoly::operator==(const MPoly& o) const
{
    return same_vars(vars_, o.vars_) && t_ == o.t_;
}

MPoly MPoly::derivative(int v) const
{
    MPoly r(vars_);
    for (const auto& [e, c] : t_) {
        if (e.at(v) == 0)
            continue;
        Expo d = e;
        d[v] -= 1;
        r.add_term(d, c * Rat(e[v]));
    }
    return r;
}

const Expo& MPoly::lead_expo() const
{
    if (t_.empty())
        throw Error("lead_expo of zero");
    return t_.rbegin()->first;
}

const Rat& MPoly::lead_coeff() const
{
    if (t_.empty())
        throw Error("lead_coeff of zero");
    return t_.rbegin()->second;
}

MPoly MPoly::coeff_in(int v, int k) const
{
    MPoly r(vars_);
    for (const auto& [e, c] : t_)
        if (e.at(v) == k) {
            Expo d = e;
            d[v] = 0;
            r.add_term(d, c);
        }
    return r;
}

MPoly MPoly::lead_coeff_in(int v) const { return coeff_in(v, degree_in(v)); }

MPoly MPoly::mul_var_pow(int v, int k) const
{
    MPoly r(vars_);
    for (const auto& [e, c] : t_) {
        Expo d = e;
        d.at(v) += k;
        r.t_.emplace(std::move(d), c);
    }
    return r;
}

MPoly MPoly::extended(const VarsPtr& bigger) const
{
    if (bigger->size() < vars_->size() ||
        !std::equal(vars_->begin(), vars_->end(), bigger->begin()))
        throw Error("extended: variable list is not a prefix");
    MPoly r(bigger);
    for (const auto& [e, c] : t_) {
        Expo d = e;
        d.resize(bigger->size(), 0);
        r.t_.emplace(std::move(d), c);
    }
    return r;
}

bool same_vars(const VarsPtr& a, const VarsPtr& b)
{
    return a == b || (a && b && *a == *b);
}

int var_index(const Vars& vars, const std::string& name)
{
    for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name)
            return static_cast<int>(i);
    return -1;
}

bool try_divide(const MPoly& p, const MPoly& d, MPoly* quot)
{
    if (d.is_zero())
        throw Error("division by zero polynomial");
    if (!same_vars(p.vars_ptr(), d.vars_ptr()))
        throw Error("polynomial variable-list mismatch");
    MPoly r = p;
    MPoly q(p.vars_ptr());
    const Expo& de = d.lead_expo();
    const Rat& dc = d.lead_coeff();
    Expo diff(p.nvars());
    while (!r.is_zero()) {
        const Expo& re = r.lead_expo();
        for (int i = 0; i < p.nvars(); ++i) {
            diff[i] = re[i] - de[i];
            if (diff[i] < 0)
                return false;
        }
        Rat c = r.lead_coeff() / dc;
        MPoly m = MPoly::monomial(p.vars_ptr(), diff, c);
        q += m;
        r -= m * d;
    }
    if (quot)
        *quot = q;
    return true;
}

MPoly normalize_primitive(const MPoly& p)
{
    if (p.is_zero())
        return p;
    Int den_lcm(1), num_gcd(0);
    for (const auto& [e, c] : p.terms()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    }
    Rat scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (sgn(p.lead_coeff()) < 0)
        scale = -scale;
    return p * scale;
}

namespace {

/* content w.r.t. variable v: gcd of the coefficient polynomials */
MPoly content_in(const MPoly& p, int v)
{
    MPoly g(p.vars_ptr());
    for (int k = 0; k <= p.degree_in(v); ++k) {
        MPoly c = p.coeff_in(v, k);
        if (!c.is_zero())
            g = gcd(g, c);
        if (g.is_constant() && !g.is_zero())
            return MPoly(p.vars_ptr(), Rat(1));
    }
    return g;
}

MPoly exact_div(const MPoly& p, const MPoly& d)
{
    MPoly q;
    if (!try_divide(p, d, &q))
        throw Error("exact_div: not divisible");
    return q;
}

/* one pseudo-division pass in variable v; returns the remainder up to
 * factors of lc(divisor), which primitive PRS removes anyway */
MPoly pseudo_rem(MPoly u, const MPoly& div, int v)
{
    const int dv = div.degree_in(v);
    const MPoly lc = div.lead_coeff_in(v);
    while (!u.is_zero() && u.degree_in(v) >= dv) {
        int du = u.degree_in(v);
        MPoly lu = u.coeff_in(v, du);
        u = lc * u - lu.mul_var_pow(v, du - dv) * div;
    }
    return u;
}

bool univariate_rational(const MPoly& p, int* v)
{
    int found = -1;
    for (const auto& [e, c] : p.terms())
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) {
                if (found == -1)
                    found = static_cast<int>(i);
                else if (found != static_cast<int>(i))
                    return false;
            }
    *v = found;  // -1 means constant
    return true;
}

/* dense monic Euclid for the univariate-over-Q case */
MPoly gcd_uni(const MPoly& a, const MPoly& b, int v)
{
    auto dense = [&](const MPoly& p) {
        std::vector<Rat> c(p.degree_in(v) + 1, Rat(0));
        for (const auto& [e, k] : p.terms())
            c[e[v]] = k;
        return c;
    };
    auto deg = [](const std::vector<Rat>& c) {
        int d = static_cast<int>(c.size()) - 1;
        while (d >= 0 && rat_is_zero(c[d]))
            --d;
        return d;
    };
    std::vector<Rat> u = dense(a), w = dense(b);
    int du = deg(u), dw = deg(w);
    while (dw >= 0) {
        // u := u mod w
        while (du >= dw) {
            Rat f = u[du] / w[dw];
            for (int i = 0; i <= dw; ++i)
                u[du - dw + i] -= f * w[i];
            u[du] = Rat(0);
            du = deg(u);
        }
        std::swap(u, w);
        std::swap(du, dw);
    }
    MPoly g(a.vars_ptr());
    if (du < 0)
        return g;
    Expo e(a.nvars(), 0);
    for (int i = 0; i <= du; ++i)
        if (!rat_is_zero(u[i])) {
            e[v] = i;
            g.add_term(e, u[i]);
        }
    return normalize_primitive(g);
}

}  // namespace

MPoly gcd(const MPoly& a, const MPoly& b)
{
    if (a.is_zero())
        return normalize_primitive(b);
    if (b.is_zero())
        return normalize_primitive(a);
    if (!same_vars(a.vars_ptr(), b.vars_ptr()))
        throw Error("gcd: variable-list mismatch");
    if (a.is_constant() || b.is_constant())
        return MPoly(a.vars_ptr(), Rat(1));

    int va = -1, vb = -1;
    if (univariate_rational(a, &va) && univariate_rational(b, &vb) && va == vb)
        return gcd_uni(a, b, va);

    // main variable: first one occurring in either operand
    int v = -1;
    for (int i = 0; i < a.nvars() && v == -1; ++i)
        if (a.degree_in(i) > 0 || b.degree_in(i) > 0)
            v = i;

    if (a.degree_in(v) == 0)
        return gcd(a, content_in(b, v));
    if (b.degree_in(v) == 0)
        return gcd(content_in(a, v), b);

    MPoly ca = content_in(a, v), cb = content_in(b, v);
    MPoly gc = gcd(ca, cb);
    MPoly u = exact_div(a, ca), w = exact_div(b, cb);
    if (u.degree_in(v) < w.degree_in(v))
        std::swap(u, w);
    while (!w.is_zero()) {
        MPoly r = pseudo_rem(u, w, v);
        u = w;
        if (r.is_zero()) {
            w = r;
        } else if (r.degree_in(v) == 0) {
            // coprime primitive parts
            return normalize_primitive(gc);
        } else {
            w = exact_div(r, content_in(r, v));
        }
    }
    return normalize_primitive(gc * u);
}

bool is_squarefree(const MPoly& p)
{
    if (p.is_zero())
        return false;
    MPoly g = p;
    for (int v = 0; v < p.nvars(); ++v) {
        if (p.degree_in(v) == 0)
            continue;
        g = gcd(g, p.derivative(v));
        if (g.is_constant())
            return true;
    }
    return g.is_constant();
}

std::string to_string(const MPoly& p)
{
    if (p.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const Expo& e = it->first;
        Rat c = it->second;
        if (first) {
            if (sgn(c) < 0) {
                out += "-";
                c = -c;
            }
        } else {
            out += (sgn(c) < 0) ? " - " : " + ";
            if (sgn(c) < 0)
                c = -c;
        }
        first = false;
        std::vector<std::string> factors;
        if (c != Rat(1) || expo_total(e) == 0)
            factors.push_back(rat_str(c));
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            std::string f = p.vars()[i];
            if (e[i] > 1)
                f += "^" + std::to_string(e[i]);
            factors.push_back(f);
        }
        for (size_t i = 0; i < factors.size(); ++i) {
            if (i)
                out += "*";
            out += factors[i];
        }
    }
    return out;
}

namespace {

struct MPolyAlgebra {
    using Value = MPoly;
    VarsPtr vars;

    Value from_int(const std::string& s) const { return MPoly(vars, rat_parse(s)); }
    Value from_ident(const std::string& s) const
    {
        int i = var_index(*vars, s);
        if (i < 0)
            throw ParseError("unknown variable '" + s + "'");
        return MPoly::var(vars, i);
    }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value neg(const Value& a) const { return -a; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value div(const Value& a, const Value& b) const
    {
        if (!b.is_constant() || b.is_zero())
            throw ParseError("polynomial division only by nonzero constants");
        return a * (Rat(1) / b.constant_value());
    }
    Value pow(const Value& a, long e) const { return a.pow(static_cast<int>(e)); }
};

}  // namespace

MPoly parse_poly(const VarsPtr& vars, const std::string& src)
{
    MPolyAlgebra alg{vars};
    return ExprParser<MPolyAlgebra>(alg, src).parse();
}

}  // namespace wgm
