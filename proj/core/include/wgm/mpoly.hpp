#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wgm/rat.hpp"

namespace wgm {

using Vars = std::vector<std::string>;
using VarsPtr = std::shared_ptr<const Vars>;
using Expo = std::vector<int>;

inline VarsPtr make_vars(Vars v) { return std::make_shared<const Vars>(std::move(v)); }

inline int expo_total(const Expo& e)
{
    int t = 0;
    for (int x : e)
        t += x;
    return t;
}

/* Graded lexicographic order, ascending: compare total degree first,
 * then lexicographically with the first declared variable most
 * significant. All canonical forms and printed output follow it. */
struct GrlexLess {
    bool operator()(const Expo& a, const Expo& b) const
    {
        int ta = expo_total(a), tb = expo_total(b);
        if (ta != tb)
            return ta < tb;
        return a < b;  // lexicographic on exponent vectors
    }
};

/* Multivariate polynomial over Q with a fixed ordered variable list.
 * Invariants: no zero coefficients stored; every exponent vector has
 * length nvars(). Two polynomials over equal variable lists compare
 * equal iff their term maps are equal. */
class MPoly {
  public:
    using Terms = std::map<Expo, Rat, GrlexLess>;

    MPoly() = default;  // null polynomial (no variable list); only assignable
    explicit MPoly(VarsPtr vars) : vars_(std::move(vars)) {}
    MPoly(VarsPtr vars, const Rat& c);

    static MPoly var(const VarsPtr& vars, int i);
    static MPoly monomial(const VarsPtr& vars, Expo e, const Rat& c);

    const Vars& vars() const { return *vars_; }
    const VarsPtr& vars_ptr() const { return vars_; }
    int nvars() const { return static_cast<int>(vars_->size()); }
    const Terms& terms() const { return t_; }

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    Rat constant_value() const;  // requires is_constant()
    int degree() const;          // total degree; -1 for zero
    int degree_in(int v) const;

    Rat coeff(const Expo& e) const;
    void add_term(const Expo& e, const Rat& c);

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly operator*(const Rat& c) const;
    MPoly pow(int e) const;

    bool operator==(const MPoly& o) const;
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    MPoly derivative(int v) const;

    /* Leading data w.r.t. the graded-lex order. Requires nonzero. */
    const Expo& lead_expo() const;
    const Rat& lead_coeff() const;

    /* Univariate views w.r.t. variable v. coeff_in returns the
     * coefficient of v^k as a polynomial with deg_v = 0. */
    MPoly coeff_in(int v, int k) const;
    MPoly lead_coeff_in(int v) const;
    MPoly mul_var_pow(int v, int k) const;

    /* Re-express over a variable list that contains vars() as a prefix. */
    MPoly extended(const VarsPtr& bigger) const;

  private:
    VarsPtr vars_;
    Terms t_;
};

bool same_vars(const VarsPtr& a, const VarsPtr& b);
int var_index(const Vars& vars, const std::string& name);  // -1 if absent

/* quot := p / d when the division is exact; returns false otherwise. */
bool try_divide(const MPoly& p, const MPoly& d, MPoly* quot);

/* Primitive normalization: rational rescaling so that coefficients are
 * coprime integers and the graded-lex leading coefficient is positive.
 * Zero stays zero. */
MPoly normalize_primitive(const MPoly& p);

/* Multivariate gcd (primitive PRS), returned in primitive normalized
 * form; gcd with a nonzero constant is 1. */
MPoly gcd(const MPoly& a, const MPoly& b);

bool is_squarefree(const MPoly& p);

std::string to_string(const MPoly& p);
MPoly parse_poly(const VarsPtr& vars, const std::string& src);

/* Substitute vals[i] for variable i. T needs *, + and copy. */
template <class T, class FromRat>
T eval_poly(const MPoly& p, const std::vector<T>& vals, FromRat from_rat)
{
    T acc = from_rat(Rat(0));
    for (const auto& [e, c] : p.terms()) {
        T t = from_rat(c);
        for (size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k)
                t = t * vals[i];
        acc = acc + t;
    }
    return acc;
}

}  // namespace wgm
