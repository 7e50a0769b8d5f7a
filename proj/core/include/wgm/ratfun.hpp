#pragma once

#include <utility>
#include <vector>

#include "wgm/mpoly.hpp"

namespace wgm {

/* Fraction of polynomials in canonical form: gcd(num, den) = 1 and den
 * has graded-lex leading coefficient 1. This is the coefficient field
 * for all exact linear algebra over Q(lambda) and the carrier of the
 * univariate rational functions in reports. */
class PolyFrac {
  public:
    PolyFrac() = default;  // null; only assignable
    PolyFrac(MPoly num, MPoly den);
    explicit PolyFrac(MPoly num);

    static PolyFrac zero(const VarsPtr& vars);
    static PolyFrac one(const VarsPtr& vars);
    static PolyFrac constant(const VarsPtr& vars, const Rat& c);
    static PolyFrac var(const VarsPtr& vars, int i);

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }
    const VarsPtr& vars_ptr() const { return num_.vars_ptr(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const;
    bool is_constant() const;
    Rat constant_value() const;

    PolyFrac operator-() const;
    friend PolyFrac operator+(const PolyFrac& a, const PolyFrac& b);
    friend PolyFrac operator-(const PolyFrac& a, const PolyFrac& b);
    friend PolyFrac operator*(const PolyFrac& a, const PolyFrac& b);
    friend PolyFrac operator/(const PolyFrac& a, const PolyFrac& b);
    PolyFrac inverse() const;
    PolyFrac pow(int e) const;
    PolyFrac derivative(int v) const;

    bool operator==(const PolyFrac& o) const;
    bool operator!=(const PolyFrac& o) const { return !(*this == o); }

  private:
    void reduce();
    MPoly num_, den_;
};

std::string to_string(const PolyFrac& f);
inline bool fe_is_zero(const PolyFrac& f) { return f.is_zero(); }

/* Dense univariate polynomial in one designated variable with PolyFrac
 * coefficients (the coefficients must not involve the main variable).
 * Workhorse for the Euclidean algorithms behind Hermite reduction. */
class UniPoly {
  public:
    UniPoly() = default;
    UniPoly(VarsPtr vars, int v) : vars_(std::move(vars)), v_(v) {}
    UniPoly(VarsPtr vars, int v, std::vector<PolyFrac> coeffs);

    static UniPoly from_mpoly(const MPoly& p, int v);
    static UniPoly from_frac(const PolyFrac& f, int v);  // f free of v

    const VarsPtr& vars_ptr() const { return vars_; }
    int main_var() const { return v_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 if zero
    bool is_zero() const { return c_.empty(); }
    PolyFrac coeff(int k) const;
    const PolyFrac& lc() const;
    void set_coeff(int k, const PolyFrac& f);

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly operator*(const PolyFrac& f) const;
    UniPoly shift(int k) const;  // multiply by x^k
    UniPoly monic() const;
    UniPoly derivative() const;              // d/d(main var)
    UniPoly coeff_derivative(int v) const;   // derivative of coefficients
    bool operator==(const UniPoly& o) const;

    /* numerator as MPoly times 1/denominator content; exact when the
     * coefficients are polynomial */
    MPoly to_mpoly() const;

  private:
    void trim();
    VarsPtr vars_;
    int v_ = -1;
    std::vector<PolyFrac> c_;  // c_[k] is the coefficient of v^k
};

void divmod(const UniPoly& a, const UniPoly& b, UniPoly* q, UniPoly* r);
UniPoly gcd(const UniPoly& a, const UniPoly& b);  // monic

/* Extended Euclid: g = gcd(a,b) monic with u*a + v*b = g. */
struct Bezout {
    UniPoly g, u, v;
};
Bezout gcd_bezout(const UniPoly& a, const UniPoly& b);

/* Yun squarefree decomposition: products of factor^multiplicity equal
 * the input up to a unit of the coefficient field; factors monic,
 * squarefree, pairwise coprime, sorted by multiplicity. */
std::vector<std::pair<UniPoly, int>> squarefree_decompose(const UniPoly& p);

/* Spec-level wrapper on MPoly inputs: factors are returned primitive
 * with positive leading coefficient (monic rescaled over Q when the
 * leading coefficient is rational). */
std::vector<std::pair<MPoly, int>> squarefree_decompose(const MPoly& p, int v);

/* Partial fraction decomposition of num / prod q_i^{m_i} for pairwise
 * coprime squarefree monic q_i: a polynomial part plus terms
 * r_{ik}/q_i^k with deg r_{ik} < deg q_i. */
struct ParFrac {
    UniPoly poly;
    struct Term {
        int factor;  // index into the input factor list
        int power;   // k >= 1
        UniPoly num;
    };
    std::vector<Term> terms;
};
ParFrac partial_fractions(const UniPoly& num,
                          const std::vector<std::pair<UniPoly, int>>& factors);

std::string to_string(const UniPoly& p);

}  // namespace wgm
