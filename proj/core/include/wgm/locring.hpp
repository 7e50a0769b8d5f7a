#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wgm/mpoly.hpp"

namespace wgm {

class LocRing;
using RingPtr = std::shared_ptr<const LocRing>;

/* Coordinate ring of an affine chart: K[v1..vn][1/h1..1/hs].
 * Denominators are non-constant, squarefree, pairwise coprime and kept
 * primitive with positive graded-lex leading coefficient; smoothness of
 * the chart is the caller's assertion. */
class LocRing {
  public:
    static RingPtr make(Vars vars, std::vector<MPoly> dens);
    static RingPtr make(Vars vars, const std::vector<std::string>& dens);

    const Vars& vars() const { return *vars_; }
    const VarsPtr& vars_ptr() const { return vars_; }
    int nvars() const { return static_cast<int>(vars_->size()); }
    const std::vector<MPoly>& dens() const { return dens_; }
    int ndens() const { return static_cast<int>(dens_.size()); }
    int var(const std::string& name) const;  // throws on unknown name

    bool operator==(const LocRing& o) const;

  private:
    LocRing() = default;
    VarsPtr vars_;
    std::vector<MPoly> dens_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);

/* Element in canonical form num / prod dens[i]^dexp[i]: the numerator
 * shares no factor with any denominator that has positive exponent. */
class LocElem {
  public:
    LocElem() = default;  // null element; only assignable
    LocElem(RingPtr ring, MPoly num);
    LocElem(RingPtr ring, MPoly num, std::vector<int> dexp);

    static LocElem zero(const RingPtr& ring);
    static LocElem one(const RingPtr& ring);
    static LocElem constant(const RingPtr& ring, const Rat& c);
    static LocElem var(const RingPtr& ring, int i);

    const RingPtr& ring() const { return ring_; }
    const MPoly& num() const { return num_; }
    const std::vector<int>& dexp() const { return dexp_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const;
    bool is_constant() const { return is_polynomial() && num_.is_constant(); }
    Rat constant_value() const;

    LocElem operator-() const;
    friend LocElem operator+(const LocElem& a, const LocElem& b);
    friend LocElem operator-(const LocElem& a, const LocElem& b);
    friend LocElem operator*(const LocElem& a, const LocElem& b);
    LocElem operator*(const Rat& c) const;
    LocElem pow(int e) const;  // negative e requires a unit

    bool is_unit() const;
    LocElem inverse() const;  // throws NonUnitError

    LocElem derivative(int v) const;

    bool operator==(const LocElem& o) const;
    bool operator!=(const LocElem& o) const { return !(*this == o); }

  private:
    void canonicalize();
    RingPtr ring_;
    MPoly num_;
    std::vector<int> dexp_;
};

std::string to_string(const LocElem& e);
LocElem parse_locelem(const RingPtr& ring, const std::string& src);

}  // namespace wgm
