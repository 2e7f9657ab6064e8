#pragma once

#include <utility>
#include <vector>

#include "toruscount/angle.hpp"
#include "toruscount/cyclotomic.hpp"
#include "toruscount/limits.hpp"
#include "toruscount/rational.hpp"

namespace toruscount {

/// One side of a polar rational polygon in folded normal form: a nonzero
/// rational coefficient and an angle in [0, 1/2).  The side's geometric
/// direction is angle for positive coefficients and angle + 1/2 for negative
/// ones; its length is |coeff|.
struct PrpSide {
    Rational coeff;
    Angle angle;

    friend bool operator==(const PrpSide&, const PrpSide&) = default;
};

/// Polar rational polygon: a normalized formal Q-linear combination of roots
/// of unity.  Sides are kept with strictly increasing folded angles, so two
/// polygons are equal exactly when their side lists are.
class Prp {
public:
    Prp() = default;

    /// Folds angles >= 1/2 by negating the coefficient, combines equal
    /// angles, drops zero coefficients and sorts.  The represented value
    /// sum coeff_i * zeta^(angle_i) is preserved.
    static Prp normalize(const std::vector<std::pair<Rational, Angle>>& terms);

    /// The vanishing p-term relation at level n: requires p prime, p | n and
    /// p^2 not dividing n.  For n = p this is the regular p-gon relation
    /// 1 + zeta_p + ... + zeta_p^(p-1).
    static Prp generator(const Integer& n, const Integer& p);

    const std::vector<PrpSide>& sides() const { return sides_; }
    bool empty() const { return sides_.empty(); }

    /// Number of sides.
    std::size_t length() const { return sides_.size(); }

    /// Least n such that one global rotation makes every side direction an
    /// n-torsion angle: the lcm of the direction differences to the first
    /// side.  The empty polygon has order 1 by convention.
    Integer order() const;

    /// (direction in [0,1), positive length) per side, in side order.
    std::vector<std::pair<Angle, Rational>> directed_sides() const;

    Cyclotomic evaluate() const;
    bool vanishes() const { return evaluate().is_zero(); }

    friend Prp operator+(const Prp& a, const Prp& b);
    /// Scalar-and-rotation action q * zeta^rot * T.
    Prp scaled(const Rational& q, const Angle& rotation) const;

    /// True when no proper nonempty subset of sides sums to zero.
    bool is_primitive(const Limits& limits = {}) const;

    /// One q * zeta^rotation * T_prime summand of a decomposition.
    /// Rotations are reduced modulo 1/prime, under which the prime-gon is
    /// invariant.
    struct SchoenbergTerm {
        Rational scale;
        Angle rotation;
        Integer prime;

        friend bool operator==(const SchoenbergTerm&, const SchoenbergTerm&) = default;
    };

    /// Writes a vanishing polygon as a sum of scaled rotated prime-gons.
    /// Recombining the terms reproduces the polygon exactly.  Throws
    /// domain_error for non-vanishing input.
    std::vector<SchoenbergTerm> schoenberg_decompose(const Limits& limits = {}) const;

    friend bool operator==(const Prp&, const Prp&) = default;

private:
    std::vector<PrpSide> sides_;
};

/// Sum of the terms as polygons; the round-trip check for decompositions.
Prp recombine(const std::vector<Prp::SchoenbergTerm>& terms);

}  // namespace toruscount
