#pragma once

#include <memory>
#include <vector>

#include "toruscount/angle.hpp"
#include "toruscount/lattice.hpp"
#include "toruscount/laurent.hpp"
#include "toruscount/vanishing.hpp"

namespace toruscount {

struct RationalPlane;

/// Angle-linear system A*theta = c (mod 1) over (Q/Z)^r.  Rows normalize on
/// construction: sorted, exact duplicates merged, zero rows dropped, and a
/// zero row or duplicate row with conflicting right-hand side marks the
/// system inconsistent.  Inconsistent systems are ordinary values counting
/// zero, not errors.
class CongruenceSystem {
public:
    /// The empty system on (Q/Z)^r: every point satisfies it.
    explicit CongruenceSystem(std::size_t ambient_rank);
    CongruenceSystem(std::size_t ambient_rank, const std::vector<std::vector<Integer>>& rows,
                     const std::vector<Angle>& rhs);

    std::size_t ambient_rank() const { return ambient_; }
    const IntMatrix& rows() const { return rows_; }
    const std::vector<Angle>& rhs() const { return rhs_; }

    /// True when some torsion point satisfies the system.
    bool consistent() const;

    /// Number of solutions with coordinate denominators dividing n.
    Integer count_leq(const Integer& n) const;

    /// Row concatenation; the solution set is the intersection.
    CongruenceSystem intersect(const CongruenceSystem& other) const;

    /// Subgroup of Z^r spanned by the rows.
    const Lattice& row_lattice() const;

    /// Connected components of the solution set, sorted by representative.
    /// Empty for inconsistent systems.
    std::vector<RationalPlane> components() const;

    /// True when every solution of this system also solves `other`.
    bool solutions_subset_of(const CongruenceSystem& other) const;

    friend bool operator==(const CongruenceSystem& a, const CongruenceSystem& b) {
        return a.ambient_ == b.ambient_ && a.marked_inconsistent_ == b.marked_inconsistent_ &&
               a.rows_ == b.rows_ && a.rhs_ == b.rhs_;
    }
    bool before(const CongruenceSystem& other) const;

    /// Row-derived data shared between systems with equal row matrices:
    /// many fibers differ only in their right-hand sides.
    struct RowData;

private:
    std::size_t ambient_;
    IntMatrix rows_;
    std::vector<Angle> rhs_;
    bool marked_inconsistent_ = false;
    std::shared_ptr<const RowData> rows_data_;
};

CongruenceSystem intersect_all(const std::vector<CongruenceSystem>& systems);

/// Coset of an affine subtorus by a torsion point: the solutions of
/// {lambda . theta = lambda . representative : lambda in lattice} with the
/// lattice saturated.
struct RationalPlane {
    std::vector<Angle> representative;
    Lattice lattice;

    std::size_t ambient_rank() const { return lattice.ambient_rank(); }
    std::size_t dim() const { return lattice.ambient_rank() - lattice.rank(); }

    /// Least n such that the n-th power of the plane contains the identity.
    Integer order() const;

    /// Set containment: every point of `other` lies in this plane.
    bool contains(const RationalPlane& other) const;

    /// Same point set (mutual containment, checked structurally).
    bool same_plane(const RationalPlane& other) const;
};

/// Deterministic display/dedup order: (dim, order, representative).
bool plane_before(const RationalPlane& a, const RationalPlane& b);

/// The congruence system of one solution choice for a partition of f: rows
/// (lambda - base) per block member, right-hand sides the solution angles.
/// `choice[b]` selects a solution for block b.
CongruenceSystem fiber_system(const LaurentPolynomial& f, const SolutionSet& sols,
                              const std::vector<std::size_t>& choice);

}  // namespace toruscount
