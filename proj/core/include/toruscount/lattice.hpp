#pragma once

#include <optional>
#include <vector>

#include "toruscount/angle.hpp"
#include "toruscount/matrix.hpp"

namespace toruscount {

/// Row-style Hermite normal form: pivots positive, entries above each pivot
/// reduced into [0, pivot), zero rows swept to the bottom.  Deterministic.
struct HermiteResult {
    IntMatrix h;          // same shape as the input
    IntMatrix transform;  // unimodular, transform * input == h
    std::size_t rank;
    std::vector<std::size_t> pivot_cols;  // one per nonzero row
};
HermiteResult hermite_form(const IntMatrix& m);

/// U * M * V == D with U, V unimodular and the diagonal of D a divisibility
/// chain d1 | d2 | ... of nonnegative integers.  Deterministic for the
/// smallest-magnitude pivot rule.
struct SmithDecomposition {
    IntMatrix u, v, d;
    IntMatrix v_inverse;
    std::size_t rank;            // number of nonzero diagonal entries
    std::vector<Integer> diag;   // the nonzero d1..dk
};
SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Invariant factors (> 1) of the quotient saturation/lattice, with the
/// largest element order of that finite group.
struct QuotientInvariants {
    std::vector<Integer> invariant_factors;
    Integer largest_order;  // 1 when the quotient is trivial
};

/// Subgroup of Z^r presented by generator rows, with its Hermite basis cached
/// at construction.  Immutable; equality compares the canonical basis.
class Lattice {
public:
    Lattice() : Lattice(0) {}
    /// The zero lattice in Z^r.
    explicit Lattice(std::size_t ambient_rank);
    Lattice(std::size_t ambient_rank, const IntMatrix& generators);
    Lattice(std::size_t ambient_rank, const std::vector<std::vector<Integer>>& generators);

    static Lattice full(std::size_t ambient_rank);

    std::size_t ambient_rank() const { return ambient_; }
    std::size_t rank() const { return basis_.rows(); }
    /// Canonical Hermite basis, one row per basis vector (rank rows).
    const IntMatrix& basis() const { return basis_; }
    const IntMatrix& generators() const { return gens_; }

    bool is_zero() const { return rank() == 0; }

    bool contains(const std::vector<Integer>& v) const;
    /// Integer coordinates of v with respect to generators(), when v lies in
    /// the lattice.
    std::optional<std::vector<Integer>> express_in_generators(const std::vector<Integer>& v) const;

    /// Lattice generated by both generator sets.
    Lattice sum(const Lattice& other) const;

    /// Smallest subgroup containing this one whose quotient in Z^r is free:
    /// all vectors with a positive multiple in the lattice.
    Lattice saturation() const;

    QuotientInvariants quotient_invariants() const;

    bool subset_of(const Lattice& other) const;

    friend bool operator==(const Lattice& a, const Lattice& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_;
    IntMatrix gens_;
    IntMatrix basis_;            // Hermite, nonzero rows only
    IntMatrix basis_transform_;  // rows of basis_ = basis_transform_ * gens_
    std::vector<std::size_t> pivot_cols_;
};

/// Solution data for A * a = n*c (mod n) over a in (Z/n)^r.
/// `count` is zero exactly when the system has no solution mod n (including
/// any n*c_i non-integral).  When solvable, `particular` holds one solution
/// and `kernel` parametrizes all of them: a = particular + sum t_g * vec_g
/// (mod n) with t_g ranging over [0, order_g).
struct CongruenceCount {
    Integer count;
    std::optional<std::vector<Integer>> particular;
    struct KernelGenerator {
        std::vector<Integer> vec;
        Integer order;
    };
    std::vector<KernelGenerator> kernel;
};

CongruenceCount count_congruences(const IntMatrix& a, const std::vector<Angle>& c,
                                  const Integer& n);
/// Same, reusing a Smith decomposition of the row matrix.
CongruenceCount count_congruences(const SmithDecomposition& snf, std::size_t unknowns,
                                  const std::vector<Angle>& c, const Integer& n);

}  // namespace toruscount
