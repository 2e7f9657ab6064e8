#pragma once

#include <vector>

#include "toruscount/angle.hpp"
#include "toruscount/laurent.hpp"
#include "toruscount/limits.hpp"
#include "toruscount/rational.hpp"

namespace toruscount {

/// The normalized block equation sum a_i * e_i = 1 with s-1 nonzero rational
/// coefficients, s being the originating block size.
struct UnitEquation {
    std::vector<Rational> coefficients;
};

/// A torsion solution tuple.  Substituted into the full s-term relation it
/// gives exact cyclotomic zero, and no proper nonempty sub-collection of the
/// terms (constant included) vanishes.
struct TorsionSolution {
    std::vector<Angle> angles;
    Integer order;  // lcm of coordinate angle orders

    friend bool operator==(const TorsionSolution&, const TorsionSolution&) = default;
};

/// Candidate solution orders for a block of size s: all divisors of the
/// product of primes <= s, ascending.  Non-degenerate solutions have
/// square-free order with prime factors <= s, so the search over these
/// levels is complete.
std::vector<Integer> mann_orders(int block_size);

/// All non-degenerate torsion solutions, verified in exact cyclotomic
/// arithmetic and sorted lexicographically by angle vector.
std::vector<TorsionSolution> solve_unit_equation(const UnitEquation& eq,
                                                 const Limits& limits = {});

/// Non-degenerate solution set of one partition block, in the coordinates of
/// the block members ordered ascending with the lexicographically smallest
/// exponent removed as the base point.
struct BlockSolutions {
    std::size_t base;                  // support index of the base exponent
    std::vector<std::size_t> members;  // remaining support indices, ascending
    UnitEquation equation;
    std::vector<TorsionSolution> solutions;
};

/// Per-block solution data whose Cartesian product is the partition's
/// solution set.
struct SolutionSet {
    std::vector<BlockSolutions> blocks;

    /// True when the product set is empty (some block has no solutions).
    bool empty() const;
    /// Number of product tuples.
    Integer tuple_count() const;
};

SolutionSet partition_solutions(const LaurentPolynomial& f, const Partition& p,
                                const Limits& limits = {});

/// Largest order among product tuples, 1 for the empty set.
Integer max_solution_order(const SolutionSet& s);

/// lcm of the orders of all product tuples, 1 for the empty set.
Integer lcm_solution_order(const SolutionSet& s);

/// lcm of max_solution_order over all admissible partitions of f.
Integer polynomial_order_lcm(const LaurentPolynomial& f, const Limits& limits = {});

}  // namespace toruscount
