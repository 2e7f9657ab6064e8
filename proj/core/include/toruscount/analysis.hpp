#pragma once

#include <vector>

#include "toruscount/laurent.hpp"
#include "toruscount/limits.hpp"
#include "toruscount/planes.hpp"
#include "toruscount/vanishing.hpp"

namespace toruscount {

/// Data attached to one partition tuple.
struct PiRecord {
    std::vector<Partition> tuple;  // one partition per polynomial
    Lattice difference;            // sum of per-polynomial difference lattices
    Lattice saturated;
    std::size_t rank;
    bool realizable;      // some solution choice yields a consistent system
    Integer order_lcm;    // lcm of solution-tuple orders, 1 when the set is empty
};

/// One solution choice and its intersected congruence system.
struct FiberSystem {
    std::size_t pi_index;
    std::vector<Angle> solution_angles;  // flattened block solutions, in row order
    CongruenceSystem system;
    bool consistent;
};

/// The closure of the torsion points as a finite union of congruence-system
/// solution sets, with the maximal planes extracted.
struct Decomposition {
    std::vector<LaurentPolynomial> polynomials;
    std::size_t ambient_rank;
    std::vector<PiRecord> tuples;
    std::vector<FiberSystem> fibers;
    std::vector<CongruenceSystem> counting_systems;  // consistent, deduplicated, pruned
    std::vector<RationalPlane> maximal_planes;
};

/// Requires nonzero polynomials with a common rank and supports of size >= 2.
Decomposition decompose(const std::vector<LaurentPolynomial>& polynomials,
                        const Limits& limits = {});

/// Degree and period data.  `degree` is exact; the period is only bounded:
/// the fitted period divides period_bound_MD, which divides period_bound_NR
/// up to the factor M | N_R.
struct AnalysisReport {
    int degree;
    int degree_bound;
    Integer M;    // lcm of solution orders across partition tuples
    Integer D;    // lcm of the largest quotient orders over tuple subsets
    bool D_exact;  // false when the subset family was truncated to a chain
    Integer R;    // largest support size
    Integer N_R;  // product of primes up to R
    Integer period_bound_MD;
    Integer period_bound_NR;
};

AnalysisReport analyze(const Decomposition& dec);

/// Inclusion-exclusion counter over the decomposition's congruence systems.
/// Built once, then queried per n in near-constant time.
class TorsionCounter {
public:
    explicit TorsionCounter(const Decomposition& dec, const Limits& limits = {});

    /// Number of torsion points of order dividing n on the variety.
    Integer count_dividing(const Integer& n) const;

    /// Number of torsion points of order exactly n (Moebius inversion of
    /// count_dividing over the divisors of n).
    Integer count_exact_order(const Integer& n) const;

    std::size_t term_count() const { return atoms_.size(); }

private:
    std::vector<std::pair<Integer, CongruenceSystem>> atoms_;
};

/// p(n) = sum of coeffs[i][n mod period] * n^i.
struct PolynomialPeriodicFunction {
    Integer period;
    int degree;
    std::vector<std::vector<Rational>> coeffs;  // [i][residue]

    Rational evaluate(const Integer& n) const;
};

/// Fits the dividing count to a polynomial-periodic form: the least divisor
/// of the period bound consistent with exact interpolation per residue
/// class, cross-validated on extra samples.
PolynomialPeriodicFunction fit_counting_function(const Decomposition& dec,
                                                 const AnalysisReport& report,
                                                 const Limits& limits = {});

}  // namespace toruscount
