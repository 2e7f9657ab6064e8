#pragma once

#include <cstdint>
#include <vector>

#include "toruscount/laurent.hpp"
#include "toruscount/rational.hpp"

namespace toruscount {

/// Caps for the brute-force torsion counter.  The counter is the trusted
/// reference in tests, so it stays a plain enumeration.
struct OracleConfig {
    long max_n = 16;
    std::size_t max_rank = 4;
    std::uint64_t budget = 10'000'000;
};

/// Torsion points theta in (k_1/n, ..., k_r/n) satisfying every polynomial
/// exactly, order dividing n.
Integer brute_count_dividing(const std::vector<LaurentPolynomial>& polynomials, long n,
                             const OracleConfig& config = {});

/// Same enumeration restricted to tuples of order exactly n.
Integer brute_count_exact_order(const std::vector<LaurentPolynomial>& polynomials, long n,
                                const OracleConfig& config = {});

}  // namespace toruscount
