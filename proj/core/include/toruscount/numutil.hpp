#pragma once

#include <vector>

#include "toruscount/rational.hpp"

namespace toruscount {

bool is_prime(const Integer& n);

/// Primes p <= bound, ascending.
std::vector<Integer> primes_up_to(const Integer& bound);

/// Product of the distinct primes <= bound (1 when bound < 2).
Integer prime_product_up_to(const Integer& bound);

/// All positive divisors of n > 0, ascending.
std::vector<Integer> divisors(const Integer& n);

/// Distinct prime factors of n > 0, ascending.
std::vector<Integer> prime_factors(const Integer& n);

bool is_squarefree(const Integer& n);

Integer euler_phi(const Integer& n);

/// Moebius function of n > 0.
int moebius(const Integer& n);

}  // namespace toruscount
