#include "toruscount/numutil.hpp"

#include <algorithm>
#include <stdexcept>

namespace toruscount {

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    // 25 Miller-Rabin rounds: deterministic for every size reached here.
    return mpz_probab_prime_p(n.get_mpz_t(), 25) != 0;
}

std::vector<Integer> primes_up_to(const Integer& bound) {
    std::vector<Integer> out;
    for (Integer p = 2; p <= bound; ++p) {
        if (is_prime(p)) out.push_back(p);
    }
    return out;
}

Integer prime_product_up_to(const Integer& bound) {
    Integer r = 1;
    for (const Integer& p : primes_up_to(bound)) r *= p;
    return r;
}

std::vector<Integer> divisors(const Integer& n) {
    if (n <= 0) throw std::domain_error("divisors of nonpositive integer");
    std::vector<Integer> out;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Integer> prime_factors(const Integer& n) {
    if (n <= 0) throw std::domain_error("prime factors of nonpositive integer");
    std::vector<Integer> out;
    Integer m = n;
    for (Integer p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            out.push_back(p);
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) out.push_back(m);
    return out;
}

bool is_squarefree(const Integer& n) {
    Integer m = n;
    for (Integer p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            m /= p;
            if (m % p == 0) return false;
        }
    }
    return true;
}

Integer euler_phi(const Integer& n) {
    Integer r = n;
    for (const Integer& p : prime_factors(n)) {
        r -= r / p;
    }
    return r;
}

int moebius(const Integer& n) {
    if (n == 1) return 1;
    int k = 0;
    Integer m = n;
    for (Integer p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            m /= p;
            if (m % p == 0) return 0;
            ++k;
        }
    }
    if (m > 1) ++k;
    return (k % 2 == 0) ? 1 : -1;
}

}  // namespace toruscount
