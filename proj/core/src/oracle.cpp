#include "toruscount/oracle.hpp"

#include <numeric>

#include "toruscount/cyclotomic.hpp"
#include "toruscount/errors.hpp"

namespace toruscount {

namespace {

struct ScaledPolynomial {
    std::vector<Integer> coeffs;
    std::vector<Exponent> exponents;
};

Integer count_impl(const std::vector<LaurentPolynomial>& polynomials, long n,
                   const OracleConfig& config, bool exact_order) {
    if (polynomials.empty()) throw std::invalid_argument("no polynomials given");
    if (n < 1) throw std::invalid_argument("order must be positive");
    const std::size_t r = polynomials[0].rank();
    for (const auto& f : polynomials) {
        if (f.rank() != r) throw std::invalid_argument("mixed ambient ranks");
    }
    if (n > config.max_n)
        throw CapError("oracle order " + std::to_string(n) + " too large",
                       "oracle max_n=" + std::to_string(config.max_n));
    if (r > config.max_rank)
        throw CapError("oracle rank " + std::to_string(r) + " too large",
                       "oracle max_rank=" + std::to_string(config.max_rank));
    double evals = static_cast<double>(polynomials.size());
    for (std::size_t i = 0; i < r; ++i) evals *= static_cast<double>(n);
    if (evals > static_cast<double>(config.budget))
        throw CapError("oracle enumeration too large",
                       "oracle budget=" + std::to_string(config.budget));

    // Scale each polynomial to integer coefficients.
    std::vector<ScaledPolynomial> scaled;
    for (const auto& f : polynomials) {
        Integer denom = 1;
        for (const auto& [e, c] : f.terms()) denom = lcm(denom, c.den());
        ScaledPolynomial sp;
        for (const auto& [e, c] : f.terms()) {
            sp.coeffs.push_back(c.num() * (denom / c.den()));
            sp.exponents.push_back(e);
        }
        scaled.push_back(std::move(sp));
    }

    const auto& table = zeta_power_table(static_cast<unsigned long>(n));
    const std::size_t deg = table[0].size();
    std::vector<Integer> acc(deg);

    std::vector<long> point(r, 0);
    Integer count = 0;
    while (true) {
        bool admissible = true;
        if (exact_order) {
            long g = n;
            for (long v : point) g = std::gcd(g, v);
            admissible = (g == 1);
        }
        if (admissible) {
            bool on_variety = true;
            for (const auto& sp : scaled) {
                for (Integer& c : acc) c = 0;
                for (std::size_t t = 0; t < sp.coeffs.size(); ++t) {
                    long e = 0;
                    for (std::size_t j = 0; j < r; ++j) {
                        long term = static_cast<long>(sp.exponents[t][j] % n) * point[j] % n;
                        e = (e + term) % n;
                    }
                    if (e < 0) e += n;
                    const auto& row = table[static_cast<std::size_t>(e)];
                    for (std::size_t j = 0; j < deg; ++j) acc[j] += sp.coeffs[t] * row[j];
                }
                for (const Integer& c : acc) {
                    if (c != 0) {
                        on_variety = false;
                        break;
                    }
                }
                if (!on_variety) break;
            }
            if (on_variety) ++count;
        }
        std::size_t k = 0;
        while (k < r && ++point[k] == n) point[k++] = 0;
        if (k == r) break;
    }
    return count;
}

}  // namespace

Integer brute_count_dividing(const std::vector<LaurentPolynomial>& polynomials, long n,
                             const OracleConfig& config) {
    return count_impl(polynomials, n, config, false);
}

Integer brute_count_exact_order(const std::vector<LaurentPolynomial>& polynomials, long n,
                                const OracleConfig& config) {
    return count_impl(polynomials, n, config, true);
}

}  // namespace toruscount
