#include "toruscount/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "toruscount/errors.hpp"
#include "toruscount/numutil.hpp"

namespace toruscount {

namespace {

// Exact division of polynomials with integer coefficients, divisor monic.
// Coefficient vectors are low degree first with no trailing zeros.
std::vector<Integer> divide_exact(std::vector<Integer> num, const std::vector<Integer>& den) {
    const std::size_t dd = den.size() - 1;
    if (num.size() < den.size()) throw InternalError("non-exact polynomial division");
    std::vector<Integer> quot(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
        std::size_t k = i - dd;
        Integer c = num[i];
        if (c == 0) continue;
        quot[k] = c;
        for (std::size_t j = 0; j <= dd; ++j) num[k + j] -= c * den[j];
    }
    for (const Integer& c : num) {
        if (c != 0) throw InternalError("non-exact polynomial division");
    }
    return quot;
}

std::vector<Rational> trim(std::vector<Rational> p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

// Remainder of p modulo the monic integer polynomial m, over Q.
std::vector<Rational> mod_monic(std::vector<Rational> p, const std::vector<Integer>& m) {
    const std::size_t dd = m.size() - 1;
    p = trim(std::move(p));
    while (p.size() > dd) {
        Rational c = p.back();
        std::size_t k = p.size() - 1 - dd;
        for (std::size_t j = 0; j <= dd; ++j) p[k + j] -= c * Rational(m[j]);
        p = trim(std::move(p));
    }
    return p;
}

}  // namespace

namespace {

const std::vector<Integer>& cyclotomic_polynomial_locked(
    unsigned long n, std::map<unsigned long, std::vector<Integer>>& cache) {
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::vector<Integer> result;
    if (n == 1) {
        result = {-1, 1};  // x - 1
    } else {
        // (x^n - 1) / product of the lower-level polynomials at divisors of n.
        std::vector<Integer> num(n + 1, 0);
        num[0] = -1;
        num[n] = 1;
        for (const Integer& d : divisors(Integer(static_cast<unsigned long>(n)))) {
            unsigned long du = d.get_ui();
            if (du == n) continue;
            num = divide_exact(std::move(num), cyclotomic_polynomial_locked(du, cache));
        }
        result = std::move(num);
    }
    return cache.emplace(n, std::move(result)).first->second;
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(unsigned long n) {
    if (n == 0) throw std::domain_error("cyclotomic polynomial of level 0");
    static std::mutex mu;
    static std::map<unsigned long, std::vector<Integer>> cache;
    std::scoped_lock lock(mu);
    return cyclotomic_polynomial_locked(n, cache);
}

const std::vector<std::vector<Integer>>& zeta_power_table(unsigned long n) {
    static std::mutex mu;
    static std::map<unsigned long, std::vector<std::vector<Integer>>> cache;
    std::scoped_lock lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    const std::vector<Integer>& phi_poly = cyclotomic_polynomial(n);
    const std::size_t deg = phi_poly.size() - 1;
    std::vector<std::vector<Integer>> table(n, std::vector<Integer>(deg, 0));
    // x^k for k < deg is already reduced; beyond that multiply by x and reduce
    // using x^deg = -(lower terms), which keeps entries integral.
    for (std::size_t k = 0; k < n; ++k) {
        if (k < deg) {
            table[k][k] = 1;
            continue;
        }
        const std::vector<Integer>& prev = table[k - 1];
        std::vector<Integer>& cur = table[k];
        Integer top = prev[deg - 1];
        for (std::size_t j = deg; j-- > 1;) cur[j] = prev[j - 1] - top * phi_poly[j];
        cur[0] = -top * phi_poly[0];
    }
    return cache.emplace(n, std::move(table)).first->second;
}

Cyclotomic Cyclotomic::zero(unsigned long level) {
    return Cyclotomic(level, std::vector<Rational>(euler_phi(Integer(level)).get_ui(), Rational(0)));
}

Cyclotomic Cyclotomic::from_rational(const Rational& q, unsigned long level) {
    Cyclotomic c = zero(level);
    c.coeffs_[0] = q;
    return c;
}

Cyclotomic Cyclotomic::root(unsigned long level, long k) {
    long r = k % static_cast<long>(level);
    if (r < 0) r += static_cast<long>(level);
    const auto& row = zeta_power_table(level)[static_cast<std::size_t>(r)];
    std::vector<Rational> coeffs(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) coeffs[i] = Rational(row[i]);
    return Cyclotomic(level, std::move(coeffs));
}

Cyclotomic Cyclotomic::from_angle(const Angle& a) {
    unsigned long n = a.value().den().get_ui();
    return root(n, a.value().num().get_si());
}

Cyclotomic Cyclotomic::from_coefficients(unsigned long level, std::vector<Rational> poly) {
    std::vector<Rational> red = mod_monic(std::move(poly), cyclotomic_polynomial(level));
    red.resize(euler_phi(Integer(level)).get_ui(), Rational(0));
    return Cyclotomic(level, std::move(red));
}

bool Cyclotomic::is_zero() const {
    for (const Rational& c : coeffs_) {
        if (!c.is_zero()) return false;
    }
    return true;
}

bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        if (!coeffs_[i].is_zero()) return false;
    }
    return true;
}

Rational Cyclotomic::rational_value() const {
    if (!is_rational()) throw std::domain_error("value is not rational");
    return coeffs_[0];
}

Cyclotomic Cyclotomic::promoted(unsigned long new_level) const {
    if (new_level == level_) return *this;
    if (new_level % level_ != 0) throw std::domain_error("promotion level must be a multiple");
    unsigned long stride = new_level / level_;
    std::vector<Rational> poly(coeffs_.size() * stride, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) poly[i * stride] = coeffs_[i];
    return from_coefficients(new_level, std::move(poly));
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (Rational& c : r.coeffs_) c = -c;
    return r;
}

namespace {
unsigned long common_level(const Cyclotomic& a, const Cyclotomic& b) {
    return lcm(Integer(a.level()), Integer(b.level())).get_ui();
}
}  // namespace

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    unsigned long n = common_level(a, b);
    Cyclotomic x = a.promoted(n);
    Cyclotomic y = b.promoted(n);
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
    return x;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    return a + (-b);
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    unsigned long n = common_level(a, b);
    Cyclotomic x = a.promoted(n);
    Cyclotomic y = b.promoted(n);
    std::vector<Rational> prod(x.coeffs_.size() + y.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
        if (x.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < y.coeffs_.size(); ++j) {
            if (y.coeffs_[j].is_zero()) continue;
            prod[i + j] += x.coeffs_[i] * y.coeffs_[j];
        }
    }
    return Cyclotomic::from_coefficients(n, std::move(prod));
}

Cyclotomic operator*(const Rational& q, const Cyclotomic& a) {
    Cyclotomic r = a;
    for (Rational& c : r.coeffs_) c *= q;
    return r;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    // Extended Euclid over Q[x] against the level polynomial.
    const std::vector<Integer>& phi_int = cyclotomic_polynomial(level_);
    std::vector<Rational> r0(phi_int.size());
    for (std::size_t i = 0; i < phi_int.size(); ++i) r0[i] = Rational(phi_int[i]);
    std::vector<Rational> r1 = trim(coeffs_);
    std::vector<Rational> s0 = {};            // coefficient of *this in r0
    std::vector<Rational> s1 = {Rational(1)};  // coefficient of *this in r1

    auto poly_sub_scaled = [](std::vector<Rational> a, const std::vector<Rational>& b,
                              const Rational& c, std::size_t shift) {
        if (a.size() < b.size() + shift) a.resize(b.size() + shift, Rational(0));
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
        return trim(std::move(a));
    };

    while (!(r1.size() == 1 || r1.empty())) {
        // one full division step: r0 = q*r1 + r
        std::vector<Rational> r = r0;
        std::vector<Rational> s = s0;
        while (r.size() >= r1.size() && !r.empty()) {
            Rational c = r.back() / r1.back();
            std::size_t shift = r.size() - r1.size();
            // track the Bezout coefficient alongside the remainder
            std::vector<Rational> shifted_s1 = s1;
            if (!shifted_s1.empty()) {
                std::vector<Rational> tmp(shift, Rational(0));
                tmp.insert(tmp.end(), shifted_s1.begin(), shifted_s1.end());
                shifted_s1 = std::move(tmp);
            }
            if (s.size() < shifted_s1.size()) s.resize(shifted_s1.size(), Rational(0));
            for (std::size_t i = 0; i < shifted_s1.size(); ++i) s[i] -= c * shifted_s1[i];
            r = poly_sub_scaled(std::move(r), r1, c, shift);
        }
        r0 = std::move(r1);
        s0 = std::move(s1);
        r1 = std::move(r);
        s1 = trim(std::move(s));
    }
    if (r1.empty()) throw InternalError("level polynomial shares a factor with a field element");
    Rational unit = r1[0].reciprocal();
    for (Rational& c : s1) c *= unit;
    return from_coefficients(level_, std::move(s1));
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    unsigned long n = common_level(a, b);
    return a.promoted(n).coeffs_ == b.promoted(n).coeffs_;
}

std::complex<double> Cyclotomic::to_complex() const {
    std::complex<double> z = 0;
    double arg = 2.0 * std::numbers::pi / static_cast<double>(level_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        double a = arg * static_cast<double>(i);
        z += coeffs_[i].to_double() * std::complex<double>(std::cos(a), std::sin(a));
    }
    return z;
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) {
    os << "[level " << c.level() << ":";
    for (const Rational& q : c.coefficients()) os << " " << q;
    return os << "]";
}

Cyclotomic eval_root_sum(std::span<const std::pair<Rational, Angle>> terms) {
    Integer level = 1;
    for (const auto& [coeff, angle] : terms) level = lcm(level, angle.order());
    unsigned long n = level.get_ui();
    std::vector<Rational> poly(euler_phi(level).get_ui(), Rational(0));
    const auto& table = zeta_power_table(n);
    for (const auto& [coeff, angle] : terms) {
        Integer exponent = angle.value().num() * (level / angle.order());
        const auto& row = table[exponent.get_ui()];
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (row[i] != 0) poly[i] += coeff * Rational(row[i]);
        }
    }
    return Cyclotomic::from_coefficients(n, std::move(poly));
}

Cyclotomic eval_root_sum(const std::vector<std::pair<Rational, Angle>>& terms) {
    return eval_root_sum(std::span<const std::pair<Rational, Angle>>(terms));
}

}  // namespace toruscount
