#pragma once

#include <complex>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "toruscount/angle.hpp"
#include "toruscount/rational.hpp"

namespace toruscount {

/// Coefficients of the n-th cyclotomic polynomial, low degree first.
/// Monic of degree phi(n); computed by recursive exact division of x^n - 1
/// and cached.
const std::vector<Integer>& cyclotomic_polynomial(unsigned long n);

/// Row k holds the coefficients of x^k reduced modulo the n-th cyclotomic
/// polynomial, for k = 0..n-1.  Rows have length phi(n) and integer entries.
/// Shared cache; safe for concurrent readers.
const std::vector<std::vector<Integer>>& zeta_power_table(unsigned long n);

/// Element of the n-th cyclotomic field in the reduced power basis
/// 1, z, ..., z^(phi(n)-1) where z = exp(2*pi*i/n).  Coefficients are kept
/// fully reduced, so equality at a common level is coefficient-wise.
class Cyclotomic {
public:
    Cyclotomic() : level_(1), coeffs_(1, Rational(0)) {}

    static Cyclotomic zero(unsigned long level);
    static Cyclotomic from_rational(const Rational& q, unsigned long level = 1);
    /// z_n^k for any integer k (reduced mod n).
    static Cyclotomic root(unsigned long level, long k);
    /// The root of unity with the given angle, at level order(angle).
    static Cyclotomic from_angle(const Angle& a);
    /// Arbitrary coefficient vector, reduced modulo the level polynomial.
    static Cyclotomic from_coefficients(unsigned long level, std::vector<Rational> poly);

    unsigned long level() const { return level_; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    bool is_zero() const;
    /// True when the value lies in Q; then rational_value() is defined.
    bool is_rational() const;
    Rational rational_value() const;

    /// Same element re-expressed at a level that this level divides.
    Cyclotomic promoted(unsigned long new_level) const;

    Cyclotomic operator-() const;
    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Rational& q, const Cyclotomic& a);

    /// Multiplicative inverse (the level field is a field).
    Cyclotomic inverse() const;

    /// Equality after promotion to the lcm level.
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

    /// Display-only numeric value.
    std::complex<double> to_complex() const;

private:
    Cyclotomic(unsigned long level, std::vector<Rational> coeffs)
        : level_(level), coeffs_(std::move(coeffs)) {}

    unsigned long level_;
    std::vector<Rational> coeffs_;  // size phi(level_), reduced
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c);

/// Exact value of sum a_i * zeta^(theta_i) at level lcm of the angle orders.
Cyclotomic eval_root_sum(std::span<const std::pair<Rational, Angle>> terms);
Cyclotomic eval_root_sum(const std::vector<std::pair<Rational, Angle>>& terms);

}  // namespace toruscount
