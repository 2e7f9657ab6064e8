#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "toruscount/rational.hpp"

namespace toruscount {

/// An element of Q/Z: a rational reduced modulo 1 into [0, 1).
/// Angles model arguments of roots of unity divided by a full turn, so the
/// root of unity with angle a is exp(2*pi*i*a).
class Angle {
public:
    Angle() = default;
    explicit Angle(const Rational& value) : v_(reduce(value)) {}
    Angle(const Integer& num, const Integer& den) : v_(reduce(Rational(num, den))) {}
    Angle(long num, long den) : v_(reduce(Rational(num, den))) {}

    static Angle from_string(std::string_view text) {
        return Angle(Rational::from_string(text));
    }

    /// Representative in [0, 1), lowest terms.
    const Rational& value() const { return v_; }

    bool is_zero() const { return v_.is_zero(); }

    /// The least positive n with n*a = 0 (mod 1): the reduced denominator.
    Integer order() const { return v_.den(); }

    Angle operator-() const { return Angle(-v_); }
    friend Angle operator+(const Angle& a, const Angle& b) { return Angle(a.v_ + b.v_); }
    friend Angle operator-(const Angle& a, const Angle& b) { return Angle(a.v_ - b.v_); }
    /// Integer scaling n*a in Q/Z.
    friend Angle operator*(const Integer& n, const Angle& a) {
        return Angle(Rational(n) * a.v_);
    }

    friend bool operator==(const Angle&, const Angle&) = default;
    friend std::strong_ordering operator<=>(const Angle& a, const Angle& b) {
        return a.v_ <=> b.v_;
    }

    std::string to_string() const { return v_.to_string(); }

private:
    static Rational reduce(const Rational& q) {
        return q - Rational(fdiv(q.num(), q.den()));
    }

    Rational v_;  // invariant: 0 <= v_ < 1
};

std::ostream& operator<<(std::ostream& os, const Angle& a);

/// lcm of coordinate orders: the order of a torsion point with these angles.
Integer tuple_order(const std::vector<Angle>& angles);

}  // namespace toruscount
