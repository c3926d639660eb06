#pragma once

#include <compare>
#include <string>

#include "mfib/rational.hpp"

namespace mfib {

// Exact element a + b*sqrt(5) of the real quadratic field Q(sqrt5).
// Sign decisions never touch floating point: when the two components
// disagree in sign, a^2 is compared against 5*b^2.
class QSqrt5 {
  public:
    QSqrt5() = default;
    QSqrt5(Rational a) : a_(std::move(a)) {}
    QSqrt5(std::int64_t a) : a_(a) {}
    QSqrt5(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static QSqrt5 sqrt5() { return QSqrt5{Rational{0}, Rational{1}}; }
    static QSqrt5 phi() { return QSqrt5{Rational{BigInt{1}, BigNat{2}}, Rational{BigInt{1}, BigNat{2}}}; }
    static QSqrt5 phi_bar() { return QSqrt5{Rational{BigInt{1}, BigNat{2}}, Rational{BigInt{-1}, BigNat{2}}}; }

    const Rational& rational_part() const { return a_; }
    const Rational& sqrt5_part() const { return b_; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    // -1, 0 or +1, decided exactly.
    int sign() const;

    QSqrt5 operator-() const { return QSqrt5{-a_, -b_}; }
    friend QSqrt5 operator+(const QSqrt5& x, const QSqrt5& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
    friend QSqrt5 operator-(const QSqrt5& x, const QSqrt5& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
    friend QSqrt5 operator*(const QSqrt5& x, const QSqrt5& y);
    friend QSqrt5 operator/(const QSqrt5& x, const QSqrt5& y) { return x * y.inverse(); }

    QSqrt5& operator+=(const QSqrt5& o) { *this = *this + o; return *this; }
    QSqrt5& operator-=(const QSqrt5& o) { *this = *this - o; return *this; }
    QSqrt5& operator*=(const QSqrt5& o) { *this = *this * o; return *this; }
    QSqrt5& operator/=(const QSqrt5& o) { *this = *this / o; return *this; }

    // Field inverse via the conjugate; throws std::domain_error at zero.
    QSqrt5 inverse() const;

    // Square-and-multiply power; negative exponents go through inverse().
    QSqrt5 pow(int e) const;

    friend bool operator==(const QSqrt5& x, const QSqrt5& y) = default;
    friend bool operator<(const QSqrt5& x, const QSqrt5& y) { return (x - y).sign() < 0; }
    friend bool operator>(const QSqrt5& x, const QSqrt5& y) { return (x - y).sign() > 0; }
    friend bool operator<=(const QSqrt5& x, const QSqrt5& y) { return (x - y).sign() <= 0; }
    friend bool operator>=(const QSqrt5& x, const QSqrt5& y) { return (x - y).sign() >= 0; }

    // "a/b + c/d*sqrt5"
    std::string to_string() const;

    // Decimal string truncated toward zero at `digits` places, computed with
    // integer square roots only.
    std::string to_decimal(unsigned digits) const;

  private:
    Rational a_;
    Rational b_;
};

}  // namespace mfib
