#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "mfib/bigint.hpp"
#include "mfib/bignat.hpp"

namespace mfib {

// Exact rational number, always in lowest terms with positive denominator.
// Zero is 0/1.
class Rational {
  public:
    Rational() : den_(1) {}
    Rational(std::int64_t v) : num_(v), den_(1) {}
    Rational(BigInt num, BigNat den);
    Rational(BigInt v) : num_(std::move(v)), den_(1) {}
    Rational(BigNat v) : num_(std::move(v), 1), den_(1) {}

    // Parses "a/b", a plain integer, or a decimal like "-0.0671".
    static Rational parse(std::string_view s);

    const BigInt& num() const { return num_; }
    const BigNat& den() const { return den_; }
    int sign() const { return num_.sign(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_.is_one(); }

    // Always "num/den", matching the wire format for exact rationals.
    std::string to_string() const;

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& o) { *this = *this + o; return *this; }
    Rational& operator-=(const Rational& o) { *this = *this - o; return *this; }
    Rational& operator*=(const Rational& o) { *this = *this * o; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    // Cross-multiplied comparison; no normalization cost beyond the multiply.
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

  private:
    BigInt num_;
    BigNat den_;
    void reduce();
};

}  // namespace mfib
