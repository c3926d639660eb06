#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "mfib/bignat.hpp"

namespace mfib {

// Signed arbitrary-precision integer. Sign is -1, 0 or +1; zero magnitude
// always carries sign 0.
class BigInt {
  public:
    BigInt() = default;
    BigInt(std::int64_t v);
    BigInt(BigNat mag, int sign = 1);

    static BigInt from_decimal(std::string_view s);
    std::string to_decimal() const;

    int sign() const { return sign_; }
    bool is_zero() const { return sign_ == 0; }
    const BigNat& magnitude() const { return mag_; }

    BigInt operator-() const;
    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);

    BigInt& operator+=(const BigInt& o) { *this = *this + o; return *this; }
    BigInt& operator-=(const BigInt& o) { *this = *this - o; return *this; }
    BigInt& operator*=(const BigInt& o) { *this = *this * o; return *this; }

    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b);
    friend bool operator==(const BigInt& a, const BigInt& b) = default;

  private:
    BigNat mag_;
    int sign_ = 0;
    void normalize() { if (mag_.is_zero()) sign_ = 0; }
};

}  // namespace mfib
