#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mfib {

// Arbitrary-precision unsigned integer.
// Limbs are 64-bit, little-endian, normalized (no trailing zero limbs; empty vector is 0).
class BigNat {
  public:
    BigNat() = default;
    BigNat(std::uint64_t v) { if (v) limbs_.push_back(v); }

    static BigNat from_decimal(std::string_view s);
    std::string to_decimal() const;

    bool is_zero() const { return limbs_.empty(); }
    bool is_one() const { return limbs_.size() == 1 && limbs_[0] == 1; }
    std::size_t limb_count() const { return limbs_.size(); }
    std::size_t bit_length() const;

    // Fits-check and narrowing; throws std::overflow_error when too large.
    bool fits_u64() const { return limbs_.size() <= 1; }
    std::uint64_t to_u64() const;

    friend BigNat operator+(const BigNat& a, const BigNat& b);
    // Requires a >= b; throws std::underflow_error otherwise.
    friend BigNat operator-(const BigNat& a, const BigNat& b);
    friend BigNat operator*(const BigNat& a, const BigNat& b);
    friend BigNat operator/(const BigNat& a, const BigNat& b) { return divrem(a, b).first; }
    friend BigNat operator%(const BigNat& a, const BigNat& b) { return divrem(a, b).second; }

    BigNat& operator+=(const BigNat& o) { *this = *this + o; return *this; }
    BigNat& operator-=(const BigNat& o) { *this = *this - o; return *this; }
    BigNat& operator*=(const BigNat& o) { *this = *this * o; return *this; }

    // Quotient and remainder; throws std::domain_error on zero divisor.
    static std::pair<BigNat, BigNat> divrem(const BigNat& u, const BigNat& v);

    BigNat operator<<(unsigned bits) const;
    BigNat operator>>(unsigned bits) const;

    friend std::strong_ordering operator<=>(const BigNat& a, const BigNat& b);
    friend bool operator==(const BigNat& a, const BigNat& b) { return a.limbs_ == b.limbs_; }

    friend BigNat gcd(BigNat a, BigNat b);

    // Floor square root (Newton iteration).
    friend BigNat isqrt(const BigNat& n);

    static BigNat pow10(unsigned k);

  private:
    std::vector<std::uint64_t> limbs_;
    void trim();
};

}  // namespace mfib
