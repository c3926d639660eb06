#include "mfib/bigint.hpp"

#include <stdexcept>

namespace mfib {

BigInt::BigInt(std::int64_t v) {
    if (v == 0) return;
    sign_ = v > 0 ? 1 : -1;
    // careful with INT64_MIN
    std::uint64_t mag = v > 0 ? (std::uint64_t)v : ~(std::uint64_t)v + 1;
    mag_ = BigNat{mag};
}

BigInt::BigInt(BigNat mag, int sign) : mag_(std::move(mag)), sign_(sign) {
    if (sign != 1 && sign != -1 && sign != 0)
        throw std::invalid_argument("BigInt: sign must be -1, 0 or 1");
    normalize();
    if (!mag_.is_zero() && sign == 0)
        throw std::invalid_argument("BigInt: nonzero magnitude with zero sign");
}

BigInt BigInt::from_decimal(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("BigInt::from_decimal: empty string");
    int sign = 1;
    if (s.front() == '-') { sign = -1; s.remove_prefix(1); }
    else if (s.front() == '+') { s.remove_prefix(1); }
    return BigInt{BigNat::from_decimal(s), sign};
}

std::string BigInt::to_decimal() const {
    return sign_ < 0 ? "-" + mag_.to_decimal() : mag_.to_decimal();
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    if (a.sign_ == b.sign_) return BigInt{a.mag_ + b.mag_, a.sign_};
    auto c = a.mag_ <=> b.mag_;
    if (c == 0) return BigInt{};
    return c > 0 ? BigInt{a.mag_ - b.mag_, a.sign_} : BigInt{b.mag_ - a.mag_, b.sign_};
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt{};
    return BigInt{a.mag_ * b.mag_, a.sign_ * b.sign_};
}

std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
    if (a.sign_ >= 0) return a.mag_ <=> b.mag_;
    return b.mag_ <=> a.mag_;
}

}  // namespace mfib
