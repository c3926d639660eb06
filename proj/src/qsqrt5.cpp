#include "mfib/qsqrt5.hpp"

#include <stdexcept>

namespace mfib {

QSqrt5 operator*(const QSqrt5& x, const QSqrt5& y) {
    // (a + b s)(c + d s) = ac + 5bd + (ad + bc) s
    return QSqrt5{x.a_ * y.a_ + Rational{5} * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
}

int QSqrt5::sign() const {
    const int sa = a_.sign(), sb = b_.sign();
    if (sa == 0 && sb == 0) return 0;
    if (sa >= 0 && sb >= 0) return 1;
    if (sa <= 0 && sb <= 0) return -1;
    // components disagree: compare a^2 with 5 b^2; the larger magnitude wins
    auto c = a_ * a_ <=> Rational{5} * b_ * b_;
    if (c == 0) return 0;  // unreachable for nonzero b (sqrt5 is irrational)
    return c > 0 ? sa : sb;
}

QSqrt5 QSqrt5::inverse() const {
    if (is_zero()) throw std::domain_error("QSqrt5: inverse of zero");
    Rational norm = a_ * a_ - Rational{5} * b_ * b_;
    return QSqrt5{a_ / norm, -(b_ / norm)};
}

QSqrt5 QSqrt5::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    QSqrt5 base = *this, acc{Rational{1}};
    unsigned n = (unsigned)e;
    while (n) {
        if (n & 1) acc *= base;
        if (n >>= 1) base *= base;
    }
    return acc;
}

std::string QSqrt5::to_string() const {
    return a_.to_string() + " + " + b_.to_string() + "*sqrt5";
}

std::string QSqrt5::to_decimal(unsigned digits) const {
    const int s = sign();
    if (s < 0) return "-" + (-*this).to_decimal(digits);
    // value * 10^digits = (A + B sqrt5) / D with A, B integers, D > 0.
    const Rational scale{BigInt{BigNat::pow10(digits), 1}};
    Rational a = a_ * scale;
    Rational b = b_ * scale;
    BigNat D = a.den() * b.den();
    BigInt A = a.num() * BigInt{b.den()};
    BigInt B = b.num() * BigInt{a.den()};
    // floor(B sqrt5): isqrt for B >= 0, negated ceiling otherwise
    BigNat t2 = B.magnitude() * B.magnitude() * BigNat{5};
    BigInt T;
    if (B.sign() >= 0) {
        T = BigInt{isqrt(t2), 1};
    } else {
        BigNat r = isqrt(t2);
        if (r * r != t2) r += BigNat{1};
        T = BigInt{std::move(r), -1};
    }
    BigInt N = A + T;  // floor(value * 10^digits), nonnegative here
    BigNat q = N.magnitude() / D;
    std::string mag = q.to_decimal();
    if (digits == 0) return mag;
    if (mag.size() <= digits) mag.insert(0, std::string(digits + 1 - mag.size(), '0'));
    mag.insert(mag.size() - digits, ".");
    return mag;
}

}  // namespace mfib
