#include "mfib/rational.hpp"

#include <stdexcept>

namespace mfib {

Rational::Rational(BigInt num, BigNat den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    reduce();
}

void Rational::reduce() {
    if (num_.is_zero()) {
        den_ = BigNat{1};
        return;
    }
    BigNat g = gcd(num_.magnitude(), den_);
    if (!g.is_one()) {
        num_ = BigInt{num_.magnitude() / g, num_.sign()};
        den_ = den_ / g;
    }
}

Rational Rational::parse(std::string_view s) {
    auto slash = s.find('/');
    if (slash != std::string_view::npos) {
        BigInt n = BigInt::from_decimal(s.substr(0, slash));
        BigInt d = BigInt::from_decimal(s.substr(slash + 1));
        if (d.sign() < 0) { n = -n; }
        return Rational{std::move(n), d.magnitude()};
    }
    auto dot = s.find('.');
    if (dot == std::string_view::npos) return Rational{BigInt::from_decimal(s)};
    int sign = 1;
    std::string_view t = s;
    if (!t.empty() && (t.front() == '-' || t.front() == '+')) {
        if (t.front() == '-') sign = -1;
        t.remove_prefix(1);
        dot -= 1;
    }
    std::string digits{t.substr(0, dot)};
    digits += t.substr(dot + 1);
    unsigned frac_len = (unsigned)(t.size() - dot - 1);
    BigNat mag = BigNat::from_decimal(digits);
    return Rational{BigInt{std::move(mag), sign}, BigNat::pow10(frac_len)};
}

std::string Rational::to_string() const {
    return num_.to_decimal() + "/" + den_.to_decimal();
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    BigInt n = a.num_ * BigInt{b.den_} + b.num_ * BigInt{a.den_};
    return Rational{std::move(n), a.den_ * b.den_};
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    return Rational{a.num_ * b.num_, a.den_ * b.den_};
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational division by zero");
    BigInt n = a.num_ * BigInt{b.den_};
    BigNat d = a.den_ * b.num_.magnitude();
    if (b.num_.sign() < 0) n = -n;
    return Rational{std::move(n), std::move(d)};
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num_ * BigInt{b.den_} <=> b.num_ * BigInt{a.den_};
}

}  // namespace mfib
