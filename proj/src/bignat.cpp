#include "mfib/bignat.hpp"

#include <bit>
#include <cstddef>
#include <stdexcept>

namespace mfib {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i128 = __int128;

void BigNat::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

std::size_t BigNat::bit_length() const {
    if (limbs_.empty()) return 0;
    return 64 * (limbs_.size() - 1) + (64 - std::countl_zero(limbs_.back()));
}

std::uint64_t BigNat::to_u64() const {
    if (limbs_.size() > 1) throw std::overflow_error("BigNat::to_u64: value too large");
    return limbs_.empty() ? 0 : limbs_[0];
}

std::strong_ordering operator<=>(const BigNat& a, const BigNat& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() <=> b.limbs_.size();
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
    }
    return std::strong_ordering::equal;
}

BigNat operator+(const BigNat& a, const BigNat& b) {
    BigNat r;
    const auto& x = a.limbs_;
    const auto& y = b.limbs_;
    const std::size_t n = std::max(x.size(), y.size());
    r.limbs_.resize(n);
    u64 carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
        u128 s = (u128)(i < x.size() ? x[i] : 0) + (i < y.size() ? y[i] : 0) + carry;
        r.limbs_[i] = (u64)s;
        carry = (u64)(s >> 64);
    }
    if (carry) r.limbs_.push_back(carry);
    return r;
}

BigNat operator-(const BigNat& a, const BigNat& b) {
    if (a < b) throw std::underflow_error("BigNat subtraction underflow");
    BigNat r;
    r.limbs_.resize(a.limbs_.size());
    u64 borrow = 0;
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        u128 d = (u128)a.limbs_[i] - (i < b.limbs_.size() ? b.limbs_[i] : 0) - borrow;
        r.limbs_[i] = (u64)d;
        borrow = (u64)((d >> 64) & 1);
    }
    r.trim();
    return r;
}

BigNat operator*(const BigNat& a, const BigNat& b) {
    if (a.is_zero() || b.is_zero()) return BigNat{};
    BigNat r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        u64 carry = 0;
        const u64 ai = a.limbs_[i];
        for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
            u128 cur = (u128)ai * b.limbs_[j] + r.limbs_[i + j] + carry;
            r.limbs_[i + j] = (u64)cur;
            carry = (u64)(cur >> 64);
        }
        r.limbs_[i + b.limbs_.size()] = carry;
    }
    r.trim();
    return r;
}

BigNat BigNat::operator<<(unsigned bits) const {
    if (is_zero() || bits == 0) {
        BigNat r = *this;
        return r;
    }
    const unsigned limb_shift = bits / 64, bit_shift = bits % 64;
    BigNat r;
    r.limbs_.assign(limbs_.size() + limb_shift + 1, 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        r.limbs_[i + limb_shift] |= bit_shift ? (limbs_[i] << bit_shift) : limbs_[i];
        if (bit_shift)
            r.limbs_[i + limb_shift + 1] |= limbs_[i] >> (64 - bit_shift);
    }
    r.trim();
    return r;
}

BigNat BigNat::operator>>(unsigned bits) const {
    const unsigned limb_shift = bits / 64, bit_shift = bits % 64;
    if (limb_shift >= limbs_.size()) return BigNat{};
    BigNat r;
    r.limbs_.assign(limbs_.size() - limb_shift, 0);
    for (std::size_t i = 0; i < r.limbs_.size(); ++i) {
        r.limbs_[i] = bit_shift ? (limbs_[i + limb_shift] >> bit_shift) : limbs_[i + limb_shift];
        if (bit_shift && i + limb_shift + 1 < limbs_.size())
            r.limbs_[i] |= limbs_[i + limb_shift + 1] << (64 - bit_shift);
    }
    r.trim();
    return r;
}

// Knuth algorithm D on 64-bit limbs (128-bit intermediates), with a fast
// single-limb path.
std::pair<BigNat, BigNat> BigNat::divrem(const BigNat& u, const BigNat& v) {
    if (v.is_zero()) throw std::domain_error("BigNat division by zero");
    if (u < v) return {BigNat{}, u};
    if (v.limbs_.size() == 1) {
        const u64 d = v.limbs_[0];
        BigNat q;
        q.limbs_.assign(u.limbs_.size(), 0);
        u64 rem = 0;
        for (std::size_t i = u.limbs_.size(); i-- > 0;) {
            u128 cur = ((u128)rem << 64) | u.limbs_[i];
            q.limbs_[i] = (u64)(cur / d);
            rem = (u64)(cur % d);
        }
        q.trim();
        return {q, BigNat{rem}};
    }

    const unsigned s = std::countl_zero(v.limbs_.back());
    BigNat vn = v << s;
    const std::size_t n = vn.limbs_.size();
    std::vector<u64> un((u << s).limbs_);
    un.resize(u.limbs_.size() + 1, 0);  // one guaranteed spare high limb
    const std::size_t m = un.size() - 1 - n;

    BigNat q;
    q.limbs_.assign(m + 1, 0);
    for (std::size_t j = m + 1; j-- > 0;) {
        u128 num = ((u128)un[j + n] << 64) | un[j + n - 1];
        u128 qhat = num / vn.limbs_[n - 1];
        u128 rhat = num % vn.limbs_[n - 1];
        while (qhat >= ((u128)1 << 64) ||
               qhat * vn.limbs_[n - 2] > ((rhat << 64) | un[j + n - 2])) {
            --qhat;
            rhat += vn.limbs_[n - 1];
            if (rhat >= ((u128)1 << 64)) break;
        }
        // multiply-and-subtract
        i128 t;
        u64 borrow = 0;
        for (std::size_t i = 0; i < n; ++i) {
            u128 p = qhat * vn.limbs_[i];
            t = (i128)un[i + j] - borrow - (u64)p;
            un[i + j] = (u64)t;
            borrow = (u64)(p >> 64) - (u64)(t >> 64);
        }
        t = (i128)un[j + n] - borrow;
        un[j + n] = (u64)t;
        q.limbs_[j] = (u64)qhat;
        if (t < 0) {  // qhat was one too large; add divisor back
            --q.limbs_[j];
            u64 carry = 0;
            for (std::size_t i = 0; i < n; ++i) {
                u128 sum = (u128)un[i + j] + vn.limbs_[i] + carry;
                un[i + j] = (u64)sum;
                carry = (u64)(sum >> 64);
            }
            un[j + n] += carry;
        }
    }
    q.trim();
    BigNat r;
    r.limbs_.assign(un.begin(), un.begin() + n);
    r.trim();
    return {q, r >> s};
}

BigNat gcd(BigNat a, BigNat b) {
    while (!b.is_zero()) {
        BigNat r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BigNat isqrt(const BigNat& n) {
    if (n.is_zero()) return BigNat{};
    if (n.limbs_.size() == 1) {
        u64 v = n.limbs_[0];
        u64 x = 1ull << ((64 - std::countl_zero(v) + 1) / 2);
        while (true) {
            u64 y = (x + v / x) / 2;
            if (y >= x) break;
            x = y;
        }
        return BigNat{x};
    }
    BigNat x = BigNat{1} << (unsigned)((n.bit_length() + 1) / 2);
    while (true) {
        BigNat y = (x + n / x) >> 1;
        if (y >= x) break;
        x = std::move(y);
    }
    return x;
}

BigNat BigNat::pow10(unsigned k) {
    BigNat r{1};
    BigNat ten{10};
    while (k >= 19) {
        r *= BigNat{10000000000000000000ull};
        k -= 19;
    }
    for (unsigned i = 0; i < k; ++i) r *= ten;
    return r;
}

BigNat BigNat::from_decimal(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("BigNat::from_decimal: empty string");
    BigNat r;
    std::size_t i = 0;
    while (i < s.size()) {
        std::size_t chunk_len = std::min<std::size_t>(19, s.size() - i);
        u64 chunk = 0, scale = 1;
        for (std::size_t k = 0; k < chunk_len; ++k, ++i) {
            char c = s[i];
            if (c < '0' || c > '9')
                throw std::invalid_argument("BigNat::from_decimal: invalid digit");
            chunk = chunk * 10 + (u64)(c - '0');
            scale *= 10;
        }
        r = r * BigNat{scale} + BigNat{chunk};
    }
    return r;
}

std::string BigNat::to_decimal() const {
    if (is_zero()) return "0";
    static constexpr u64 kChunk = 10000000000000000000ull;  // 10^19
    std::vector<u64> chunks;
    BigNat t = *this;
    while (!t.is_zero()) {
        auto [q, r] = divrem(t, BigNat{kChunk});
        chunks.push_back(r.is_zero() ? 0 : r.limbs_[0]);
        t = std::move(q);
    }
    std::string out = std::to_string(chunks.back());
    for (std::size_t i = chunks.size() - 1; i-- > 0;) {
        std::string part = std::to_string(chunks[i]);
        out += std::string(19 - part.size(), '0') + part;
    }
    return out;
}

}  // namespace mfib
