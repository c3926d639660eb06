#include "mfib/fib.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace mfib {

BigNat fib(int n) {
    if (n < 0) throw std::invalid_argument("fib: negative index");
    unsigned m = (unsigned)n;
    // iterative doubling over the bits of n, msb to lsb
    BigNat a{0}, b{1};  // (F(0), F(1))
    if (m == 0) return a;
    int top = 31;
    while (top > 0 && !((m >> top) & 1u)) --top;
    for (int i = top; i >= 0; --i) {
        BigNat c = a * ((b + b) - a);  // F(2k)
        BigNat d = a * a + b * b;      // F(2k+1)
        if ((m >> i) & 1u) {
            a = d;
            b = c + d;
        } else {
            a = std::move(c);
            b = std::move(d);
        }
    }
    return a;
}

std::vector<BigNat> fib_table(int n_max) {
    if (n_max < 0) throw std::invalid_argument("fib_table: negative index");
    std::vector<BigNat> f;
    f.reserve(n_max + 1);
    f.push_back(BigNat{0});
    if (n_max >= 1) f.push_back(BigNat{1});
    for (int i = 2; i <= n_max; ++i) f.push_back(f[i - 1] + f[i - 2]);
    return f;
}

std::optional<int> fib_index(const BigNat& v) {
    if (v.is_zero()) return 0;
    if (v.is_one()) return 2;  // canonical: skip F(1)
    BigNat a{1}, b{2};  // (F(2), F(3))
    int n = 2;
    while (a < v) {
        BigNat c = a + b;
        a = std::move(b);
        b = std::move(c);
        ++n;
    }
    if (a == v) return n;
    return std::nullopt;
}

std::pair<BigInt, BigInt> vajda_sides(int n, int i, int j) {
    if (n < 1 || i < 1 || j < 1)
        throw std::invalid_argument("vajda_sides: n, i, j must be >= 1");
    BigInt left = BigInt{fib(n + i) * fib(n + j), 1} - BigInt{fib(n) * fib(n + i + j), 1};
    BigInt right{fib(i) * fib(j), n % 2 == 0 ? 1 : -1};
    return {left, right};
}

std::pair<Rational, Rational> quotient_bounds(int N, int a) {
    if (N < 1 || a < 1) throw std::invalid_argument("quotient_bounds: need N >= 1, a >= 1");
    Rational x{BigInt{fib(N), 1}, fib(N + a)};
    Rational y{BigInt{fib(N + 1), 1}, fib(N + 1 + a)};
    return x <= y ? std::pair{x, y} : std::pair{y, x};
}

QSqrt5 phi_pow(int k) {
    if (k == 0) return QSqrt5{Rational{1}};
    if (k > 0) {
        BigNat fk = fib(k), fk1 = fib(k - 1);
        // F(k)/2 + F(k-1)  +  (F(k)/2) sqrt5
        Rational half_fk{BigInt{fk, 1}, BigNat{2}};
        return QSqrt5{half_fk + Rational{BigInt{fk1, 1}}, half_fk};
    }
    int n = -k;
    BigNat fn = fib(n), fn1 = fib(n + 1);
    int s = n % 2 == 0 ? 1 : -1;
    Rational half_fn{BigInt{fn, s}, BigNat{2}};
    return QSqrt5{Rational{BigInt{fn1, s}} - half_fn, -half_fn};
}

std::pair<QSqrt5, QSqrt5> binet_envelope(int n) {
    if (n < 1) throw std::invalid_argument("binet_envelope: need n >= 1");
    const QSqrt5 inv_sqrt5{Rational{0}, Rational{BigInt{1}, BigNat{5}}};
    QSqrt5 p = phi_pow(n);
    return {(p - QSqrt5{Rational{1}}) * inv_sqrt5, (p + QSqrt5{Rational{1}}) * inv_sqrt5};
}

std::string round_signif(const Rational& x, int p, Rounding dir) {
    if (p < 1) throw std::invalid_argument("round_signif: need p >= 1");
    if (x.sign() <= 0 || x >= Rational{1})
        throw std::invalid_argument("round_signif: value must lie in (0, 1)");
    const BigNat& num = x.num().magnitude();
    const BigNat& den = x.den();
    // e = leading zeros after the decimal point
    int e = 0;
    BigNat scaled = num * BigNat{10};
    while (scaled < den) {
        scaled *= BigNat{10};
        ++e;
    }
    auto [q, r] = BigNat::divrem(num * BigNat::pow10((unsigned)(e + p)), den);
    if (dir == Rounding::up && !r.is_zero()) q += BigNat{1};
    if (q == BigNat::pow10((unsigned)p)) {  // carry crossed into a new digit
        q = BigNat::pow10((unsigned)(p - 1));
        --e;
        if (e < 0) return "1." + std::string(p - 1, '0');
    }
    std::string digits = q.to_decimal();
    return "0." + std::string(e, '0') + digits;
}

BoundTable bound_table(int n_lo, int n_hi, int a_lo, int a_hi, int sigfigs, Rounding dir) {
    if (n_lo < 1 || a_lo < 1 || n_hi < n_lo || a_hi < a_lo)
        throw std::invalid_argument("bound_table: empty or invalid range");
    if (sigfigs < 1) throw std::invalid_argument("bound_table: need sigfigs >= 1");
    BoundTable t;
    t.n_lo = n_lo; t.n_hi = n_hi; t.a_lo = a_lo; t.a_hi = a_hi;
    t.sigfigs = sigfigs;
    t.direction = dir;
    t.cells.resize(n_hi - n_lo + 1);
    for (int N = n_lo; N <= n_hi; ++N) {
        auto& row = t.cells[N - n_lo];
        row.reserve(a_hi - a_lo + 1);
        for (int a = a_lo; a <= a_hi; ++a) {
            auto [k, K] = quotient_bounds(N, a);
            row.push_back(round_signif(dir == Rounding::down ? k : K, sigfigs, dir));
        }
    }
    return t;
}

std::string BoundTable::to_csv() const {
    std::ostringstream os;
    os << "N\\a";
    for (int a = a_lo; a <= a_hi; ++a) os << ',' << a;
    os << '\n';
    for (int N = n_lo; N <= n_hi; ++N) {
        os << N;
        for (int a = a_lo; a <= a_hi; ++a) os << ',' << at(N, a);
        os << '\n';
    }
    return os.str();
}

std::string BoundTable::to_json() const {
    nlohmann::ordered_json rows;
    for (int N = n_lo; N <= n_hi; ++N) {
        nlohmann::ordered_json row;
        for (int a = a_lo; a <= a_hi; ++a) row[std::to_string(a)] = at(N, a);
        rows[std::to_string(N)] = std::move(row);
    }
    nlohmann::ordered_json j;
    j["direction"] = direction == Rounding::down ? "down" : "up";
    j["sigfigs"] = sigfigs;
    j["n_range"] = {n_lo, n_hi};
    j["a_range"] = {a_lo, a_hi};
    j["rows"] = std::move(rows);
    return j.dump();
}

std::string BoundTable::to_text() const {
    std::ostringstream os;
    std::size_t w = 0;
    for (const auto& row : cells)
        for (const auto& c : row) w = std::max(w, c.size());
    os << "N\\a";
    for (int a = a_lo; a <= a_hi; ++a) {
        std::string h = std::to_string(a);
        os << "  " << std::string(w > h.size() ? w - h.size() : 0, ' ') << h;
    }
    os << '\n';
    for (int N = n_lo; N <= n_hi; ++N) {
        std::string h = std::to_string(N);
        os << h << std::string(h.size() < 3 ? 3 - h.size() : 0, ' ');
        for (int a = a_lo; a <= a_hi; ++a) {
            const std::string& c = at(N, a);
            os << "  " << std::string(w - c.size(), ' ') << c;
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace mfib
