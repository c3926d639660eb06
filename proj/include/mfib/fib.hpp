#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mfib/bigint.hpp"
#include "mfib/bignat.hpp"
#include "mfib/qsqrt5.hpp"
#include "mfib/rational.hpp"

namespace mfib {

// F(0)=0, F(1)=1, F(n+1)=F(n)+F(n-1). Fast doubling, O(log n) multiplies.
BigNat fib(int n);

// F(0)..F(n_max) by the recurrence itself; the cheap bulk path.
std::vector<BigNat> fib_table(int n_max);

// Canonical index of a Fibonacci value, or nullopt. The value 1 maps to
// index 2 (indices below 2 never appear in triples).
std::optional<int> fib_index(const BigNat& v);

// Both sides of Vajda's identity, computed independently:
//   F(n+i)F(n+j) - F(n)F(n+i+j)  and  (-1)^n F(i)F(j).
std::pair<BigInt, BigInt> vajda_sides(int n, int i, int j);

// k_{N,a} = min(F(N)/F(N+a), F(N+1)/F(N+1+a)),  K_{N,a} = max(...).
// For every n >= N:  k_{N,a} <= F(n)/F(n+a) <= K_{N,a}.
std::pair<Rational, Rational> quotient_bounds(int N, int a);

// Exact envelope (phi^n - 1)/sqrt5 <= F(n) <= (phi^n + 1)/sqrt5.
std::pair<QSqrt5, QSqrt5> binet_envelope(int n);

// phi^k as an exact QSqrt5 via phi^n = F(n) phi + F(n-1) and
// phi^-n = (-1)^n (F(n+1) - F(n) phi).
QSqrt5 phi_pow(int k);

enum class Rounding { down, up };

// Directed rounding of a rational in (0, 1) to p significant figures of its
// decimal expansion, trailing zeros kept ("0.5000", "0.01316"). No floating
// point anywhere.
std::string round_signif(const Rational& x, int p, Rounding dir);

// Quotient-bound table in the layout of the appendix tables: rows indexed by
// N, columns by a, every cell a directed-rounded decimal string.
struct BoundTable {
    int n_lo = 0, n_hi = 0;
    int a_lo = 0, a_hi = 0;
    int sigfigs = 0;
    Rounding direction = Rounding::down;
    std::vector<std::vector<std::string>> cells;  // [N - n_lo][a - a_lo]

    const std::string& at(int N, int a) const { return cells[N - n_lo][a - a_lo]; }

    std::string to_csv() const;
    std::string to_json() const;  // rows keyed by N, columns keyed by a
    std::string to_text() const;
};

BoundTable bound_table(int n_lo, int n_hi, int a_lo, int a_hi, int sigfigs, Rounding dir);

}  // namespace mfib
