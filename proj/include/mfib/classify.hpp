#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mfib/bigint.hpp"
#include "mfib/markoff.hpp"
#include "mfib/qsqrt5.hpp"

namespace mfib {

// Sign-and-minimality classification of (F(a), F(b), F(c)), decided by the
// index rules: positive minimal iff c >= a+b+1 or (a,b,c) = (2,2,4); positive
// non-minimal iff (a,b,c) = (2,b,b+2) with even b > 2; otherwise zero or
// negative by exact evaluation.
enum class PositivityClass { PositiveMinimal, PositiveNonMinimal, Zero, Negative };

PositivityClass positivity_class(const FibTriple& ft);

const char* to_string(PositivityClass c);

// Exact comparison of F(c) against 3 F(a) F(b).
enum class Trichotomy { Less, Equal, Greater };

Trichotomy trichotomy(int a, int b, int c);

// Parameters of the phi-power sandwich: a >= A, c = a+b+t, c >= C.
struct KaramataParams {
    int A = 2, t = 1, C = 2;
    KaramataParams(int A_, int t_, int C_);
};

// The exact lower/upper sandwich coefficients:
//   L phi^{2c} / 5 <= m(a,b,c) <= U phi^{2c} / 5.
QSqrt5 karamata_L(const KaramataParams& p);
QSqrt5 karamata_U(const KaramataParams& p);

// One audited inequality: either a per-c family over [c_lo, c_hi] or a single
// constant comparison (c_lo == c_hi == 0). `worst` is the extremal observed
// value, exact, with a 9-digit decimal rendering.
struct AuditCheck {
    std::string name;
    std::string claim;
    int c_lo = 0, c_hi = 0;
    std::string relation;  // "<", "<=", ">", ">="
    std::string bound;     // claimed bound, exact decimal
    std::string worst;     // extremal value, exact "a/b + c/d*sqrt5"
    std::string worst_approx;
    int worst_at = -1;
    bool pass = false;
    std::string note;
};

struct AuditReport {
    int c_max = 0;
    std::vector<AuditCheck> checks;

    bool all_pass() const;
    std::string to_json(const std::string& command) const;
    std::string to_csv() const;
    std::string to_text() const;
};

// Verifies the sandwich exactly for every A <= a <= b, c = a+b+t, C <= c <= c_max.
// Report carries one lower and one upper check with worst slack.
AuditReport karamata_sandwich_check(const KaramataParams& p, int c_max);

// Every displayed numeric inequality of the uniqueness-proof chain, evaluated
// exactly over [its stated threshold, c_max]. Requires c_max >= 20.
AuditReport audit_proof_bounds(int c_max);

// Positive-m Fibonacci triples sharing one exact m value.
struct CollisionBucket {
    BigInt m;
    std::vector<FibTriple> triples;  // lexicographic
};

// Result of enumerating all positive-m Fibonacci triples with c <= c_max.
// Buckets with a single member are only counted, not stored; the full map is
// available at desk scale through bucket_map().
struct EnumerationReport {
    int c_max = 0;
    std::uint64_t triple_count = 0;
    std::vector<CollisionBucket> collisions;  // ascending m

    // True iff the collisions are exactly the classification-theorem set:
    // m = 2 -> (2,2,4) plus (2,b,b+2) for even b, and m = 21 -> {(2,3,6),(3,3,7)}.
    bool matches_classification() const;

    std::string to_json(const std::string& command) const;
    std::string to_csv() const;
    std::string to_text() const;
};

// Two-pass enumeration: a 128-bit hash of each m in the first pass, exact
// BigInt re-verification of hash-colliding groups in the second. Deterministic
// for any worker count.
EnumerationReport enumerate_fib_triples(int c_max, int threads = 1);

// Exact per-m bucket map; desk scale only (materializes every m value).
std::map<BigInt, std::vector<FibTriple>> bucket_map(int c_max);

// All FibTriples with fib_m == m and c <= c_max, lexicographic.
std::vector<FibTriple> solve_for_m(const BigInt& m, int c_max);

}  // namespace mfib
