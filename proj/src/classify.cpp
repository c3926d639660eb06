#include "mfib/classify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "mfib/fib.hpp"

namespace mfib {

const char* to_string(PositivityClass c) {
    switch (c) {
        case PositivityClass::PositiveMinimal: return "positive-minimal";
        case PositivityClass::PositiveNonMinimal: return "positive-non-minimal";
        case PositivityClass::Zero: return "zero";
        case PositivityClass::Negative: return "negative";
    }
    return "?";
}

PositivityClass positivity_class(const FibTriple& ft) {
    if (ft.c >= ft.a + ft.b + 1 || (ft.a == 2 && ft.b == 2 && ft.c == 4))
        return PositivityClass::PositiveMinimal;
    if (ft.a == 2 && ft.b > 2 && ft.b % 2 == 0 && ft.c == ft.b + 2)
        return PositivityClass::PositiveNonMinimal;
    int s = fib_m(ft).sign();
    if (s == 0) return PositivityClass::Zero;
    if (s < 0) return PositivityClass::Negative;
    throw std::logic_error("positivity_class: positive m outside the classified families");
}

Trichotomy trichotomy(int a, int b, int c) {
    if (a < 2 || b < 2 || c < 2)
        throw std::invalid_argument("trichotomy: indices must be >= 2");
    auto cmp = fib(c) <=> BigNat{3} * fib(a) * fib(b);
    if (cmp < 0) return Trichotomy::Less;
    if (cmp > 0) return Trichotomy::Greater;
    return Trichotomy::Equal;
}

KaramataParams::KaramataParams(int A_, int t_, int C_) : A(A_), t(t_), C(C_) {
    if (A < 2 || C < 2 || t < 1)
        throw std::invalid_argument("KaramataParams: need A >= 2, C >= 2, t >= 1");
}

namespace {

const QSqrt5 kThreeOverSqrt5{Rational{0}, Rational{BigInt{3}, BigNat{5}}};
const QSqrt5 kNineOverSqrt5{Rational{0}, Rational{BigInt{9}, BigNat{5}}};
const QSqrt5 kOne{Rational{1}};

}  // namespace

QSqrt5 karamata_L(const KaramataParams& p) {
    QSqrt5 phit = phi_pow(p.t);
    return kOne - kThreeOverSqrt5 * phi_pow(-p.t) +
           (kOne - kThreeOverSqrt5 * phit) *
               (phi_pow(-2 * p.t - 2 * p.A) + phi_pow(2 * p.A - 2 * p.C)) -
           (QSqrt5{Rational{6}} + kThreeOverSqrt5 * phit + kNineOverSqrt5) * phi_pow(-2 * p.C);
}

QSqrt5 karamata_U(const KaramataParams& p) {
    QSqrt5 phit = phi_pow(p.t);
    return kOne - kThreeOverSqrt5 * phi_pow(-p.t) +
           (kOne + kThreeOverSqrt5 * phit) *
               (phi_pow(-2 * p.t - 2 * p.A) + phi_pow(2 * p.A - 2 * p.C)) +
           QSqrt5{Rational{9}} * phi_pow(-2 * p.C);
}

bool AuditReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string AuditReport::to_json(const std::string& command) const {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["command"] = command;
    nlohmann::ordered_json results;
    results["c_max"] = c_max;
    results["all_pass"] = all_pass();
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json e;
        e["name"] = c.name;
        e["claim"] = c.claim;
        if (c.c_hi > 0) e["c_range"] = {c.c_lo, c.c_hi};
        else e["c_range"] = nullptr;
        e["relation"] = c.relation;
        e["bound"] = c.bound;
        e["worst"] = c.worst;
        e["worst_approx"] = c.worst_approx;
        if (c.worst_at >= 0) e["worst_at"] = c.worst_at;
        else e["worst_at"] = nullptr;
        e["pass"] = c.pass;
        if (!c.note.empty()) e["note"] = c.note;
        arr.push_back(std::move(e));
    }
    results["checks"] = std::move(arr);
    j["results"] = std::move(results);
    return j.dump();
}

std::string AuditReport::to_csv() const {
    std::ostringstream os;
    os << "name,c_lo,c_hi,relation,bound,worst_approx,worst_at,pass\n";
    for (const auto& c : checks) {
        os << c.name << ',' << c.c_lo << ',' << c.c_hi << ',' << c.relation << ',' << c.bound
           << ',' << c.worst_approx << ',' << c.worst_at << ',' << (c.pass ? "1" : "0") << '\n';
    }
    return os.str();
}

std::string AuditReport::to_text() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.pass ? "PASS " : "FAIL ") << c.name;
        if (c.c_hi > 0) os << " [" << c.c_lo << "," << c.c_hi << "]";
        os << ": " << c.claim << "  (worst " << c.worst_approx;
        if (c.worst_at >= 0) os << " at c=" << c.worst_at;
        os << ")";
        if (!c.note.empty()) os << "  note: " << c.note;
        os << '\n';
    }
    os << (all_pass() ? "AUDIT OK" : "AUDIT FAILED") << " (" << checks.size() << " checks)\n";
    return os.str();
}

AuditReport karamata_sandwich_check(const KaramataParams& p, int c_max) {
    if (c_max < p.C)
        throw std::invalid_argument("karamata_sandwich_check: c_max below C");
    const QSqrt5 L = karamata_L(p), U = karamata_U(p);
    auto F = fib_table(c_max);
    auto fm = [&](int a, int b, int c) {
        BigNat sq = F[a] * F[a] + F[b] * F[b] + F[c] * F[c];
        return BigInt{sq, 1} - BigInt{BigNat{3} * F[a] * F[b] * F[c], 1};
    };
    AuditCheck lo, hi;
    const std::string tag =
        "A=" + std::to_string(p.A) + ",t=" + std::to_string(p.t) + ",C=" + std::to_string(p.C);
    lo.name = "sandwich_lower(" + tag + ")";
    lo.claim = "L*phi^2c <= 5*m(a,b,c) on the (" + tag + ") grid";
    hi.name = "sandwich_upper(" + tag + ")";
    hi.claim = "5*m(a,b,c) <= U*phi^2c on the (" + tag + ") grid";
    lo.c_lo = hi.c_lo = p.C;
    lo.c_hi = hi.c_hi = c_max;
    lo.relation = ">=";
    hi.relation = ">=";
    lo.bound = hi.bound = "0";  // slack must be nonnegative
    lo.pass = hi.pass = true;
    bool have = false;
    QSqrt5 worst_lo, worst_hi;
    for (int c = p.C; c <= c_max; ++c) {
        const QSqrt5 phi2c = phi_pow(2 * c);
        const QSqrt5 lo_bound = L * phi2c, hi_bound = U * phi2c;
        const int s = c - p.t;
        for (int a = p.A; 2 * a <= s; ++a) {
            const int b = s - a;
            QSqrt5 five_m{Rational{BigInt{5} * fm(a, b, c)}};
            QSqrt5 slack_lo = five_m - lo_bound;
            QSqrt5 slack_hi = hi_bound - five_m;
            if (slack_lo.sign() < 0) lo.pass = false;
            if (slack_hi.sign() < 0) hi.pass = false;
            if (!have || slack_lo < worst_lo) {
                worst_lo = slack_lo;
                lo.worst_at = c;
                lo.note = "at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                          std::to_string(c) + ")";
            }
            if (!have || slack_hi < worst_hi) {
                worst_hi = slack_hi;
                hi.worst_at = c;
                hi.note = "at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                          std::to_string(c) + ")";
            }
            have = true;
        }
    }
    if (have) {
        lo.worst = worst_lo.to_string();
        lo.worst_approx = worst_lo.to_decimal(9);
        hi.worst = worst_hi.to_string();
        hi.worst_approx = worst_hi.to_decimal(9);
    } else {
        lo.worst = hi.worst = "(empty grid)";
        lo.worst_approx = hi.worst_approx = "";
        lo.worst_at = hi.worst_at = -1;
    }
    AuditReport rep;
    rep.c_max = c_max;
    rep.checks.push_back(std::move(lo));
    rep.checks.push_back(std::move(hi));
    return rep;
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

namespace {

using u128 = unsigned __int128;

struct HashEntry {
    u128 h;
    std::uint32_t a, b, c;
};

bool entry_less(const HashEntry& x, const HashEntry& y) {
    if (x.h != y.h) return x.h < y.h;
    if (x.a != y.a) return x.a < y.a;
    if (x.b != y.b) return x.b < y.b;
    return x.c < y.c;
}

// F(n) mod 2^128 and its square, for the first-pass hash.
struct HashTables {
    std::vector<u128> f, f2;
    explicit HashTables(int n_max) {
        f.resize(n_max + 1);
        f2.resize(n_max + 1);
        f[0] = 0;
        if (n_max >= 1) f[1] = 1;
        for (int i = 2; i <= n_max; ++i) f[i] = f[i - 1] + f[i - 2];
        for (int i = 0; i <= n_max; ++i) f2[i] = f[i] * f[i];
    }
    u128 m_hash(int a, int b, int c) const {
        return f2[a] + f2[b] + f2[c] - (u128)3 * f[a] * f[b] * f[c];
    }
};

// Positive-m index filter: c >= a+b+1 plus the (2, even b, b+2) family.
// The family is tied to a_lo == 2 so that exactly one worker emits it.
template <typename Fn>
void for_each_triple(int c_max, int a_lo, int a_stride, Fn&& fn) {
    if (a_lo == 2)
        for (int b = 2; b + 2 <= c_max; b += 2) fn(2, b, b + 2);
    for (int a = a_lo; 2 * a + 1 <= c_max; a += a_stride)
        for (int b = a; a + b + 1 <= c_max; ++b)
            for (int c = a + b + 1; c <= c_max; ++c) fn(a, b, c);
}

BigInt exact_m(const std::vector<BigNat>& F, int a, int b, int c) {
    BigNat sq = F[a] * F[a] + F[b] * F[b] + F[c] * F[c];
    return BigInt{sq, 1} - BigInt{BigNat{3} * F[a] * F[b] * F[c], 1};
}

u128 low128(const BigInt& v) {
    // value mod 2^128, two's-complement style for negatives
    const std::string dec = v.magnitude().to_decimal();
    u128 mag = 0;
    for (char ch : dec) mag = mag * 10 + (u128)(ch - '0');
    return v.sign() < 0 ? (u128)0 - mag : mag;
}

}  // namespace

EnumerationReport enumerate_fib_triples(int c_max, int threads) {
    if (c_max < 2) throw std::invalid_argument("enumerate_fib_triples: need c_max >= 2");
    if (threads < 1) threads = 1;
    const HashTables H(c_max);

    std::vector<std::vector<HashEntry>> parts(threads);
    auto worker = [&](int w) {
        auto& out = parts[w];
        std::uint64_t n = 0;
        for_each_triple(c_max, 2 + w, threads, [&](int, int, int) { ++n; });
        out.reserve(n);
        for_each_triple(c_max, 2 + w, threads, [&](int a, int b, int c) {
            out.push_back({H.m_hash(a, b, c), (std::uint32_t)a, (std::uint32_t)b,
                           (std::uint32_t)c});
        });
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int w = 0; w < threads; ++w) pool.emplace_back(worker, w);
        for (auto& th : pool) th.join();
    }

    std::vector<HashEntry> entries;
    {
        std::size_t total = 0;
        for (const auto& p : parts) total += p.size();
        entries.reserve(total);
        for (auto& p : parts) {
            entries.insert(entries.end(), p.begin(), p.end());
            p.clear();
            p.shrink_to_fit();
        }
    }
    std::sort(entries.begin(), entries.end(), entry_less);

    EnumerationReport rep;
    rep.c_max = c_max;
    rep.triple_count = entries.size();

    // Second pass: exact re-verification of hash-colliding runs.
    const auto F = fib_table(c_max);
    std::map<BigInt, std::vector<FibTriple>> coll;
    std::size_t i = 0;
    while (i < entries.size()) {
        std::size_t j = i + 1;
        while (j < entries.size() && entries[j].h == entries[i].h) ++j;
        if (j - i >= 2) {
            std::map<BigInt, std::vector<FibTriple>> group;
            for (std::size_t k = i; k < j; ++k)
                group[exact_m(F, entries[k].a, entries[k].b, entries[k].c)].push_back(
                    FibTriple{(int)entries[k].a, (int)entries[k].b, (int)entries[k].c});
            for (auto& [m, ts] : group)
                if (ts.size() >= 2) {
                    auto& dst = coll[m];
                    dst.insert(dst.end(), ts.begin(), ts.end());
                }
        }
        i = j;
    }
    for (auto& [m, ts] : coll) {
        std::sort(ts.begin(), ts.end());
        rep.collisions.push_back({m, std::move(ts)});
    }
    return rep;
}

std::map<BigInt, std::vector<FibTriple>> bucket_map(int c_max) {
    if (c_max < 2) throw std::invalid_argument("bucket_map: need c_max >= 2");
    if (c_max > 200)
        throw std::invalid_argument("bucket_map: desk scale only (c_max <= 200)");
    const auto F = fib_table(c_max);
    std::map<BigInt, std::vector<FibTriple>> out;
    for_each_triple(c_max, 2, 1, [&](int a, int b, int c) {
        out[exact_m(F, a, b, c)].push_back(FibTriple{a, b, c});
    });
    for (auto& [m, ts] : out) std::sort(ts.begin(), ts.end());
    return out;
}

std::vector<FibTriple> solve_for_m(const BigInt& m, int c_max) {
    if (c_max < 2) throw std::invalid_argument("solve_for_m: need c_max >= 2");
    std::vector<FibTriple> out;
    if (m.sign() <= 0) return out;  // enumerated triples all have m > 0
    const HashTables H(c_max);
    const u128 target = low128(m);
    std::vector<FibTriple> candidates;
    for_each_triple(c_max, 2, 1, [&](int a, int b, int c) {
        if (H.m_hash(a, b, c) == target) candidates.push_back(FibTriple{a, b, c});
    });
    const auto F = fib_table(c_max);
    for (const auto& t : candidates)
        if (exact_m(F, t.a, t.b, t.c) == m) out.push_back(t);
    std::sort(out.begin(), out.end());
    return out;
}

bool EnumerationReport::matches_classification() const {
    std::size_t family_size = 0;  // (2,b,b+2) members with c <= c_max
    for (int b = 2; b + 2 <= c_max; b += 2) ++family_size;
    bool saw2 = false, saw21 = false;
    for (const auto& bucket : collisions) {
        if (bucket.m == BigInt{2}) {
            saw2 = true;
            if (bucket.triples.size() != family_size) return false;
            for (const auto& t : bucket.triples)
                if (!(t.a == 2 && t.c == t.b + 2 && t.b % 2 == 0)) return false;
        } else if (bucket.m == BigInt{21}) {
            saw21 = true;
            if (bucket.triples != std::vector<FibTriple>{{2, 3, 6}, {3, 3, 7}}) return false;
        } else {
            return false;
        }
    }
    if (family_size >= 2 && !saw2) return false;
    if (c_max >= 7 && !saw21) return false;
    return true;
}

std::string EnumerationReport::to_json(const std::string& command) const {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["command"] = command;
    nlohmann::ordered_json results;
    results["c_max"] = c_max;
    results["triples"] = triple_count;
    results["matches_classification"] = matches_classification();
    auto arr = nlohmann::ordered_json::array();
    for (const auto& bucket : collisions) {
        nlohmann::ordered_json e;
        e["m"] = bucket.m.to_decimal();
        e["count"] = bucket.triples.size();
        auto ts = nlohmann::ordered_json::array();
        for (const auto& t : bucket.triples) {
            nlohmann::ordered_json tj;
            tj["indices"] = {t.a, t.b, t.c};
            tj["values"] = {fib(t.a).to_decimal(), fib(t.b).to_decimal(),
                            fib(t.c).to_decimal()};
            ts.push_back(std::move(tj));
        }
        e["triples"] = std::move(ts);
        arr.push_back(std::move(e));
    }
    results["collisions"] = std::move(arr);
    j["results"] = std::move(results);
    return j.dump();
}

std::string EnumerationReport::to_csv() const {
    std::ostringstream os;
    os << "m,count,triples\n";
    for (const auto& bucket : collisions) {
        os << bucket.m.to_decimal() << ',' << bucket.triples.size() << ',';
        for (std::size_t i = 0; i < bucket.triples.size(); ++i) {
            const auto& t = bucket.triples[i];
            if (i) os << ' ';
            os << t.a << ':' << t.b << ':' << t.c;
        }
        os << '\n';
    }
    return os.str();
}

std::string EnumerationReport::to_text() const {
    std::ostringstream os;
    os << "enumerated " << triple_count << " positive-m Fibonacci triples with c <= " << c_max
       << '\n';
    os << "collision classes: " << collisions.size() << '\n';
    for (const auto& bucket : collisions) {
        os << "  m=" << bucket.m.to_decimal() << " (" << bucket.triples.size() << " triples):";
        for (const auto& t : bucket.triples)
            os << " (" << t.a << "," << t.b << "," << t.c << ")";
        os << '\n';
    }
    os << (matches_classification() ? "collisions match the classification theorem"
                                    : "UNEXPECTED collision structure")
       << '\n';
    return os.str();
}

}  // namespace mfib
