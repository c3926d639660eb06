#include <stdexcept>
#include <map>
#include <vector>

#include "doctest.h"
#include "mfib/classify.hpp"
#include "mfib/fib.hpp"

using namespace mfib;

TEST_CASE("positivity classification, frozen examples") {
    CHECK(positivity_class({2, 2, 4}) == PositivityClass::PositiveMinimal);
    CHECK(positivity_class({2, 6, 8}) == PositivityClass::PositiveNonMinimal);
    CHECK(positivity_class({2, 5, 7}) == PositivityClass::Zero);  // (2,b,b+2), odd b
    CHECK(positivity_class({2, 5, 6}) == PositivityClass::Negative);  // m = -30
    CHECK(positivity_class({3, 4, 7}) == PositivityClass::Negative);
    CHECK(positivity_class({3, 4, 8}) == PositivityClass::PositiveMinimal);
    CHECK(positivity_class({2, 2, 2}) == PositivityClass::Zero);   // m = 0
    CHECK(positivity_class({2, 4, 4}) == PositivityClass::Negative);
}

TEST_CASE("classifier agrees with the exact sign oracle up to c = 40") {
    for (int c = 2; c <= 40; ++c)
        for (int b = 2; b <= c; ++b)
            for (int a = 2; a <= b; ++a) {
                PositivityClass cls = positivity_class({a, b, c});
                BigInt m = fib_m(a, b, c);
                switch (cls) {
                    case PositivityClass::PositiveMinimal:
                        CHECK(m.sign() > 0);
                        CHECK(fib(c) >= BigNat{3} * fib(a) * fib(b));
                        break;
                    case PositivityClass::PositiveNonMinimal:
                        CHECK(m.sign() > 0);
                        CHECK(fib(c) < BigNat{3} * fib(a) * fib(b));
                        break;
                    case PositivityClass::Zero: CHECK(m.sign() == 0); break;
                    case PositivityClass::Negative: CHECK(m.sign() < 0); break;
                }
            }
}

TEST_CASE("trichotomy vs direct comparison; EQ only at (2,2,4)") {
    CHECK(trichotomy(2, 2, 4) == Trichotomy::Equal);
    CHECK(trichotomy(3, 4, 8) == Trichotomy::Greater);
    CHECK(trichotomy(3, 4, 7) == Trichotomy::Less);
    int eq_count = 0;
    for (int a = 2; a <= 40; ++a)
        for (int b = a; b <= 40; ++b)
            for (int c = 2; c <= 40; ++c) {
                Trichotomy t = trichotomy(a, b, c);
                auto cmp = fib(c) <=> BigNat{3} * fib(a) * fib(b);
                CHECK(t == (cmp < 0   ? Trichotomy::Less
                            : cmp > 0 ? Trichotomy::Greater
                                      : Trichotomy::Equal));
                if (t == Trichotomy::Equal) {
                    ++eq_count;
                    CHECK(a == 2);
                    CHECK(b == 2);
                    CHECK(c == 4);
                }
                // tie to the index thresholds
                if (b >= a && c >= 2) {
                    if (c <= a + b) CHECK(t != Trichotomy::Greater);
                    else CHECK(t == Trichotomy::Greater);
                }
            }
    CHECK(eq_count == 1);
}

TEST_CASE("infinitude witness: m(2,2,c) strictly increasing and positive for c >= 5") {
    BigInt prev = fib_m(2, 2, 5);
    CHECK(prev.sign() > 0);
    for (int c = 6; c <= 100; ++c) {
        BigInt cur = fib_m(2, 2, c);
        CHECK(cur > prev);
        prev = cur;
    }
}

TEST_CASE("enumeration vs brute-force bucket map (dual route)") {
    for (int cmax : {6, 10, 25, 60}) {
        auto buckets = bucket_map(cmax);
        EnumerationReport rep = enumerate_fib_triples(cmax);
        std::uint64_t total = 0;
        std::map<BigInt, std::vector<FibTriple>> expected_collisions;
        for (const auto& [m, ts] : buckets) {
            CHECK(m.sign() > 0);
            total += ts.size();
            if (ts.size() >= 2) expected_collisions[m] = ts;
        }
        CHECK(rep.triple_count == total);
        REQUIRE(rep.collisions.size() == expected_collisions.size());
        std::size_t i = 0;
        for (const auto& [m, ts] : expected_collisions) {
            CHECK(rep.collisions[i].m == m);
            CHECK(rep.collisions[i].triples == ts);
            ++i;
        }
    }
}

TEST_CASE("minimal-triple sandwich x^2 + y^2 <= m < z^2 on enumerated triples") {
    auto f = fib_table(40);
    int minimal_count = 0;
    for (int c = 2; c <= 40; ++c)
        for (int b = 2; b <= c; ++b)
            for (int a = 2; a <= b; ++a) {
                if (positivity_class({a, b, c}) != PositivityClass::PositiveMinimal) continue;
                ++minimal_count;
                BigInt m = fib_m(a, b, c);
                BigInt small_sq{f[a] * f[a] + f[b] * f[b], 1};
                BigInt large_sq{f[c] * f[c], 1};
                CHECK(small_sq <= m);
                CHECK(m < large_sq);
            }
    CHECK(minimal_count > 1000);
}

TEST_CASE("collision structure at the frozen scales") {
    for (int cmax : {10, 19, 20, 50, 100}) {
        EnumerationReport rep = enumerate_fib_triples(cmax);
        REQUIRE(rep.collisions.size() == 2);
        CHECK(rep.collisions[0].m.to_decimal() == "2");
        CHECK(rep.collisions[1].m.to_decimal() == "21");
        CHECK(rep.collisions[1].triples == std::vector<FibTriple>{{2, 3, 6}, {3, 3, 7}});
        for (const auto& t : rep.collisions[0].triples) {
            CHECK(t.a == 2);
            CHECK(t.c == t.b + 2);
            CHECK(t.b % 2 == 0);
        }
        CHECK(rep.matches_classification());
    }
    // below the (3,3,7) horizon the m=21 bucket is not yet a collision
    EnumerationReport small = enumerate_fib_triples(6);
    REQUIRE(small.collisions.size() == 1);
    CHECK(small.collisions[0].m.to_decimal() == "2");
    auto buckets6 = bucket_map(6);
    CHECK(buckets6.at(BigInt{21}) == std::vector<FibTriple>{{2, 3, 6}});
}

TEST_CASE("enumeration is deterministic across worker counts") {
    EnumerationReport one = enumerate_fib_triples(60, 1);
    for (int threads : {2, 3, 7}) {
        EnumerationReport many = enumerate_fib_triples(60, threads);
        CHECK(many.triple_count == one.triple_count);
        REQUIRE(many.collisions.size() == one.collisions.size());
        for (std::size_t i = 0; i < one.collisions.size(); ++i) {
            CHECK(many.collisions[i].m == one.collisions[i].m);
            CHECK(many.collisions[i].triples == one.collisions[i].triples);
        }
        CHECK(many.to_json("enumerate") == one.to_json("enumerate"));
    }
}

TEST_CASE("solve_for_m frozen examples") {
    CHECK(solve_for_m(BigInt{21}, 100) == std::vector<FibTriple>{{2, 3, 6}, {3, 3, 7}});
    CHECK(solve_for_m(BigInt{2}, 10) ==
          std::vector<FibTriple>{{2, 2, 4}, {2, 4, 6}, {2, 6, 8}, {2, 8, 10}});
    CHECK(solve_for_m(BigInt{3}, 100).empty());
    CHECK(solve_for_m(BigInt{0}, 50).empty());
    CHECK(solve_for_m(BigInt{-5}, 50).empty());
    // a large unique one: m(4,5,20)
    BigInt m = fib_m(4, 5, 20);
    CHECK(solve_for_m(m, 60) == std::vector<FibTriple>{{4, 5, 20}});
    CHECK_THROWS_AS((void)solve_for_m(BigInt{2}, 1), std::invalid_argument);
}

TEST_CASE("karamata coefficients: the displayed comparisons") {
    QSqrt5 L419 = karamata_L({4, 1, 9});
    QSqrt5 L227 = karamata_L({2, 2, 7});
    QSqrt5 L319 = karamata_L({3, 1, 9});
    QSqrt5 U218 = karamata_U({2, 1, 8});
    CHECK(L419 > QSqrt5{Rational::parse("1.025")} * phi_pow(-4));
    CHECK(L227 > QSqrt5{Rational::parse("1.04")} * phi_pow(-2));
    CHECK(L319 > QSqrt5{Rational::parse("0.14")});
    CHECK(phi_pow(-2) * U218 < QSqrt5{Rational::parse("0.139")});
    // frozen 9-digit truncations, computed with an independent exact evaluator
    CHECK(L419.to_decimal(9) == "0.149670684");
    CHECK(L227.to_decimal(9) == "0.397571510");
    CHECK(L319.to_decimal(9) == "0.140151189");
    CHECK((phi_pow(-2) * U218).to_decimal(9) == "0.138061406");
    CHECK((phi_pow(-2) * karamata_U({2, 5, 10})).to_decimal(9) == "0.345927705");
    CHECK_THROWS_AS((void)KaramataParams(1, 1, 9), std::invalid_argument);
}

TEST_CASE("karamata sandwich holds exactly on the standard grids") {
    for (auto p : {KaramataParams{2, 1, 7}, KaramataParams{2, 2, 7}, KaramataParams{3, 1, 9},
                   KaramataParams{4, 1, 9}}) {
        AuditReport rep = karamata_sandwich_check(p, 40);
        CHECK(rep.all_pass());
        REQUIRE(rep.checks.size() == 2);
    }
    // (4,1,9): every 5m additionally exceeds phi^(2(c-2))
    auto f = fib_table(40);
    for (int c = 9; c <= 40; ++c) {
        const QSqrt5 bound = phi_pow(2 * (c - 2));
        for (int a = 4; 2 * a <= c - 1; ++a) {
            int b = c - 1 - a;
            BigNat sq = f[a] * f[a] + f[b] * f[b] + f[c] * f[c];
            BigInt m = BigInt{sq, 1} - BigInt{BigNat{3} * f[a] * f[b] * f[c], 1};
            CHECK(QSqrt5{Rational{BigInt{5} * m}} > bound);
        }
    }
    CHECK_THROWS_AS((void)karamata_sandwich_check({2, 1, 7}, 5), std::invalid_argument);
}
