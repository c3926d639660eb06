#include <stdexcept>
#include "doctest.h"
#include "mfib/fib.hpp"
#include "mfib/qsqrt5.hpp"

using mfib::BigInt;
using mfib::BigNat;
using mfib::phi_pow;
using mfib::QSqrt5;
using mfib::Rational;

TEST_CASE("phi and phibar satisfy the defining relations exactly") {
    QSqrt5 phi = QSqrt5::phi();
    QSqrt5 phibar = QSqrt5::phi_bar();
    CHECK(phi * phibar == QSqrt5{Rational{-1}});
    CHECK(phi + phibar == QSqrt5{Rational{1}});
    CHECK(phi * phi == phi + QSqrt5{Rational{1}});  // phi^2 = phi + 1
}

TEST_CASE("field axioms") {
    QSqrt5 x{Rational{BigInt{3}, BigNat{7}}, Rational{BigInt{-2}, BigNat{5}}};
    QSqrt5 y{Rational{BigInt{-1}, BigNat{4}}, Rational{BigInt{9}, BigNat{2}}};
    QSqrt5 z{Rational{2}, Rational{BigInt{1}, BigNat{3}}};
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * x.inverse() == QSqrt5{Rational{1}});
    CHECK(x / y * y == x);
    CHECK_THROWS_AS((void)QSqrt5{}.inverse(), std::domain_error);
}

TEST_CASE("sign is decided exactly in all quadrant cases") {
    CHECK(QSqrt5{}.sign() == 0);
    CHECK(QSqrt5{Rational{1}, Rational{1}}.sign() == 1);
    CHECK(QSqrt5{Rational{-1}, Rational{-1}}.sign() == -1);
    // 9 - 4 sqrt5 < 0 since 81 < 80 is false -> actually 81 > 80, so positive
    CHECK(QSqrt5{Rational{9}, Rational{-4}}.sign() == 1);
    // 2 - sqrt5 < 0 (4 < 5)
    CHECK(QSqrt5{Rational{2}, Rational{-1}}.sign() == -1);
    // -2 + sqrt5 > 0
    CHECK(QSqrt5{Rational{-2}, Rational{1}}.sign() == 1);
    // -9/4 + sqrt5 < 0 (81/16 > 5)
    CHECK(QSqrt5{Rational{BigInt{-9}, BigNat{4}}, Rational{1}}.sign() == -1);
    // continued-fraction neighbors: 682/305 < sqrt5 < 161/72, one ulp apart in
    // the squared comparison (465124 vs 465125, 25921 vs 25920)
    CHECK(QSqrt5::sqrt5() < QSqrt5{Rational{BigInt{161}, BigNat{72}}});
    CHECK(QSqrt5::sqrt5() > QSqrt5{Rational{BigInt{682}, BigNat{305}}});
}

TEST_CASE("pow matches the closed Fibonacci form (dual route)") {
    for (int n = 1; n <= 100; ++n) {
        QSqrt5 by_squaring = QSqrt5::phi().pow(n);
        QSqrt5 closed = phi_pow(n);
        CHECK(by_squaring == closed);
        // phi^n = F(n) phi + F(n-1), exactly
        QSqrt5 lin = QSqrt5{Rational{BigInt{mfib::fib(n), 1}}} * QSqrt5::phi() +
                     QSqrt5{Rational{BigInt{mfib::fib(n - 1), 1}}};
        CHECK(by_squaring == lin);
    }
    for (int n = 1; n <= 40; ++n) {
        CHECK(QSqrt5::phi().pow(-n) == phi_pow(-n));
        CHECK(phi_pow(n) * phi_pow(-n) == QSqrt5{Rational{1}});
    }
}

TEST_CASE("decimal rendering is exact and directed toward zero") {
    CHECK(QSqrt5{Rational{1}}.to_decimal(3) == "1.000");
    CHECK(QSqrt5::sqrt5().to_decimal(6) == "2.236067");           // sqrt5 = 2.2360679...
    CHECK(QSqrt5::phi().to_decimal(9) == "1.618033988");          // phi = 1.6180339887...
    CHECK((-QSqrt5::phi()).to_decimal(4) == "-1.6180");
    CHECK(QSqrt5{Rational{0}}.to_decimal(2) == "0.00");
    CHECK(phi_pow(-2).to_decimal(9) == "0.381966011");
}
