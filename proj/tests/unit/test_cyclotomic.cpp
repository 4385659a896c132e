#include "critlib/cyclotomic.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace critlib;
using oracle::iv;

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == iv({-1, 1}));
    CHECK(cyclotomic_polynomial(2) == iv({1, 1}));
    CHECK(cyclotomic_polynomial(3) == iv({1, 1, 1}));
    CHECK(cyclotomic_polynomial(4) == iv({1, 0, 1}));
    CHECK(cyclotomic_polynomial(6) == iv({1, -1, 1}));
    CHECK(cyclotomic_polynomial(12) == iv({1, 0, -1, 0, 1}));
    CHECK(CyclotomicField::get(15)->degree() == 8);
    CHECK(CyclotomicField::get(60)->degree() == 16);
}

TEST_CASE("roots of unity") {
    for (unsigned n : {1u, 2u, 3u, 5u, 8u, 12u, 60u}) {
        Cyclotomic z = Cyclotomic::root_of_unity(n, 1);
        Cyclotomic p(n, 1), sum(n, 0);
        for (unsigned k = 0; k < n; ++k) {
            sum += p;
            p *= z;
        }
        CHECK(p == Rational(1));
        CHECK(sum == Rational(n == 1 ? 1 : 0));
        CHECK(z * z.conj() == Rational(1));
    }
}

TEST_CASE("rational detection and conjugation") {
    Cyclotomic w = Cyclotomic::root_of_unity(3, 1);
    Cyclotomic w2 = Cyclotomic::root_of_unity(3, 2);
    CHECK(w.conj() == w2);
    CHECK((w + w2) == Rational(-1));
    CHECK((w + w2).is_integer());
    CHECK_FALSE(w.is_rational());
    Cyclotomic half = Cyclotomic(4, Rational(1, 2));
    CHECK(half.is_rational());
    CHECK_FALSE(half.is_integer());
    CHECK(half.rational_value() == Rational(1, 2));
    // 2 cos(2 pi / 5) + 2 cos(4 pi / 5) = -1
    Cyclotomic s(5, 0);
    for (unsigned k = 1; k < 5; ++k) s += Cyclotomic::root_of_unity(5, k);
    CHECK(s == Rational(-1));
    CHECK(Cyclotomic::from_powers(4, RatVector{0, 0, 1}) == Rational(-1));
}

TEST_CASE("mixing fields is rejected") {
    CHECK_THROWS_AS(Cyclotomic::root_of_unity(3, 1) + Cyclotomic::root_of_unity(4, 1), Error);
}
