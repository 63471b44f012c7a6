#include <random>

#include "doctest.h"
#include "polylab/dyadic.hpp"

using polylab::Dyadic;

TEST_CASE("canonical form") {
    Dyadic a = Dyadic::frac(4, 3);  // 4/8 = 1/2
    CHECK(a.num() == 1);
    CHECK(a.exp() == 1);
    CHECK(Dyadic::frac(0, 7).exp() == 0);
    CHECK(Dyadic(3) == Dyadic::frac(12, 2));
}

TEST_CASE("exact arithmetic round trip") {
    std::mt19937_64 rng(12345);
    for (int it = 0; it < 2000; ++it) {
        long long na = (long long)(rng() % 2001) - 1000;
        long long nb = (long long)(rng() % 2001) - 1000;
        int ea = (int)(rng() % 20), eb = (int)(rng() % 20);
        Dyadic a = Dyadic::frac(na, ea), b = Dyadic::frac(nb, eb);
        CHECK((a + b) - b == a);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a - b).sign() == -((b - a).sign()));
    }
}

TEST_CASE("halve and compare") {
    Dyadic h = Dyadic(1).halved();
    CHECK(h == Dyadic::frac(1, 1));
    CHECK(h < Dyadic(1));
    CHECK(Dyadic::frac(3, 2) > h);  // 3/4 > 1/2
    CHECK(h.halved(3) == Dyadic::frac(1, 4));
}

TEST_CASE("mod1 and floor") {
    CHECK(Dyadic::frac(9, 2).mod1() == Dyadic::frac(1, 2));   // 9/4 mod 1 = 1/4
    CHECK(Dyadic::frac(-1, 2).mod1() == Dyadic::frac(3, 2));  // -1/4 mod 1 = 3/4
    CHECK(Dyadic::frac(9, 2).floor() == 2);
    CHECK(Dyadic::frac(-1, 2).floor() == -1);
}

TEST_CASE("overflow is detected") {
    Dyadic big = Dyadic(1LL << 60);
    CHECK_THROWS(big * big);
}
