#include <cmath>
#include <numbers>

#include "doctest.h"
#include "polylab/rng.hpp"
#include "polylab/torus.hpp"

using namespace polylab;

namespace {

TorusRectangle make_rect(long long xn, int xe, int xlev, long long yn, int ye, int ylev) {
    return TorusRectangle(TorusInterval(Dyadic::frac(xn, xe), xlev),
                          TorusInterval(Dyadic::frac(yn, ye), ylev));
}

// membership straight from the definition, floating point
bool oracle_contains(const TorusRectangle& r, Complex z1, Complex z2) {
    auto arc = [](const TorusInterval& iv, Complex z) {
        double rr = std::abs(z);
        if (rr == 0.0) return false;
        if (1.0 - rr > iv.length().to_double() + 1e-15) return false;
        double th = std::arg(z) / (2 * std::numbers::pi);
        th -= std::floor(th);
        double off = th - iv.left.to_double();
        off -= std::floor(off);
        return off < iv.length().to_double();
    };
    return arc(r.x, z1) && arc(r.y, z2);
}

}  // namespace

TEST_CASE("box membership: hand-checked examples") {
    // origin never belongs to any box
    TorusRectangle full = make_rect(0, 0, 0, 0, 0, 0);
    CHECK_FALSE(box_contains(full, BidiscPoint(Complex(0, 0), Complex(0, 0))));

    // half square, point at angle 1/8 with radius 1/2 in both coordinates
    TorusRectangle half = make_rect(0, 0, 1, 0, 0, 1);
    double th = 2 * std::numbers::pi / 8;
    Complex z(0.5 * std::cos(th), 0.5 * std::sin(th));
    CHECK(box_contains(half, BidiscPoint(z, z)));

    // [0,1/4) x [0,1): both coordinate tests pass for (0.9, 0.5)
    TorusRectangle r3 = make_rect(0, 0, 2, 0, 0, 0);
    BidiscPoint p3(Complex(0.9, 0), Complex(0.5, 0));
    CHECK(box_contains(r3, p3));
    CHECK(oracle_contains(r3, p3.z1, p3.z2));
}

TEST_CASE("box membership agrees with the brute-force oracle") {
    Rng rng(2024);
    for (int it = 0; it < 500; ++it) {
        int xl = (int)(rng.next() % 4), yl = (int)(rng.next() % 4);
        long long xi = (long long)(rng.next() % (1ull << xl));
        long long yi = (long long)(rng.next() % (1ull << yl));
        TorusRectangle r = make_rect(xi, xl, xl, yi, yl, yl);
        Complex z1 = rng.disc(0.999), z2 = rng.disc(0.999);
        CHECK(box_contains(r, BidiscPoint(z1, z2)) == oracle_contains(r, z1, z2));
    }
}

TEST_CASE("box membership is monotone in the rectangle") {
    Rng rng(11);
    for (int it = 0; it < 200; ++it) {
        int xl = 1 + (int)(rng.next() % 3), yl = 1 + (int)(rng.next() % 3);
        long long xi = (long long)(rng.next() % (1ull << xl));
        long long yi = (long long)(rng.next() % (1ull << yl));
        TorusRectangle fine = make_rect(xi, xl, xl, yi, yl, yl);
        TorusRectangle coarse = make_rect(xi >> 1, xl - 1, xl - 1, yi >> 1, yl - 1, yl - 1);
        REQUIRE(fine.contained_in(coarse));
        BidiscPoint p(rng.disc(0.999), rng.disc(0.999));
        if (box_contains(fine, p)) CHECK(box_contains(coarse, p));
    }
}

TEST_CASE("sigma reflection") {
    BidiscPoint p(Complex(0, 0.5), Complex(1.0 / 3, 0));
    BidiscPoint q = sigma_reflect_point(p);
    CHECK(q.z1 == Complex(0, -0.5));
    CHECK(q.z2 == p.z2);

    TorusRectangle r = make_rect(1, 2, 2, 0, 0, 1);  // x = [1/4, 1/2)
    TorusRectangle s = sigma_reflect_rect(r);
    CHECK(s.x.left == Dyadic::frac(1, 1));  // [1/2, 3/4)
    CHECK(s.x.level == 2);
    CHECK(sigma_reflect_rect(s) == r);  // involution

    // area and dyadicity preserved
    Rng rng(5);
    for (int it = 0; it < 100; ++it) {
        int xl = (int)(rng.next() % 5), yl = (int)(rng.next() % 5);
        TorusRectangle a = make_rect((long long)(rng.next() % (1ull << xl)), xl, xl,
                                     (long long)(rng.next() % (1ull << yl)), yl, yl);
        TorusRectangle b = sigma_reflect_rect(a);
        CHECK(b.area() == a.area());
        CHECK(b.is_dyadic());
        CHECK(sigma_reflect_rect(b) == a);
    }
}

TEST_CASE("homothety") {
    TorusRectangle unit = make_rect(0, 0, 1, 0, 0, 1);
    // [0,1/2)^2 under L=2 lands at [1/4,1/2)^2
    TorusRectangle h = homothety(unit, 2);
    CHECK(h.x.left == Dyadic::frac(1, 2));
    CHECK(h.x.level == 2);

    // [1/4,1/2) x [0,1/2), L = 4 -> x = [7/16,1/2), y = [3/8,1/2)
    TorusRectangle r = make_rect(1, 2, 2, 0, 0, 1);
    TorusRectangle h4 = homothety(r, 4);
    CHECK(h4.x.left == Dyadic::frac(7, 4));
    CHECK(h4.x.level == 4);
    CHECK(h4.y.left == Dyadic::frac(3, 3));
    CHECK(h4.y.level == 3);

    CHECK(homothety(r, 1) == r);  // identity

    // exact area scaling by 1/L^2
    CHECK(h4.area() == r.area().halved(4));

    CHECK_THROWS(homothety(r, 3));  // not a power of two
    TorusRectangle level0 = make_rect(0, 0, 0, 0, 0, 1);
    CHECK_THROWS(homothety(level0, 2));  // level-0 side
}

TEST_CASE("box union region") {
    TorusRectangle r = make_rect(0, 0, 1, 0, 0, 1);
    BoxUnion single({r});
    Rng rng(77);
    for (int it = 0; it < 100; ++it) {
        BidiscPoint p(rng.disc(0.999), rng.disc(0.999));
        CHECK(single.contains(p) == box_contains(r, p));
    }
    BoxUnion empty_region{std::vector<TorusRectangle>{}};
    CHECK(empty_region.empty());
    CHECK(empty_region.base_area() == Dyadic(0));
}

TEST_CASE("exact union measure") {
    // four quarter squares tile the unit square
    std::vector<TorusRectangle> quarters;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) quarters.push_back(make_rect(i, 1, 1, j, 1, 1));
    CHECK(union_measure(quarters) == Dyadic(1));

    // overlapping pair: [0,1/2) x [0,1) and [0,1) x [0,1/2)
    std::vector<TorusRectangle> lpair = {make_rect(0, 0, 1, 0, 0, 0), make_rect(0, 0, 0, 0, 0, 1)};
    CHECK(union_measure(lpair) == Dyadic::frac(3, 2));

    // duplicates
    std::vector<TorusRectangle> dup = {quarters[0], quarters[0]};
    CHECK(union_measure(dup) == Dyadic::frac(1, 2));
}
