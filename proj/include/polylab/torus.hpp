#pragma once

#include <compare>
#include <vector>

#include "polylab/dyadic.hpp"
#include "polylab/point.hpp"

namespace polylab {

// Half-open arc [left, left + 2^{-level}) mod 1 on R/Z. Arcs may wrap.
struct TorusInterval {
    Dyadic left;  // in [0,1)
    int level = 0;  // length 2^{-level}, level >= 0

    TorusInterval() = default;
    TorusInterval(Dyadic l, int lev);

    Dyadic length() const { return Dyadic::pow2(level); }
    bool is_dyadic() const { return left.is_multiple_of_pow2(level); }
    bool is_full_circle() const { return level == 0; }

    // position of the angle within the arc, or negative length() if outside
    bool contains_angle(const Dyadic& theta) const;
    bool contains_angle(double theta) const;

    Dyadic midpoint() const { return (left + Dyadic::pow2(level + 1)).mod1(); }

    // arc containment on the torus: *this contained in `outer`
    bool contained_in(const TorusInterval& outer) const;

    // reflection theta -> 1 - theta (setwise image of the half-open arc)
    TorusInterval reflected() const;

    bool operator==(const TorusInterval& o) const { return left == o.left && level == o.level; }
    std::strong_ordering operator<=>(const TorusInterval& o) const {
        if (level != o.level) return level <=> o.level;
        if (left < o.left) return std::strong_ordering::less;
        if (o.left < left) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
};

struct TorusRectangle {
    TorusInterval x;
    TorusInterval y;

    TorusRectangle() = default;
    TorusRectangle(TorusInterval ix, TorusInterval iy) : x(ix), y(iy) {}

    Dyadic area() const { return Dyadic::pow2(x.level + y.level); }
    bool is_dyadic() const { return x.is_dyadic() && y.is_dyadic(); }

    bool contained_in(const TorusRectangle& outer) const {
        return x.contained_in(outer.x) && y.contained_in(outer.y);
    }

    bool operator==(const TorusRectangle& o) const { return x == o.x && y == o.y; }
    bool operator<(const TorusRectangle& o) const;
};

// S(R) membership: z in S(I) iff z != 0, 1-|z| <= |I| and z/|z| lands in I.
// Exact when the point carries exact polar data, floating otherwise.
bool box_contains(const TorusRectangle& r, const BidiscPoint& p);

// sigma(theta1, theta2) = (1 - theta1, theta2); on points, conjugation of z1.
BidiscPoint sigma_reflect_point(const BidiscPoint& p);
TorusRectangle sigma_reflect_rect(const TorusRectangle& r);

// phi_L(xi) = (1/2,1/2) + (xi - (1/2,1/2)) / L with L = 2^m, m >= 0.
// Requires side levels >= 1 when m >= 1 so images stay dyadic.
TorusRectangle homothety(const TorusRectangle& r, long long L);

// Queryable region S(V) = union of S(R) over a finite rectangle list.
class BoxUnion {
public:
    BoxUnion() = default;
    explicit BoxUnion(std::vector<TorusRectangle> rects) : rects_(std::move(rects)) {}

    bool contains(const BidiscPoint& p) const;
    const std::vector<TorusRectangle>& rects() const { return rects_; }

    // exact Lebesgue measure of the union of the rectangles themselves (|V|)
    Dyadic base_area() const;

    bool empty() const { return rects_.empty(); }

private:
    std::vector<TorusRectangle> rects_;
};

// exact measure of a union of arcs (used by BoxUnion::base_area)
Dyadic union_measure(const std::vector<TorusRectangle>& rects);

}  // namespace polylab
