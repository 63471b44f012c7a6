#include "polylab/torus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace polylab {

TorusInterval::TorusInterval(Dyadic l, int lev) : left(l.mod1()), level(lev) {
    if (lev < 0) throw std::invalid_argument("interval level must be >= 0");
}

bool TorusInterval::contains_angle(const Dyadic& theta) const {
    Dyadic off = (theta - left).mod1();
    return off < length();
}

bool TorusInterval::contains_angle(double theta) const {
    double off = theta - left.to_double();
    off -= std::floor(off);
    return off < length().to_double();
}

bool TorusInterval::contained_in(const TorusInterval& outer) const {
    if (outer.is_full_circle()) return true;
    if (level < outer.level) return false;
    Dyadic off = (left - outer.left).mod1();
    return off + length() <= outer.length();
}

TorusInterval TorusInterval::reflected() const {
    // image of [l, l+len) under theta -> 1-theta is (1-l-len, 1-l], and as a
    // half-open-from-the-left arc that is [1-l-len, 1-l) shifted by nothing for
    // dyadic arithmetic: endpoints are identified mod 1 on a common grid.
    Dyadic one(1);
    return TorusInterval((one - left - length()).mod1(), level);
}

bool TorusRectangle::operator<(const TorusRectangle& o) const {
    auto c = x <=> o.x;
    if (c != 0) return c < 0;
    return (y <=> o.y) < 0;
}

namespace {

// one-coordinate membership test for S(I)
bool arc_region_contains(const TorusInterval& iv, Complex z,
                         const std::optional<PolarExact>& exact) {
    if (exact) {
        if (exact->r_sq.is_zero()) return false;  // z = 0 excluded
        // 1 - r <= len  <=>  r >= 1 - len  <=>  r^2 >= (1-len)^2 (rhs >= 0)
        Dyadic rad = Dyadic(1) - iv.length();
        if (rad.sign() > 0 && exact->r_sq < rad * rad) return false;
        return iv.contains_angle(exact->theta);
    }
    double r = std::abs(z);
    if (r == 0.0) return false;
    if (1.0 - r > iv.length().to_double()) return false;
    double theta = std::arg(z) / (2.0 * std::numbers::pi);
    theta -= std::floor(theta);
    return iv.contains_angle(theta);
}

}  // namespace

bool box_contains(const TorusRectangle& r, const BidiscPoint& p) {
    return arc_region_contains(r.x, p.z1, p.exact1) && arc_region_contains(r.y, p.z2, p.exact2);
}

BidiscPoint sigma_reflect_point(const BidiscPoint& p) {
    BidiscPoint q;
    q.z1 = std::conj(p.z1);
    q.z2 = p.z2;
    if (p.exact1) q.exact1 = PolarExact{p.exact1->r_sq, (Dyadic(1) - p.exact1->theta).mod1()};
    q.exact2 = p.exact2;
    return q;
}

TorusRectangle sigma_reflect_rect(const TorusRectangle& r) {
    return TorusRectangle(r.x.reflected(), r.y);
}

namespace {

int log2_exact(long long L) {
    if (L <= 0 || (L & (L - 1)) != 0)
        throw std::invalid_argument("homothety scale must be a power of two");
    int m = 0;
    while ((1LL << m) < L) ++m;
    return m;
}

TorusInterval homothety_interval(const TorusInterval& iv, int m) {
    if (m == 0) return iv;
    if (iv.level < 1)
        throw std::invalid_argument("homothety needs side levels >= 1 to stay dyadic");
    Dyadic half = Dyadic::frac(1, 1);
    Dyadic l = half + (iv.left - half).halved(m);
    return TorusInterval(l, iv.level + m);
}

}  // namespace

TorusRectangle homothety(const TorusRectangle& r, long long L) {
    int m = log2_exact(L);
    return TorusRectangle(homothety_interval(r.x, m), homothety_interval(r.y, m));
}

bool BoxUnion::contains(const BidiscPoint& p) const {
    for (const auto& r : rects_)
        if (box_contains(r, p)) return true;
    return false;
}

namespace {

// Dyadic rectangle in index form: x = [ix*2^-ax, (ix+1)*2^-ax), same for y.
struct IndexRect {
    int ax, ay;
    long long ix, iy;
};

bool prefix_compatible(int a1, long long i1, int a2, long long i2) {
    int a = std::min(a1, a2);
    return (i1 >> (a1 - a)) == (i2 >> (a2 - a));
}

// Exact union measure of dyadic-aligned rectangles by recursive splitting of
// the current cell (ax, ix) x (ay, iy).
Dyadic dyadic_union_rec(int ax, long long ix, int ay, long long iy,
                        const std::vector<const IndexRect*>& live) {
    if (live.empty()) return Dyadic(0);
    int max_ax = 0, max_ay = 0;
    for (const auto* r : live) {
        if (r->ax <= ax && r->ay <= ay) return Dyadic::pow2(ax + ay);  // covers the cell
        max_ax = std::max(max_ax, r->ax);
        max_ay = std::max(max_ay, r->ay);
    }
    // split along an axis where some rectangle is finer than the cell
    bool split_x = ax < max_ax && (ay >= max_ay || ax <= ay);
    int bx = ax + (split_x ? 1 : 0), by = ay + (split_x ? 0 : 1);
    Dyadic total(0);
    for (int half = 0; half < 2; ++half) {
        long long jx = split_x ? 2 * ix + half : ix;
        long long jy = split_x ? iy : 2 * iy + half;
        std::vector<const IndexRect*> sub;
        for (const auto* r : live)
            if (prefix_compatible(r->ax, r->ix, bx, jx) && prefix_compatible(r->ay, r->iy, by, jy))
                sub.push_back(r);
        total += dyadic_union_rec(bx, jx, by, jy, sub);
    }
    return total;
}

Dyadic dyadic_union_measure(const std::vector<TorusRectangle>& rects) {
    std::vector<IndexRect> idx;
    idx.reserve(rects.size());
    for (const auto& r : rects) {
        IndexRect q;
        q.ax = r.x.level;
        q.ay = r.y.level;
        q.ix = (r.x.left.doubled(r.x.level)).floor();
        q.iy = (r.y.left.doubled(r.y.level)).floor();
        idx.push_back(q);
    }
    std::vector<const IndexRect*> live;
    live.reserve(idx.size());
    for (const auto& q : idx) live.push_back(&q);
    return dyadic_union_rec(0, 0, 0, 0, live);
}

}  // namespace

Dyadic union_measure(const std::vector<TorusRectangle>& rects) {
    if (rects.empty()) return Dyadic(0);
    if (std::all_of(rects.begin(), rects.end(), [](const auto& r) { return r.is_dyadic(); }))
        return dyadic_union_measure(rects);
    // Coordinate compression over both axes; arcs may wrap, so split each
    // side into at most two non-wrapping pieces first.
    struct Piece {
        Dyadic x0, x1, y0, y1;
    };
    auto split = [](const TorusInterval& iv) {
        std::vector<std::pair<Dyadic, Dyadic>> out;
        Dyadic l = iv.left, len = iv.length(), one(1);
        if (l + len <= one) {
            out.push_back({l, l + len});
        } else {
            out.push_back({l, one});
            out.push_back({Dyadic(0), (l + len).mod1()});
        }
        return out;
    };
    std::vector<Piece> pieces;
    std::vector<Dyadic> xs, ys;
    for (const auto& r : rects) {
        for (auto [x0, x1] : split(r.x))
            for (auto [y0, y1] : split(r.y)) {
                pieces.push_back({x0, x1, y0, y1});
                xs.push_back(x0);
                xs.push_back(x1);
                ys.push_back(y0);
                ys.push_back(y1);
            }
    }
    auto dedup = [](std::vector<Dyadic>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    dedup(xs);
    dedup(ys);
    Dyadic total(0);
    for (size_t i = 0; i + 1 < xs.size(); ++i) {
        for (size_t j = 0; j + 1 < ys.size(); ++j) {
            bool covered = false;
            for (const auto& p : pieces) {
                if (p.x0 <= xs[i] && xs[i + 1] <= p.x1 && p.y0 <= ys[j] && ys[j + 1] <= p.y1) {
                    covered = true;
                    break;
                }
            }
            if (covered) total += (xs[i + 1] - xs[i]) * (ys[j + 1] - ys[j]);
        }
    }
    return total;
}

Dyadic BoxUnion::base_area() const { return union_measure(rects_); }

}  // namespace polylab
