#include "polylab/quilt.hpp"

#include "polylab/quilt_table.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace polylab {

namespace {

struct RectIdx {
    int ax, ay;
    long long ix, iy;
    static RectIdx of(const TorusRectangle& r) {
        return {r.x.level, r.y.level, r.x.left.doubled(r.x.level).floor(),
                r.y.left.doubled(r.y.level).floor()};
    }
};

TorusRectangle rect_from_idx(int ax, long long ix, int ay, long long iy) {
    return TorusRectangle(TorusInterval(Dyadic::frac(ix, ax), ax),
                          TorusInterval(Dyadic::frac(iy, ay), ay));
}

}  // namespace

QuiltReport verify_quilt(const std::vector<TorusRectangle>& rects) {
    QuiltReport rep;
    for (size_t n = 0; n < rects.size(); ++n) {
        if (!rects[n].is_dyadic()) {
            rep.error = "rectangle #" + std::to_string(n) + " is not dyadic (x " +
                        rects[n].x.left.str() + " level " + std::to_string(rects[n].x.level) +
                        ", y " + rects[n].y.left.str() + " level " +
                        std::to_string(rects[n].y.level) + ")";
            return rep;
        }
    }
    if (rects.empty()) {
        rep.error = "empty family";
        return rep;
    }

    bool duplicates = false;
    {
        auto sorted = rects;
        std::sort(sorted.begin(), sorted.end());
        duplicates = std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
    }

    rep.total_mass = Dyadic(0);
    rep.is_equiareal = true;
    Dyadic area0 = rects.front().area();
    for (const auto& r : rects) {
        rep.total_mass += r.area();
        if (r.area() != area0) rep.is_equiareal = false;
    }
    rep.total_union_area = union_measure(rects);

    // Packing: bucket each rectangle's mass into every coarser-or-equal dyadic
    // ancestor cell; a dyadic Q finer than every rectangle in some axis
    // contains none of them, so these buckets exhaust the tight cases.
    std::map<std::tuple<int, int, long long, long long>, Dyadic> bucket;
    for (const auto& r : rects) {
        RectIdx q = RectIdx::of(r);
        Dyadic a = r.area();
        for (int u = 0; u <= q.ax; ++u)
            for (int v = 0; v <= q.ay; ++v) {
                auto key = std::make_tuple(u, v, q.ix >> (q.ax - u), q.iy >> (q.ay - v));
                auto [it, fresh] = bucket.try_emplace(key, Dyadic(0));
                it->second += a;
            }
    }
    double worst = 0.0;
    bool packed = true;
    for (const auto& [key, mass] : bucket) {
        auto [u, v, i, j] = key;
        Dyadic qarea = Dyadic::pow2(u + v);
        double ratio = mass.to_double() / qarea.to_double();
        if (ratio > worst) {
            worst = ratio;
            rep.worst_q = rect_from_idx(u, i, v, j);
        }
        if (qarea < mass) packed = false;
    }
    rep.worst_packing_ratio = worst;
    rep.is_quilt = packed && !duplicates && rep.total_mass == Dyadic(1);
    return rep;
}

bool packing_oracle(const std::vector<TorusRectangle>& rects, int max_level) {
    for (int u = 0; u <= max_level; ++u)
        for (long long i = 0; i < (1LL << u); ++i)
            for (int v = 0; v <= max_level; ++v)
                for (long long j = 0; j < (1LL << v); ++j) {
                    TorusRectangle q = rect_from_idx(u, i, v, j);
                    Dyadic mass(0);
                    for (const auto& r : rects)
                        if (r.contained_in(q)) mass += r.area();
                    if (q.area() < mass) return false;
                }
    return true;
}

namespace {

std::vector<TorusRectangle> quarters() {
    std::vector<TorusRectangle> out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out.push_back(rect_from_idx(1, i, 1, j));
    return out;
}

// Coupled-digit family of depth n = m + w, m = 2^w + w - 1: for each shape
// (a, n-a), a in [w, m], keep the tiles whose digits satisfy x_j = y_{m+1-j}
// for the w couplings j in [a-w+1, a]. Mass (m-w+1) 2^{-w} = 1; the packing
// inequality reduces to (k+1) <= 2^k window counting; the union is the
// probability of a length-w run in m fair bits.
std::vector<TorusRectangle> coupled_digit_family(int w) {
    int m = (1 << w) + w - 1, n = m + w;
    std::vector<TorusRectangle> out;
    for (int a = w; a <= m; ++a) {
        int b = n - a;
        for (long long ix = 0; ix < (1LL << a); ++ix)
            for (long long iy = 0; iy < (1LL << b); ++iy) {
                bool keep = true;
                for (int j = a - w + 1; j <= a && keep; ++j) {
                    int xbit = (int)(ix >> (a - j)) & 1;
                    int ybit = (int)(iy >> (b - (m + 1 - j))) & 1;
                    keep = xbit == ybit;
                }
                if (keep) out.push_back(rect_from_idx(a, ix, b, iy));
            }
    }
    return out;
}

std::vector<TorusRectangle> table_family() {
    std::vector<TorusRectangle> out;
    out.reserve(1024);
    for (unsigned v : detail::kTableQuilt) {
        int a = (int)(v >> 24);
        long long ix = (v >> 12) & 0xfff, iy = v & 0xfff;
        out.push_back(rect_from_idx(a, ix, detail::kTableDepth - a, iy));
    }
    return out;
}

}  // namespace

Quilt generate_carleson_quilt(const Dyadic& eps, const QuiltGenOptions& opts) {
    if (eps.sign() <= 0 || Dyadic(1) < eps)
        throw std::invalid_argument("quilt generator: eps must lie in (0, 1]");

    // Candidate constructions in order of increasing depth; each has a known
    // exact union area and is re-verified before being returned.
    struct Candidate {
        int depth;
        std::vector<TorusRectangle> (*make)();
        Dyadic union_area;
    };
    static const Candidate candidates[] = {
        {2, quarters, Dyadic(1)},
        {7, [] { return coupled_digit_family(2); }, Dyadic::frac(19, 5)},
        {10, table_family, Dyadic::frac(125885, 18)},
    };

    for (const auto& cand : candidates) {
        if (cand.depth > opts.max_depth) break;
        if (eps < cand.union_area) continue;
        auto rects = cand.make();
        auto rep = verify_quilt(rects);
        if (!rep.is_quilt || !rep.is_equiareal || eps < rep.total_union_area)
            throw std::logic_error("quilt generator: construction failed self-verification");
        Quilt q;
        q.rects = std::move(rects);
        q.equiareal = true;
        q.common_area = q.rects.front().area();
        return q;
    }
    // Unions below ~0.48 need needle-type (Perron tree) constructions whose
    // depth grows exponentially in the number of scales; that is outside any
    // configured depth limit, so reject rather than loop forever.
    throw std::runtime_error(
        "quilt generator: no construction with union area <= " + eps.str() +
        " within max depth " + std::to_string(opts.max_depth) +
        " (smallest available: 125885/2^18 ~ 0.4802)");
}

std::vector<TorusRectangle> symmetrize(const std::vector<TorusRectangle>& rects) {
    std::set<TorusRectangle> out(rects.begin(), rects.end());
    for (const auto& r : rects) out.insert(sigma_reflect_rect(r));
    return {out.begin(), out.end()};
}

std::vector<TorusRectangle> rescale_family(const std::vector<TorusRectangle>& rects, long long L) {
    std::vector<TorusRectangle> out;
    out.reserve(rects.size());
    for (const auto& r : rects) {
        if (L > 1 && (r.x.level < 1 || r.y.level < 1))
            throw std::invalid_argument(
                "rescale: level-0 side present; regenerate the family at depth >= 1");
        out.push_back(homothety(r, L));
    }
    return out;
}

}  // namespace polylab
