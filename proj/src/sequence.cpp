#include "polylab/sequence.hpp"

#include "polylab/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace polylab {

void PointSequence::append(const BidiscPoint& p, int block, std::optional<TorusRectangle> rect) {
    points.push_back(p);
    block_id.push_back(block);
    source.push_back(std::move(rect));
}

BidiscPoint point_from_rect(const TorusRectangle& r) {
    auto coord = [](const TorusInterval& iv) {
        Dyadic len = iv.length();
        Dyadic mid = iv.midpoint();
        double radius = std::sqrt(1.0 - len.to_double());
        double th = 2.0 * std::numbers::pi * mid.to_double();
        PolarExact exact{Dyadic(1) - len, mid};  // r^2 = 1 - |I| exactly
        Complex z(radius * std::cos(th), radius * std::sin(th));
        return std::make_pair(z, exact);
    };
    auto [z1, e1] = coord(r.x);
    auto [z2, e2] = coord(r.y);
    BidiscPoint p(z1, z2);
    p.exact1 = e1;
    p.exact2 = e2;
    return p;
}

PointSequence points_from_rects(const std::vector<TorusRectangle>& rects, int block) {
    {
        auto sorted = rects;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("points_from_rects: duplicate rectangles");
    }
    PointSequence seq;
    for (const auto& r : rects) seq.append(point_from_rect(r), block, r);
    return seq;
}

double GramMatrix::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

double GramMatrix::max_offdiag_abs() const {
    double v = 0.0;
    for (int n = 0; n < size(); ++n)
        for (int k = 0; k < size(); ++k)
            if (n != k) v = std::max(v, std::abs(m(n, k)));
    return v;
}

GramMatrix gram_matrix(const PointSequence& seq) {
    int n = (int)seq.size();
    GramMatrix g;
    g.m.resize(n, n);
    parallel_for(0, n, [&](long long lo, long long hi) {
        for (long long i = lo; i < hi; ++i) {
            g.m(i, i) = 1.0;
            for (int j = (int)i + 1; j < n; ++j) {
                Complex v = gram_entry(seq.points[i], seq.points[j]);
                g.m(i, j) = std::conj(v);
                g.m(j, i) = v;
            }
        }
    });
    return g;
}

double weak_separation_gamma(const GramMatrix& g) {
    double sup = g.max_offdiag_abs();
    if (sup >= 1.0) throw std::runtime_error("degenerate sequence: |<g_n,g_m>| >= 1");
    return std::sqrt(1.0 - sup * sup);
}

double column_bound_delta(const GramMatrix& g) {
    double best = 0.0;
    for (int m = 0; m < g.size(); ++m) {
        double s = 0.0;
        for (int n = 0; n < g.size(); ++n)
            if (n != m) s += std::norm(g.m(n, m));
        best = std::max(best, s);
    }
    return best;
}

PowerColumnSum power_column_sum(const GramMatrix& g, double t) {
    PowerColumnSum out;
    for (int m = 0; m < g.size(); ++m) {
        double s = 0.0;
        for (int n = 0; n < g.size(); ++n)
            if (n != m) s += std::pow(std::abs(g.m(n, m)), 1.0 + t);
        out.value = std::max(out.value, s);
    }
    double gamma = weak_separation_gamma(g);
    double delta = column_bound_delta(g);
    out.bound = delta * std::pow(1.0 - gamma * gamma, (t - 1.0) / 2.0);
    out.certified = t >= 1.0 && out.value <= out.bound + 1e-12;
    return out;
}

bool AtomicMeasure::all_exact() const {
    for (const auto& a : atoms)
        if (!a.exact_weight) return false;
    return true;
}

double AtomicMeasure::total() const {
    double s = 0.0;
    for (const auto& a : atoms) s += a.weight;
    return s;
}

AtomicMeasure atomic_measure(const PointSequence& seq) {
    AtomicMeasure mu;
    for (const auto& p : seq.points) {
        AtomicMeasure::Atom a;
        a.point = p;
        if (p.has_exact()) {
            Dyadic w = (Dyadic(1) - p.exact1->r_sq) * (Dyadic(1) - p.exact2->r_sq);
            a.exact_weight = w;
            a.weight = w.to_double();
        } else {
            a.weight = (1.0 - std::norm(p.z1)) * (1.0 - std::norm(p.z2));
        }
        // merge duplicates by weight addition
        bool merged = false;
        for (auto& b : mu.atoms) {
            if (std::abs(b.point.z1 - a.point.z1) < 1e-15 &&
                std::abs(b.point.z2 - a.point.z2) < 1e-15) {
                b.weight += a.weight;
                if (b.exact_weight && a.exact_weight)
                    b.exact_weight = *b.exact_weight + *a.exact_weight;
                else
                    b.exact_weight.reset();
                merged = true;
                break;
            }
        }
        if (!merged) mu.atoms.push_back(a);
    }
    return mu;
}

bool RatioResult::exact_at_least(const Dyadic& bound) const {
    if (!exact_mass) throw std::runtime_error("ratio: exact mass unavailable");
    // mass / den >= bound  <=>  mass >= bound * den
    return *exact_mass >= bound * denominator;
}

namespace {

// largest dyadic level a such that the radial test 1-r <= 2^{-a} holds
int max_capture_level(const AtomicMeasure::Atom& atom, int axis) {
    const auto& ex = axis == 0 ? atom.point.exact1 : atom.point.exact2;
    if (ex) {
        if (ex->r_sq.is_zero()) return -1;  // zero coordinate: in no region
        int a = 0;
        while (a < 62) {
            Dyadic rad = Dyadic(1) - Dyadic::pow2(a + 1);
            if (rad.sign() > 0 && ex->r_sq < rad * rad) break;
            ++a;
        }
        return a;
    }
    double r = std::abs(axis == 0 ? atom.point.z1 : atom.point.z2);
    if (r == 0.0) return -1;
    int a = 0;
    while (a < 62 && 1.0 - r <= std::ldexp(1.0, -(a + 1))) ++a;
    return a;
}

Dyadic angle_of(const AtomicMeasure::Atom& atom, int axis) {
    const auto& ex = axis == 0 ? atom.point.exact1 : atom.point.exact2;
    if (ex) return ex->theta;
    double th = std::arg(axis == 0 ? atom.point.z1 : atom.point.z2) / (2.0 * std::numbers::pi);
    th -= std::floor(th);
    // round to a fine dyadic grid for candidate generation only
    return Dyadic::frac((long long)std::floor(th * std::ldexp(1.0, 50)), 50);
}

}  // namespace

RatioResult one_box_sup(const AtomicMeasure& mu) {
    RatioResult out;
    out.denominator = Dyadic(1);
    if (mu.atoms.empty()) return out;

    // candidate intervals per axis: for each atom, the level-a dyadic interval
    // containing its angle, for every feasible capture level a
    auto candidates = [&](int axis) {
        std::set<TorusInterval> cs;
        for (const auto& atom : mu.atoms) {
            int amax = max_capture_level(atom, axis);
            Dyadic th = angle_of(atom, axis);
            for (int a = 0; a <= amax; ++a) {
                long long idx = th.doubled(a).floor();
                cs.insert(TorusInterval(Dyadic::frac(idx, a), a));
            }
        }
        return std::vector<TorusInterval>(cs.begin(), cs.end());
    };
    auto xs = candidates(0), ys = candidates(1);

    bool exact = mu.all_exact();
    size_t natoms = mu.atoms.size();
    // per-candidate admissible atom sets: the one-coordinate membership test
    auto admissible = [&](const std::vector<TorusInterval>& cands, int axis) {
        std::vector<std::vector<uint32_t>> sets(cands.size());
        for (size_t c = 0; c < cands.size(); ++c) {
            TorusRectangle probe(axis == 0 ? cands[c] : TorusInterval(Dyadic(0), 0),
                                 axis == 0 ? TorusInterval(Dyadic(0), 0) : cands[c]);
            for (size_t a = 0; a < natoms; ++a)
                if (box_contains(probe, mu.atoms[a].point)) sets[c].push_back((uint32_t)a);
        }
        return sets;
    };
    auto xsets = admissible(xs, 0), ysets = admissible(ys, 1);

    double best = -1.0;
    std::vector<char> in_x(natoms, 0);
    for (size_t cx = 0; cx < xs.size(); ++cx) {
        for (uint32_t a : xsets[cx]) in_x[a] = 1;
        double xmass_cap = 0.0;
        for (uint32_t a : xsets[cx]) xmass_cap += mu.atoms[a].weight;
        for (size_t cy = 0; cy < ys.size(); ++cy) {
            Dyadic area = Dyadic::pow2(xs[cx].level + ys[cy].level);
            double darea = area.to_double();
            double cap = 0.0;
            for (uint32_t a : ysets[cy]) cap += mu.atoms[a].weight;
            if (std::min(cap, xmass_cap) / darea <= best) continue;  // cannot win
            double mass = 0.0;
            Dyadic emass(0);
            for (uint32_t a : ysets[cy]) {
                if (!in_x[a]) continue;
                mass += mu.atoms[a].weight;
                if (exact) emass += *mu.atoms[a].exact_weight;
            }
            double ratio = mass / darea;
            if (ratio > best) {
                best = ratio;
                out.value = ratio;
                out.witness = TorusRectangle(xs[cx], ys[cy]);
                out.denominator = area;
                if (exact)
                    out.exact_mass = emass;
                else
                    out.exact_mass.reset();
            }
        }
        for (uint32_t a : xsets[cx]) in_x[a] = 0;
    }
    return out;
}

RatioResult open_set_ratio(const AtomicMeasure& mu, const std::vector<TorusRectangle>& v) {
    Dyadic area = union_measure(v);
    if (area.is_zero()) throw std::invalid_argument("open_set_ratio: |V| = 0");
    BoxUnion region(v);
    RatioResult out;
    out.denominator = area;
    bool exact = mu.all_exact();
    double mass = 0.0;
    Dyadic emass(0);
    for (const auto& atom : mu.atoms) {
        if (region.contains(atom.point)) {
            mass += atom.weight;
            if (exact) emass += *atom.exact_weight;
        }
    }
    out.value = mass / area.to_double();
    if (exact) out.exact_mass = emass;
    return out;
}

double kernel_embedding_norm_sq(const AtomicMeasure& mu, const BidiscPoint& z) {
    double inv_norm_sq = 1.0 / szego_norm_sq(z);
    double s = 0.0;
    for (const auto& atom : mu.atoms)
        s += atom.weight * std::norm(szego(atom.point, z)) * inv_norm_sq;
    return s;
}

bool sigma_invariance_check(const PointSequence& seq) {
    for (const auto& p : seq.points) {
        Complex target1 = std::conj(p.z1);
        bool found = false;
        for (const auto& q : seq.points) {
            if (std::abs(q.z1 - target1) < 1e-12 && std::abs(q.z2 - p.z2) < 1e-12) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

}  // namespace polylab
