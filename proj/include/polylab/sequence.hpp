#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "polylab/kernel.hpp"
#include "polylab/point.hpp"
#include "polylab/torus.hpp"

namespace polylab {

// Finite point sequence in the bidisc with block provenance.
struct PointSequence {
    std::vector<BidiscPoint> points;
    std::vector<int> block_id;                             // 1-based, contiguous
    std::vector<std::optional<TorusRectangle>> source;     // generating rectangle

    size_t size() const { return points.size(); }
    void append(const BidiscPoint& p, int block, std::optional<TorusRectangle> rect = {});
};

// z_R = (sqrt(1-|I|) e^{2 pi i th1}, sqrt(1-|J|) e^{2 pi i th2}) at the
// midpoints; carries exact polar data so that 1-|z^i|^2 equals the side
// length exactly. Duplicate rectangles are rejected.
PointSequence points_from_rects(const std::vector<TorusRectangle>& rects, int block = 1);

BidiscPoint point_from_rect(const TorusRectangle& r);

struct GramMatrix {
    Eigen::MatrixXcd m;  // m(n, k) = <g_n, g_k>, Hermitian, unit diagonal

    int size() const { return (int)m.rows(); }
    double min_eigenvalue() const;
    double max_offdiag_abs() const;
};

GramMatrix gram_matrix(const PointSequence& seq);

// gamma = sqrt(1 - sup_{n != m} |<g_n,g_m>|^2); 1 for a single point.
double weak_separation_gamma(const GramMatrix& g);

// Delta = sup_m sum_{n != m} |<g_n,g_m>|^2
double column_bound_delta(const GramMatrix& g);

struct PowerColumnSum {
    double value = 0.0;       // sup_m sum_{n != m} |<g_n,g_m>|^{1+t}
    double bound = 0.0;       // Delta (1-gamma^2)^{(t-1)/2}
    bool certified = false;   // value <= bound holds and t >= 1
};
PowerColumnSum power_column_sum(const GramMatrix& g, double t);

struct AtomicMeasure {
    struct Atom {
        BidiscPoint point;
        double weight = 0.0;
        std::optional<Dyadic> exact_weight;
    };
    std::vector<Atom> atoms;

    bool all_exact() const;
    double total() const;
};

// weights prod_i (1 - |lambda^i|^2); exact when the points carry exact polar
// data. Duplicate points merge by weight addition.
AtomicMeasure atomic_measure(const PointSequence& seq);

struct RatioResult {
    double value = 0.0;
    std::optional<Dyadic> exact_mass;  // numerator mu(S(...)) when exact
    Dyadic denominator;                // |R| or |V|
    TorusRectangle witness;            // maximizer (one_box_sup only)

    // exact test value >= bound (requires exact_mass)
    bool exact_at_least(const Dyadic& bound) const;
};

// sup over all dyadic rectangles of mu(S(R))/|R|, by finite enumeration of
// the levels and positions that can capture atoms.
RatioResult one_box_sup(const AtomicMeasure& mu);

// mu(S(V)) / |V| for V a finite union of rectangles.
RatioResult open_set_ratio(const AtomicMeasure& mu, const std::vector<TorusRectangle>& v);

// ||g_z||^2_{L^2(mu)} = sum_atoms w |g_z(lambda)|^2
double kernel_embedding_norm_sq(const AtomicMeasure& mu, const BidiscPoint& z);

// point set invariant under conjugation of the first coordinate (1e-12 match)
bool sigma_invariance_check(const PointSequence& seq);

}  // namespace polylab
