#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polylab/torus.hpp"

namespace polylab {

// Finite family of dyadic rectangles with total mass one and the packing
// property inside every dyadic rectangle.
struct Quilt {
    std::vector<TorusRectangle> rects;
    bool equiareal = false;
    std::optional<Dyadic> common_area;
};

struct QuiltReport {
    bool is_quilt = false;
    bool is_equiareal = false;
    Dyadic total_mass;        // sum of |R|
    Dyadic total_union_area;  // measure of the union
    double worst_packing_ratio = 0.0;  // max over dyadic Q of mass(Q)/|Q|
    TorusRectangle worst_q;
    std::string error;  // set on structural rejection (non-dyadic input, ...)

    bool rejected() const { return !error.empty(); }
};

// Checks mass, packing (all dyadic Q up to the finest level present; coarser
// and finer Q cannot be tight), duplicates and equiareality. Exact arithmetic.
QuiltReport verify_quilt(const std::vector<TorusRectangle>& rects);

// Packing oracle by brute force: enumerates every dyadic Q with side levels
// up to max_level and tests containment rect by rect. Test-scale only.
bool packing_oracle(const std::vector<TorusRectangle>& rects, int max_level);

struct QuiltGenOptions {
    int max_depth = 40;  // resource guard on the construction depth
};

// Equiareal quilt with union area <= eps, all side levels >= 1; the output is
// re-verified before being returned.
Quilt generate_carleson_quilt(const Dyadic& eps, const QuiltGenOptions& opts = {});

// rects(q) union sigma(rects(q)) as a set (duplicates removed).
std::vector<TorusRectangle> symmetrize(const std::vector<TorusRectangle>& rects);

// homothety applied to each rectangle; requires side levels >= 1 when L > 1
std::vector<TorusRectangle> rescale_family(const std::vector<TorusRectangle>& rects, long long L);

}  // namespace polylab
