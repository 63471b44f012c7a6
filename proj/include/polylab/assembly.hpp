#pragma once

#include <string>
#include <vector>

#include "polylab/interpolation.hpp"
#include "polylab/quilt.hpp"
#include "polylab/sequence.hpp"

namespace polylab {

struct BlockPlan {
    int blocks = 1;
    std::vector<Dyadic> eps;  // defaults to the largest dyadic <= 1/M
    double eta = 0.5;         // cross-block Gram tolerance factor
    std::uint64_t seed = 1;
    int targets_per_block = 20;
    int quad_grid = 128;
    QuiltGenOptions quilt_opts;

    // largest dyadic rational <= 1/m
    static Dyadic default_eps(int m);
    void fill_defaults();
};

// Finite Blaschke product with the given zeros.
Complex blaschke_eval(const std::vector<Complex>& zeros, Complex z);

// Grid estimate of inf_z min_i { |Theta_i(z)| + prod_{j != i} |Theta_j(z)| }.
// A heuristic lower bound, not a certificate. Rejects grid < 16.
double corona_separation(const std::vector<std::vector<Complex>>& block_zeros, int grid);

// Greedy scale selection: L_M doubles from 2 L_{M-1} until the largest Gram
// entry between the new block and all previous points is <= eta 2^{-M}.
struct ScaleChoice {
    std::vector<long long> scales;
    std::vector<double> cross_gram;  // achieved per block
    bool capped = false;             // iteration limit hit
};
ScaleChoice choose_scales(const std::vector<std::vector<TorusRectangle>>& sym_quilts, double eta,
                          int max_doublings = 40);

// The assembled union of rescaled symmetrized quilt blocks, block ids 1..M.
PointSequence assemble(const BlockPlan& plan);

struct BlockReport {
    int index = 0;
    Dyadic eps;
    long long scale = 0;
    int rect_count = 0;
    int point_count = 0;
    double gamma = 0.0, delta = 0.0;
    double t_star = 0.0, cert_bound = 0.0, cert_dev = 0.0;
    double one_box = 0.0;
    double open_set_ratio = 0.0;
    bool ratio_at_least_m = false;
    double interp_C_p2 = 0.0, interp_C_p1 = 0.0;
    double max_ratio_p2 = 0.0, max_ratio_p1 = 0.0;  // measured ||f||_p / ||a||_p
    double max_residual = 0.0;
    std::string error;
};

struct GlobalReport {
    bool sigma_invariant = false;
    double gamma = 0.0, delta = 0.0;
    double max_cross_gram = 0.0, cross_gram_bound = 0.0;
    double corona_delta_est = 0.0;
    double cross_power_chi = 0.0;
    double p2_residual = 0.0, p2_C = 0.0, p2_bound = 0.0;
    double p1_residual = 0.0, p1_C = 0.0, p1_bound = 0.0;
    double block_C_spread_p2 = 0.0;  // max/min over blocks
    int point_count = 0;
};

struct AssemblyReport {
    std::vector<BlockReport> blocks;
    GlobalReport global;
    std::uint64_t seed = 0;
    bool all_ok = false;
    std::string failure;  // first structural failure, if any
};

// Runs the whole pipeline: per-block certificates and solves for p in {1,2},
// exact Carleson ratios, sigma invariance, cross-block Gram decay, and the
// global interpolation solves on the union. Sub-certificate failures are
// recorded in the report, never masked.
AssemblyReport certify_counterexample(const BlockPlan& plan);

}  // namespace polylab
