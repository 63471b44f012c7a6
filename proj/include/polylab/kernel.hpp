#pragma once

#include <functional>
#include <vector>

#include "polylab/point.hpp"

namespace polylab {

// Szego kernel S(z,w) = prod_i 1/(1 - conj(w^i) z^i) and friends.
Complex szego(const BidiscPoint& z, const BidiscPoint& w);
double szego_norm_sq(const BidiscPoint& w);  // prod_i 1/(1-|w^i|^2)

// <g_w, g_z> = S(z,w) / (||S_z|| ||S_w||); modulus < 1 for z != w.
Complex gram_entry(const BidiscPoint& z, const BidiscPoint& w);

// psi_{w,t}(z) = S_w^{1+t}(z) / ||S_w||^{1+2t}, principal branch per factor.
// z may lie on the closed bidisc (boundary included).
Complex psi_eval(const BidiscPoint& w, double t, Complex z1, Complex z2);

// <psi_{z,tz}, psi_{w,tw}> by the coefficient series
//   prod_i sum_n c_n(tz) c_n(tw) (conj(z^i) w^i)^n / (||S_z||^{1+2tz} ||S_w||^{1+2tw})
// with c_n(t) = prod_{j<=n} (j+t)/j. The series is summed until a certified
// geometric tail bound falls below tol; exceeding max_terms throws with the
// achieved bound in the message.
Complex psi_inner_general(const BidiscPoint& z, double tz, const BidiscPoint& w, double tw,
                          double tol = 1e-12, int max_terms = 200000);
Complex psi_inner(const BidiscPoint& z, const BidiscPoint& w, double t, double tol = 1e-12);

// Finite combination sum_n coeffs[n] * psi_{nodes[n], t}.
class KernelCombination {
public:
    KernelCombination() = default;
    KernelCombination(std::vector<BidiscPoint> nodes, double t, std::vector<Complex> coeffs);

    Complex eval(Complex z1, Complex z2) const;
    // exact H^2 norm squared via the pairwise psi inner products
    double norm2_sq(double tol = 1e-12) const;

    const std::vector<BidiscPoint>& nodes() const { return nodes_; }
    double power_offset() const { return t_; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }

private:
    std::vector<BidiscPoint> nodes_;
    double t_ = 1.0;
    std::vector<Complex> coeffs_;
};

struct BoundaryNorm {
    double value = 0.0;           // ||f||_p estimate at the finer grid
    double error_estimate = 0.0;  // |finer - coarser| of ||f||_p
    int grid = 0;
};

// Tensor trapezoid quadrature of |f|^p over T^2 at r = 1 with grid
// refinement for the error estimate. Rejects grid < 8.
BoundaryNorm hp_norm_boundary(const std::function<Complex(Complex, Complex)>& f, double p,
                              int grid = 256);
BoundaryNorm hp_norm_boundary(const KernelCombination& f, double p, int grid = 256);

class LaurentPolynomial2D;
BoundaryNorm hp_norm_boundary(const LaurentPolynomial2D& f, double p, int grid = 256);

}  // namespace polylab
