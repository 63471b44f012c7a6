#include "polylab/kernel.hpp"

#include "polylab/laurent.hpp"

#include <cmath>
#include <numbers>

#include "polylab/parallel.hpp"
#include <sstream>
#include <stdexcept>

namespace polylab {

Complex szego(const BidiscPoint& z, const BidiscPoint& w) {
    Complex f1 = 1.0 / (1.0 - std::conj(w.z1) * z.z1);
    Complex f2 = 1.0 / (1.0 - std::conj(w.z2) * z.z2);
    return f1 * f2;
}

double szego_norm_sq(const BidiscPoint& w) {
    return 1.0 / ((1.0 - std::norm(w.z1)) * (1.0 - std::norm(w.z2)));
}

Complex gram_entry(const BidiscPoint& z, const BidiscPoint& w) {
    return szego(z, w) / std::sqrt(szego_norm_sq(z) * szego_norm_sq(w));
}

Complex psi_eval(const BidiscPoint& w, double t, Complex z1, Complex z2) {
    if (t <= 0) throw std::invalid_argument("psi: t must be positive");
    Complex b1 = 1.0 - std::conj(w.z1) * z1;
    Complex b2 = 1.0 - std::conj(w.z2) * z2;
    Complex num = std::pow(b1, -(1.0 + t)) * std::pow(b2, -(1.0 + t));
    return num * std::pow(szego_norm_sq(w), -(1.0 + 2.0 * t) / 2.0);
}

namespace {

// sum_n c_n(ta) c_n(tb) x^n with c_n(t) = prod_{j<=n}(j+t)/j, i.e. the Gauss
// series 2F1(1+ta, 1+tb; 1; x). Evaluated through the Euler transform
//   (1-x)^{-(1+ta+tb)} 2F1(-ta, -tb; 1; x),
// whose series has terms ~ n^{-(2+ta+tb)}: it terminates for integer offsets
// and converges uniformly up to |x| = 1 otherwise. The tail bound
// |g_n| (n+1)/(1+ta+tb) after n > max(ta,tb)+1 follows from
// log(1-u) <= -u applied to the term ratio.
Complex coefficient_series(Complex x, double ta, double tb, double tol, int max_terms) {
    if (std::abs(x) == 0.0) return 1.0;
    Complex sum = 1.0;
    double kappa = 2.0 + ta + tb;
    Complex term = 1.0;  // g_n x^n
    bool done = false;
    for (int n = 1; n <= max_terms; ++n) {
        term *= (((n - 1) - ta) * ((n - 1) - tb)) / ((double)n * n) * x;
        if (term == Complex(0.0)) {  // integer offsets terminate the series
            done = true;
            break;
        }
        sum += term;
        if (n > std::max(ta, tb) + 1.0) {
            double tail = std::abs(term) * (n + 1) / (kappa - 1.0);
            if (tail < tol) {
                done = true;
                break;
            }
        }
    }
    if (!done) {
        std::ostringstream os;
        os << "psi series: tolerance " << tol << " unreachable in " << max_terms
           << " terms (last term magnitude " << std::abs(term) << ")";
        throw std::runtime_error(os.str());
    }
    return std::pow(1.0 - x, -(1.0 + ta + tb)) * sum;
}

}  // namespace

Complex psi_inner_general(const BidiscPoint& z, double tz, const BidiscPoint& w, double tw,
                          double tol, int max_terms) {
    if (tz <= 0 || tw <= 0) throw std::invalid_argument("psi_inner: t must be positive");
    if (tol <= 0) throw std::invalid_argument("psi_inner: tol must be positive");
    Complex f1 = coefficient_series(std::conj(z.z1) * w.z1, tz, tw, tol, max_terms);
    Complex f2 = coefficient_series(std::conj(z.z2) * w.z2, tz, tw, tol, max_terms);
    double nz = std::pow(szego_norm_sq(z), (1.0 + 2.0 * tz) / 2.0);
    double nw = std::pow(szego_norm_sq(w), (1.0 + 2.0 * tw) / 2.0);
    return f1 * f2 / (nz * nw);
}

Complex psi_inner(const BidiscPoint& z, const BidiscPoint& w, double t, double tol) {
    return psi_inner_general(z, t, w, t, tol);
}

KernelCombination::KernelCombination(std::vector<BidiscPoint> nodes, double t,
                                     std::vector<Complex> coeffs)
    : nodes_(std::move(nodes)), t_(t), coeffs_(std::move(coeffs)) {
    if (nodes_.size() != coeffs_.size())
        throw std::invalid_argument("kernel combination: nodes/coeffs size mismatch");
    if (t_ <= 0) throw std::invalid_argument("kernel combination: t must be positive");
}

Complex KernelCombination::eval(Complex z1, Complex z2) const {
    Complex s = 0.0;
    for (size_t n = 0; n < nodes_.size(); ++n) s += coeffs_[n] * psi_eval(nodes_[n], t_, z1, z2);
    return s;
}

double KernelCombination::norm2_sq(double tol) const {
    Complex s = 0.0;
    for (size_t n = 0; n < nodes_.size(); ++n)
        for (size_t m = 0; m < nodes_.size(); ++m)
            s += coeffs_[n] * std::conj(coeffs_[m]) * psi_inner(nodes_[n], nodes_[m], t_, tol);
    return s.real();
}

namespace {

double boundary_p_mean(const std::function<Complex(Complex, Complex)>& f, double p, int grid) {
    double two_pi = 2.0 * std::numbers::pi;
    std::vector<Complex> ring(grid);
    for (int j = 0; j < grid; ++j) {
        double th = two_pi * j / grid;
        ring[j] = Complex(std::cos(th), std::sin(th));
    }
    std::vector<double> row_acc(grid, 0.0);
    parallel_for(0, grid, [&](long long lo, long long hi) {
        for (long long j = lo; j < hi; ++j) {
            double acc = 0.0;
            for (int k = 0; k < grid; ++k) acc += std::pow(std::abs(f(ring[j], ring[k])), p);
            row_acc[j] = acc;
        }
    });
    double acc = 0.0;
    for (double v : row_acc) acc += v;
    return std::pow(acc / ((double)grid * grid), 1.0 / p);
}

}  // namespace

BoundaryNorm hp_norm_boundary(const std::function<Complex(Complex, Complex)>& f, double p,
                              int grid) {
    if (grid < 8) throw std::invalid_argument("hp_norm_boundary: grid must be >= 8");
    if (p < 1) throw std::invalid_argument("hp_norm_boundary: p must be >= 1");
    double coarse = boundary_p_mean(f, p, grid / 2);
    double fine = boundary_p_mean(f, p, grid);
    return {fine, std::abs(fine - coarse), grid};
}

BoundaryNorm hp_norm_boundary(const KernelCombination& f, double p, int grid) {
    return hp_norm_boundary([&f](Complex a, Complex b) { return f.eval(a, b); }, p, grid);
}

BoundaryNorm hp_norm_boundary(const LaurentPolynomial2D& f, double p, int grid) {
    return hp_norm_boundary([&f](Complex a, Complex b) { return f.eval(a, b); }, p, grid);
}

}  // namespace polylab
