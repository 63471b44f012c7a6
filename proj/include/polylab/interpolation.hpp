#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>

#include "polylab/kernel.hpp"
#include "polylab/sequence.hpp"

namespace polylab {

using Evaluable = std::function<Complex(Complex, Complex)>;

// T_Lambda^p f = ( f(lambda_n) prod_i (1-|lambda_n^i|^2)^{1/p} )_n
std::vector<Complex> restriction(const PointSequence& seq, double p, const Evaluable& f);
std::vector<Complex> restriction(const PointSequence& seq, double p, const KernelCombination& f);

// B_t(a) = sum a_n psi_{lambda_n, t}
KernelCombination synthesis(const PointSequence& seq, double t, std::vector<Complex> coeffs);

struct NeumannCertificate {
    double t_star = 1.0;
    double bound = 0.0;   // Delta (1-gamma^2)^{(t-1)/2} at t_star
    double scale = 1.0;   // ||S_{lambda_1}||^{1 - 2/p}
    double gamma = 1.0;
    double delta = 0.0;
    double dev_l1 = 0.0, dev_linf = 0.0, dev_l2 = 0.0;  // measured ||Id - M||
    bool ok = false;
    double p = 2.0;
    Eigen::MatrixXcd m;  // M(m,n) = <g_n, g_m>^{1+t}, factorwise principal branch
};

// Solves Delta (1-gamma^2)^{(t-1)/2} = 1/2 for t (t = 1 when Delta <= 1/2),
// assembles M and certifies the deviation <= 1/2 in l1, linf and l2 norms.
// Throws if the kernel norms are not constant on the sequence. A forced t
// overrides the solved t_star (used when several blocks share one t).
NeumannCertificate neumann_certificate(const PointSequence& seq, double p,
                                       std::optional<double> force_t = {});

struct SolveReport {
    KernelCombination f;
    std::vector<Complex> coeffs;
    double residual = 0.0;       // max_n |(T f)_n - a_n|
    double norm2 = 0.0;          // exact ||f||_2 via the psi Gram form
    double norm_p = 0.0;         // boundary-quadrature ||f||_p (p < 2), else norm2
    double norm_p_error = 0.0;
    double apriori_C = 0.0;      // ||B_t||_p ||(T B_t)^{-1}||_p bound, scale-free
};

// f = B_t (T B_t)^{-1} a via direct solve; restriction(f) = a to solver
// accuracy. Requires a passing certificate.
class RightInverseSolver {
public:
    RightInverseSolver(const PointSequence& seq, double p, const NeumannCertificate& cert,
                       int quad_grid = 128);

    SolveReport solve(const std::vector<Complex>& targets, bool with_p_norm = true) const;
    double apriori_C() const { return apriori_c_; }
    const NeumannCertificate& certificate() const { return cert_; }

private:
    PointSequence seq_;
    double p_;
    NeumannCertificate cert_;
    int quad_grid_;
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu_;
    Eigen::MatrixXcd psi_gram_;
    double apriori_c_ = 0.0;
};

SolveReport right_inverse_solve(const PointSequence& seq, double p,
                                const std::vector<Complex>& targets,
                                const NeumannCertificate& cert, int quad_grid = 128);

// Minimal dual system: h_n = sum_m (G^{-1})(n,m) g_m as coefficient rows.
// Refused when min eigenvalue < 1e-12.
Eigen::MatrixXcd dual_system(const GramMatrix& g);

// Signs eps in {+-1}^N with ||sum eps_n v_n||^2 >= sum ||v_n||^2, given the
// Gram matrix of the v's. Exhaustive for N <= 12, greedy flips beyond.
std::vector<int> orlicz_signs(const Eigen::MatrixXcd& v_gram);

struct AmarChainReport {
    double sum_g_r = 0.0;        // sum |g(l_n)|^r ||S_n||^{-2}
    double orlicz_norm_sq = 0.0; // ||sum eps_n |g|^{r/2} ||S||^{-1} h_n||^2
    double proj_norm_sq = 0.0;   // ||P_N(f g)||^2 from the solved f
    double fg_norm_sq = 0.0;     // ||f g||_2^2 (quadrature)
    double f_p_norm = 0.0;       // ||f||_p (quadrature)
    double g_r_norm = 0.0;       // ||g||_r (quadrature)
    double quad_error = 0.0;     // max reported quadrature error estimate
    double solve_residual = 0.0;
    bool holds_orlicz = false;   // sum_g_r <= orlicz_norm_sq
    bool holds_projection = false;  // proj_norm_sq <= fg_norm_sq
    bool holds_hoelder = false;     // fg_norm_sq <= (||f||_p ||g||_r)^2
    bool all_hold() const { return holds_orlicz && holds_projection && holds_hoelder; }
};

// Runs the finite-N inequality chain for given g and conjugate pair (p, r)
// with 1/p + 1/r = 1/2.
AmarChainReport amar_chain_check(const PointSequence& seq, const Evaluable& g, double p, double r,
                                 int quad_grid = 128);

}  // namespace polylab
