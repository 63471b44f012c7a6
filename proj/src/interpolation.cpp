#include "polylab/interpolation.hpp"

#include <cmath>
#include <stdexcept>

namespace polylab {

std::vector<Complex> restriction(const PointSequence& seq, double p, const Evaluable& f) {
    if (p < 1) throw std::invalid_argument("restriction: p must be >= 1");
    std::vector<Complex> out(seq.size());
    for (size_t n = 0; n < seq.size(); ++n) {
        double w = 1.0 / szego_norm_sq(seq.points[n]);  // prod (1-|l^i|^2)
        out[n] = f(seq.points[n].z1, seq.points[n].z2) * std::pow(w, 1.0 / p);
    }
    return out;
}

std::vector<Complex> restriction(const PointSequence& seq, double p, const KernelCombination& f) {
    return restriction(seq, p, [&f](Complex a, Complex b) { return f.eval(a, b); });
}

KernelCombination synthesis(const PointSequence& seq, double t, std::vector<Complex> coeffs) {
    return KernelCombination(seq.points, t, std::move(coeffs));
}

namespace {

// <g_n, g_m>^{1+t} with the power taken factorwise on the principal branch
Complex gram_power(const BidiscPoint& zn, const BidiscPoint& zm, double t) {
    Complex out = 1.0;
    const Complex zs[2] = {zn.z1, zn.z2};
    const Complex ws[2] = {zm.z1, zm.z2};
    for (int i = 0; i < 2; ++i) {
        double num = std::sqrt((1.0 - std::norm(zs[i])) * (1.0 - std::norm(ws[i])));
        Complex base = num / (1.0 - std::conj(ws[i]) * zs[i]);
        out *= std::pow(base, 1.0 + t);
    }
    return out;
}

}  // namespace

NeumannCertificate neumann_certificate(const PointSequence& seq, double p,
                                       std::optional<double> force_t) {
    if (seq.size() == 0) throw std::invalid_argument("certificate: empty sequence");
    if (p < 1) throw std::invalid_argument("certificate: p must be >= 1");
    NeumannCertificate cert;
    cert.p = p;

    double norm0 = szego_norm_sq(seq.points[0]);
    for (const auto& pt : seq.points) {
        if (std::abs(szego_norm_sq(pt) - norm0) > 1e-10 * norm0)
            throw std::invalid_argument("certificate: ||S_lambda|| not constant on the sequence");
    }
    cert.scale = std::pow(std::sqrt(norm0), 1.0 - 2.0 / p);

    GramMatrix g = gram_matrix(seq);
    cert.gamma = weak_separation_gamma(g);
    cert.delta = column_bound_delta(g);

    if (force_t) {
        cert.t_star = *force_t;
    } else if (cert.delta > 0.5) {
        // solve delta (1-gamma^2)^{(t-1)/2} = 1/2, then round up to an integer:
        // the bound only decreases in t, and integer offsets terminate the
        // psi coefficient series.
        double t = 1.0 + 2.0 * std::log(2.0 * cert.delta) /
                             std::log(1.0 / (1.0 - cert.gamma * cert.gamma));
        cert.t_star = std::ceil(t);
    } else {
        cert.t_star = 1.0;
    }
    cert.bound = cert.delta * std::pow(1.0 - cert.gamma * cert.gamma, (cert.t_star - 1.0) / 2.0);

    // M(m, n) = <g_n, g_m>^{1+t} = [S_{l_n}(l_m) / (||S_n|| ||S_m||)]^{1+t},
    // the matrix of scale^{-1} T B_t in the synthesis basis
    int n = (int)seq.size();
    cert.m.resize(n, n);
    for (int mm = 0; mm < n; ++mm)
        for (int nn = 0; nn < n; ++nn)
            cert.m(mm, nn) = gram_power(seq.points[mm], seq.points[nn], cert.t_star);

    Eigen::MatrixXcd dev = cert.m - Eigen::MatrixXcd::Identity(n, n);
    cert.dev_l1 = 0.0;
    cert.dev_linf = 0.0;
    for (int j = 0; j < n; ++j) {
        cert.dev_l1 = std::max(cert.dev_l1, dev.col(j).cwiseAbs().sum());
        cert.dev_linf = std::max(cert.dev_linf, dev.row(j).cwiseAbs().sum());
    }
    if (n <= 512) {
        // dev is Hermitian (principal powers commute with conjugation)
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(dev, Eigen::EigenvaluesOnly);
        cert.dev_l2 = es.eigenvalues().cwiseAbs().maxCoeff();
    } else {
        cert.dev_l2 = std::sqrt(cert.dev_l1 * cert.dev_linf);  // Schur upper bound
    }

    cert.ok = cert.bound <= 0.5 + 1e-12 && cert.dev_l1 <= 0.5 + 1e-9 &&
              cert.dev_linf <= 0.5 + 1e-9 && cert.dev_l2 <= 0.5 + 1e-9;
    return cert;
}

RightInverseSolver::RightInverseSolver(const PointSequence& seq, double p,
                                       const NeumannCertificate& cert, int quad_grid)
    : seq_(seq), p_(p), cert_(cert), quad_grid_(quad_grid) {
    if (!cert_.ok) throw std::invalid_argument("solve: certificate not valid");
    int n = (int)seq_.size();
    lu_ = cert_.m.partialPivLu();
    psi_gram_.resize(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            psi_gram_(i, j) = psi_inner(seq_.points[i], seq_.points[j], cert_.t_star);

    // scale-free a-priori constant ||B_t||_p ||(T B_t)^{-1}||_p:
    // ||B||_2 from the psi Gram spectrum, ||B||_1 from sup ||psi_n||_1 ||S||,
    // Riesz-Thorin in between; the inverse contributes 1/(1 - deviation).
    // Schur bound for the Hermitian PSD psi Gram: one estimator at all sizes
    // keeps the reported constants comparable across blocks.
    double row = 0.0;
    for (int i = 0; i < n; ++i) row = std::max(row, psi_gram_.row(i).cwiseAbs().sum());
    double b2 = std::sqrt(row);
    double s_norm = std::sqrt(szego_norm_sq(seq_.points[0]));
    // distinct modulus pairs determine ||psi||_1; sample one node per pair
    double b1 = 0.0;
    std::vector<std::pair<double, double>> seen;
    for (int i = 0; i < n; ++i) {
        std::pair<double, double> key{std::abs(seq_.points[i].z1), std::abs(seq_.points[i].z2)};
        bool dup = false;
        for (auto& s : seen)
            if (std::abs(s.first - key.first) < 1e-13 && std::abs(s.second - key.second) < 1e-13)
                dup = true;
        if (dup) continue;
        seen.push_back(key);
        auto bn = hp_norm_boundary(
            [&](Complex u, Complex v) { return psi_eval(seq_.points[i], cert_.t_star, u, v); },
            1.0, quad_grid_);
        b1 = std::max(b1, bn.value * s_norm);
    }
    double theta = 2.0 * (1.0 - 1.0 / p_);  // Riesz-Thorin weight toward l2
    double bp = std::pow(b1, 1.0 - theta) * std::pow(b2, theta);
    double dev = std::max({cert_.dev_l1, cert_.dev_linf, cert_.dev_l2});
    apriori_c_ = bp / (1.0 - dev);
}

SolveReport RightInverseSolver::solve(const std::vector<Complex>& targets, bool with_p_norm) const {
    int n = (int)seq_.size();
    if (targets.size() != seq_.size()) throw std::invalid_argument("solve: target size mismatch");
    Eigen::VectorXcd a(n);
    for (int i = 0; i < n; ++i) a(i) = targets[i];
    Eigen::VectorXcd c = lu_.solve(a / cert_.scale);
    std::vector<Complex> coeffs(c.data(), c.data() + n);

    SolveReport rep;
    rep.f = synthesis(seq_, cert_.t_star, coeffs);
    rep.coeffs = coeffs;
    auto back = restriction(seq_, p_, rep.f);
    for (int i = 0; i < n; ++i)
        rep.residual = std::max(rep.residual, std::abs(back[i] - targets[i]));
    rep.norm2 = std::sqrt(std::max(0.0, (c.transpose() * psi_gram_ * c.conjugate())(0).real()));
    if (p_ < 2.0 && with_p_norm) {
        auto bn = hp_norm_boundary(rep.f, p_, quad_grid_);
        rep.norm_p = bn.value;
        rep.norm_p_error = bn.error_estimate;
    } else {
        rep.norm_p = rep.norm2;
    }
    rep.apriori_C = apriori_c_;
    return rep;
}

SolveReport right_inverse_solve(const PointSequence& seq, double p,
                                const std::vector<Complex>& targets,
                                const NeumannCertificate& cert, int quad_grid) {
    return RightInverseSolver(seq, p, cert, quad_grid).solve(targets);
}

Eigen::MatrixXcd dual_system(const GramMatrix& g) {
    if (g.min_eigenvalue() < 1e-12)
        throw std::runtime_error("dual system: Gram matrix numerically singular");
    return g.m.inverse();  // row n holds the coefficients of h_n over the g's
}

std::vector<int> orlicz_signs(const Eigen::MatrixXcd& v_gram) {
    int n = (int)v_gram.rows();
    auto value = [&](const std::vector<int>& eps) {
        Complex s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) s += (double)(eps[i] * eps[j]) * v_gram(i, j);
        return s.real();
    };
    double target = v_gram.diagonal().real().sum();
    std::vector<int> eps(n, 1);
    if (n <= 12) {
        std::vector<int> best = eps;
        double best_val = value(eps);
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> e(n);
            for (int i = 0; i < n; ++i) e[i] = (mask >> i) & 1 ? -1 : 1;
            double v = value(e);
            if (v > best_val) {
                best_val = v;
                best = e;
            }
        }
        return best;
    }
    // greedy sign flips until no improvement; the mean over signs equals the
    // trace, so the maximum cannot be below it
    double cur = value(eps);
    bool improved = true;
    while (improved) {
        improved = false;
        for (int i = 0; i < n; ++i) {
            eps[i] = -eps[i];
            double v = value(eps);
            if (v > cur + 1e-15) {
                cur = v;
                improved = true;
            } else {
                eps[i] = -eps[i];
            }
        }
        if (cur >= target) break;
    }
    return eps;
}

AmarChainReport amar_chain_check(const PointSequence& seq, const Evaluable& g, double p, double r,
                                 int quad_grid) {
    if (std::abs(1.0 / p + 1.0 / r - 0.5) > 1e-12)
        throw std::invalid_argument("amar chain: need 1/p + 1/r = 1/2");
    int n = (int)seq.size();
    AmarChainReport rep;

    GramMatrix gram = gram_matrix(seq);
    Eigen::MatrixXcd ginv = dual_system(gram);

    std::vector<Complex> gvals(n);
    std::vector<double> snorm(n);
    for (int i = 0; i < n; ++i) {
        gvals[i] = g(seq.points[i].z1, seq.points[i].z2);
        snorm[i] = std::sqrt(szego_norm_sq(seq.points[i]));
    }
    for (int i = 0; i < n; ++i)
        rep.sum_g_r += std::pow(std::abs(gvals[i]), r) / (snorm[i] * snorm[i]);

    // Orlicz vectors v_n = |g(l_n)|^{r/2} ||S_n||^{-1} h_n; their Gram is
    // D (G^{-1}) D^H with D = diag(beta)
    Eigen::VectorXd beta(n);
    for (int i = 0; i < n; ++i) beta(i) = std::pow(std::abs(gvals[i]), r / 2.0) / snorm[i];
    Eigen::MatrixXcd vgram = beta.asDiagonal() * ginv * beta.asDiagonal();
    std::vector<int> eps = orlicz_signs(vgram);
    {
        Complex s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) s += (double)(eps[i] * eps[j]) * vgram(i, j);
        rep.orlicz_norm_sq = s.real();
    }
    rep.holds_orlicz = rep.sum_g_r <= rep.orlicz_norm_sq + 1e-10;

    // interpolating f with f(l_n) = eps_n |g|^{r/2} / g (0 where g vanishes);
    // any finite interpolant supports the chain, so take the least-norm one in
    // the span of the Szego kernels (no constant-norm hypothesis needed).
    Eigen::VectorXcd want(n);
    for (int i = 0; i < n; ++i)
        want(i) = std::abs(gvals[i]) == 0.0
                      ? Complex(0.0)
                      : (double)eps[i] * std::pow(std::abs(gvals[i]), r / 2.0) / gvals[i];
    Eigen::MatrixXcd k(n, n);
    for (int mth = 0; mth < n; ++mth)
        for (int nth = 0; nth < n; ++nth) k(mth, nth) = szego(seq.points[mth], seq.points[nth]);
    Eigen::VectorXcd coef = k.partialPivLu().solve(want);
    auto f_eval = [&](Complex a, Complex b) {
        Complex s = 0.0;
        for (int i = 0; i < n; ++i)
            s += coef(i) / ((1.0 - std::conj(seq.points[i].z1) * a) *
                            (1.0 - std::conj(seq.points[i].z2) * b));
        return s;
    };
    for (int i = 0; i < n; ++i)
        rep.solve_residual = std::max(
            rep.solve_residual,
            std::abs(f_eval(seq.points[i].z1, seq.points[i].z2) - want(i)));

    // P_N(fg) = sum (fg)(l_n) ||S_n||^{-1} h_n, norm via G^{-1}
    Eigen::VectorXcd betap(n);
    for (int i = 0; i < n; ++i)
        betap(i) = f_eval(seq.points[i].z1, seq.points[i].z2) * gvals[i] / snorm[i];
    rep.proj_norm_sq = (betap.transpose() * ginv * betap.conjugate())(0).real();

    auto fg = [&](Complex a, Complex b) { return f_eval(a, b) * g(a, b); };
    auto n_fg = hp_norm_boundary(fg, 2.0, quad_grid);
    auto n_f = hp_norm_boundary(f_eval, p, quad_grid);
    auto n_g = hp_norm_boundary(g, r, quad_grid);
    rep.fg_norm_sq = n_fg.value * n_fg.value;
    rep.f_p_norm = n_f.value;
    rep.g_r_norm = n_g.value;
    rep.quad_error = std::max({n_fg.error_estimate, n_f.error_estimate, n_g.error_estimate});

    double tol = 1e-8 + 4.0 * rep.quad_error * (1.0 + rep.f_p_norm + rep.g_r_norm);
    rep.holds_projection = rep.proj_norm_sq <= rep.fg_norm_sq + tol;
    rep.holds_hoelder = rep.fg_norm_sq <= std::pow(rep.f_p_norm * rep.g_r_norm, 2.0) + tol;
    return rep;
}

}  // namespace polylab
