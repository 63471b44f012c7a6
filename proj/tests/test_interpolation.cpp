#include <cmath>

#include "doctest.h"
#include "polylab/interpolation.hpp"
#include "polylab/quilt.hpp"
#include "polylab/rng.hpp"

using namespace polylab;

namespace {

PointSequence symmetric_pair() {
    PointSequence seq;
    seq.append(BidiscPoint(Complex(0.5, 0), Complex(0, 0)), 1);
    seq.append(BidiscPoint(Complex(-0.5, 0), Complex(0, 0)), 1);
    return seq;
}

}  // namespace

TEST_CASE("restriction operator") {
    PointSequence seq;
    seq.append(BidiscPoint(Complex(0.5, 0), Complex(0.3, 0)), 1);

    auto ones = restriction(seq, 2.0, [](Complex, Complex) { return Complex(1.0); });
    double w = (1 - 0.25) * (1 - 0.09);
    CHECK(std::abs(ones[0] - std::sqrt(w)) < 1e-14);

    // f = S_lambda at p = 2: value ||S_lambda||
    auto slam = restriction(seq, 2.0, [&](Complex a, Complex b) {
        return szego(BidiscPoint(a * (1 - 1e-18), b * (1 - 1e-18)), seq.points[0]);
    });
    CHECK(std::abs(slam[0] - std::sqrt(szego_norm_sq(seq.points[0]))) < 1e-10);

    auto zero = restriction(seq, 1.0, [](Complex, Complex) { return Complex(0.0); });
    CHECK(zero[0] == Complex(0.0));
}

TEST_CASE("neumann certificate") {
    PointSequence single;
    single.append(BidiscPoint(Complex(0.3, 0.2), Complex(0, 0)), 1);
    auto c1 = neumann_certificate(single, 2.0);
    CHECK(c1.ok);
    CHECK(c1.t_star == doctest::Approx(1.0));
    CHECK(c1.bound == doctest::Approx(0.0));
    CHECK(c1.m(0, 0) == Complex(1.0));

    auto pair = symmetric_pair();
    auto c2 = neumann_certificate(pair, 2.0);
    CHECK(c2.ok);
    CHECK(c2.gamma == doctest::Approx(0.8));
    CHECK(c2.delta == doctest::Approx(0.36));
    CHECK(c2.t_star == doctest::Approx(1.0));       // delta < 1/2
    CHECK(c2.dev_l1 == doctest::Approx(0.36));      // (3/5)^2
    CHECK(c2.bound <= 0.5);

    // hypothesis violation: unequal kernel norms
    PointSequence bad;
    bad.append(BidiscPoint(Complex(0.5, 0), Complex(0, 0)), 1);
    bad.append(BidiscPoint(Complex(0.7, 0), Complex(0, 0)), 1);
    CHECK_THROWS(neumann_certificate(bad, 2.0));
}

TEST_CASE("t-star solves the bound equation") {
    // synthetic check of the closed form: delta (1-gamma^2)^{(t-1)/2} = 1/2
    double delta = 1.0, gamma_sq = 0.75;
    double t = 1.0 + 2.0 * std::log(2.0 * delta) / std::log(1.0 / (1.0 - gamma_sq));
    CHECK(t == doctest::Approx(2.0));
    CHECK(delta * std::pow(1.0 - gamma_sq, (t - 1.0) / 2.0) == doctest::Approx(0.5));
}

TEST_CASE("right inverse solve") {
    PointSequence single;
    single.append(BidiscPoint(Complex(0.4, 0.1), Complex(-0.2, 0.3)), 1);
    auto cert = neumann_certificate(single, 2.0);
    auto sol = right_inverse_solve(single, 2.0, {Complex(1.0)}, cert);
    CHECK(sol.residual <= 1e-10);

    auto zero = right_inverse_solve(single, 2.0, {Complex(0.0)}, cert);
    CHECK(zero.norm2 == doctest::Approx(0.0));

    auto pair = symmetric_pair();
    auto cert2 = neumann_certificate(pair, 2.0);
    auto sol2 = right_inverse_solve(pair, 2.0, {Complex(1.0), Complex(1.0)}, cert2);
    CHECK(sol2.residual <= 1e-10);
    CHECK(std::abs(sol2.coeffs[0] - sol2.coeffs[1]) < 1e-12);  // symmetric data

    for (double p : {1.0, 1.5, 2.0}) {
        auto certp = neumann_certificate(pair, p);
        Rng rng(55);
        auto a = rng.unit_vector(2, p);
        auto solp = right_inverse_solve(pair, p, a, certp, 64);
        CHECK(solp.residual <= 1e-10);
        CHECK(solp.apriori_C > 0.0);
    }
}

TEST_CASE("norm stability across quilt blocks") {
    // quilt blocks at eps in {1, 1/2}: measured ||f||_2/||a||_2 stays below
    // the a-priori constant
    Rng rng(66);
    for (const char* etext : {"1", "1/2"}) {
        Dyadic eps = etext[1] ? Dyadic::frac(1, 1) : Dyadic(1);
        Quilt q = generate_carleson_quilt(eps);
        auto seq = points_from_rects(symmetrize(q.rects));
        auto cert = neumann_certificate(seq, 2.0);
        REQUIRE(cert.ok);
        RightInverseSolver solver(seq, 2.0, cert, 64);
        for (int it = 0; it < 3; ++it) {
            auto a = rng.unit_vector(seq.size(), 2.0);
            auto sol = solver.solve(a);
            CHECK(sol.residual <= 1e-10);
            CHECK(sol.norm2 <= solver.apriori_C() + 1e-9);
        }
    }
}

TEST_CASE("matrix entries match the psi evaluation route at integer t") {
    // M(m,n) ||S|| = psi_{n,t}(lambda_m): both sides are factorwise principal
    // powers, so this is a polynomial identity at integer t.
    Rng rng(99);
    PointSequence seq;
    TorusRectangle r0(TorusInterval(Dyadic(0), 2), TorusInterval(Dyadic::frac(1, 2), 3));
    TorusRectangle r1(TorusInterval(Dyadic::frac(1, 2), 2), TorusInterval(Dyadic(0), 3));
    seq.append(point_from_rect(r0), 1, r0);
    seq.append(point_from_rect(r1), 1, r1);
    for (double t : {1.0, 2.0}) {
        auto cert = neumann_certificate(seq, 2.0, t);
        double snorm = std::sqrt(szego_norm_sq(seq.points[0]));
        for (int m = 0; m < 2; ++m)
            for (int n = 0; n < 2; ++n) {
                Complex lhs = cert.m(m, n) * snorm;
                Complex rhs = psi_eval(seq.points[n], t, seq.points[m].z1, seq.points[m].z2);
                CHECK(std::abs(lhs - rhs) < 1e-12 * std::abs(rhs));
            }
    }
}

TEST_CASE("dual system") {
    // orthonormal kernels: far-separated points are nearly orthogonal; use an
    // exactly diagonal Gram instead
    GramMatrix diag;
    diag.m = Eigen::MatrixXcd::Identity(3, 3);
    CHECK(dual_system(diag).isApprox(Eigen::MatrixXcd::Identity(3, 3)));

    // two points with real off-diagonal rho: h_1 = (g_1 - rho g_2)/(1-rho^2)
    auto pair = symmetric_pair();
    auto g = gram_matrix(pair);
    double rho = 0.6;
    auto h = dual_system(g);
    CHECK(h(0, 0).real() == doctest::Approx(1.0 / (1 - rho * rho)));
    CHECK(h(0, 1).real() == doctest::Approx(-rho / (1 - rho * rho)));

    // biorthogonality and ||h_n|| >= 1 on a random sequence
    Rng rng(31);
    PointSequence seq;
    for (int i = 0; i < 6; ++i) seq.append(rng.bidisc(0.8), 1);
    auto gg = gram_matrix(seq);
    auto hh = dual_system(gg);
    for (int j = 0; j < 6; ++j)
        for (int n = 0; n < 6; ++n) {
            Complex ip = 0.0;
            for (int m = 0; m < 6; ++m) ip += std::conj(hh(n, m)) * gg.m(j, m);
            CHECK(std::abs(ip - (j == n ? 1.0 : 0.0)) < 1e-10);
        }
    for (int n = 0; n < 6; ++n) CHECK(hh(n, n).real() >= 1.0 - 1e-12);
}

TEST_CASE("orlicz signs") {
    Eigen::MatrixXcd one(1, 1);
    one << Complex(2.0);
    CHECK(orlicz_signs(one) == std::vector<int>{1});

    // equal vectors: (+,+) attains 4 >= 2
    Eigen::MatrixXcd same(2, 2);
    same << 1.0, 1.0, 1.0, 1.0;
    auto eps = orlicz_signs(same);
    double val = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) val += eps[i] * eps[j] * same(i, j).real();
    CHECK(val == doctest::Approx(4.0));

    // random PSD gram: inequality holds exhaustively for N <= 12
    Rng rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + (int)(rng.next() % 7);
        Eigen::MatrixXcd a(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a(i, j) = rng.complex_normal();
        Eigen::MatrixXcd v = a.adjoint() * a;
        auto e = orlicz_signs(v);
        Complex s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) s += (double)(e[i] * e[j]) * v(i, j);
        CHECK(s.real() >= v.diagonal().real().sum() - 1e-9);
    }
}

TEST_CASE("amar chain") {
    // single point, g = 1: chain collapses and holds
    PointSequence single;
    single.append(BidiscPoint(Complex(0.3, 0.1), Complex(0.2, -0.2)), 1);
    auto rep1 = amar_chain_check(single, [](Complex, Complex) { return Complex(1.0); }, 4.0, 4.0, 64);
    CHECK(rep1.all_hold());

    // three points, coordinate monomial
    PointSequence three;
    three.append(BidiscPoint(Complex(0.5, 0.0), Complex(0.0, 0.3)), 1);
    three.append(BidiscPoint(Complex(-0.4, 0.1), Complex(0.2, 0.0)), 1);
    three.append(BidiscPoint(Complex(0.0, -0.5), Complex(-0.3, 0.2)), 1);
    auto rep3 = amar_chain_check(three, [](Complex z1, Complex) { return z1; }, 4.0, 4.0, 64);
    CHECK(rep3.all_hold());
    CHECK(rep3.solve_residual <= 1e-9);

    // g vanishing on the sequence: left side 0
    auto rep0 = amar_chain_check(
        single,
        [&](Complex z1, Complex) { return z1 - single.points[0].z1; }, 4.0, 4.0, 64);
    CHECK(rep0.sum_g_r == doctest::Approx(0.0));
    CHECK(rep0.all_hold());

    CHECK_THROWS(amar_chain_check(single, [](Complex, Complex) { return Complex(1.0); }, 3.0, 4.0, 64));
}

TEST_CASE("projection contraction") {
    // ||P_N(w)||_2 <= ||w||_2 for w in the span: P_N is the orthogonal
    // projection, so applying it to span elements is the identity; test the
    // contraction against a generic kernel combination instead
    Rng rng(71);
    PointSequence seq;
    for (int i = 0; i < 4; ++i) seq.append(rng.bidisc(0.7), 1);
    auto g = gram_matrix(seq);
    auto ginv = dual_system(g);
    KernelCombination w(seq.points, 1.0, {Complex(0.3), Complex(-0.2, 0.4), Complex(0.1), Complex(0.5)});
    // P_N w = sum w(l_n) ||S_n||^{-1} h_n
    Eigen::VectorXcd beta(4);
    for (int i = 0; i < 4; ++i)
        beta(i) = w.eval(seq.points[i].z1, seq.points[i].z2) /
                  std::sqrt(szego_norm_sq(seq.points[i]));
    double proj_sq = (beta.transpose() * ginv * beta.conjugate())(0).real();
    double full_sq = w.norm2_sq();
    CHECK(proj_sq <= full_sq + 1e-10);
}
