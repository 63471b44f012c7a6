#pragma once

#include <map>
#include <utility>

#include "polylab/point.hpp"

namespace polylab {

// Finite doubly-indexed trigonometric sum
//   u = sum a_{nm} r1^{|n|} r2^{|m|} e^{i(n th1 + m th2)},
// the coefficient model for separately harmonic functions on the bidisc.
class LaurentPolynomial2D {
public:
    using Index = std::pair<int, int>;

    LaurentPolynomial2D() = default;

    void set(int n, int m, Complex a);
    Complex coeff(int n, int m) const;
    const std::map<Index, Complex>& coeffs() const { return c_; }

    Complex eval(Complex z1, Complex z2) const;

    LaurentPolynomial2D operator+(const LaurentPolynomial2D& o) const;
    LaurentPolynomial2D operator-(const LaurentPolynomial2D& o) const;

    // u o sigma: index map (n,m) -> (-n,m)
    LaurentPolynomial2D compose_sigma() const;
    // conj(u): a'_{n,m} = conj(a_{-n,-m})
    LaurentPolynomial2D conjugated() const;

    double max_abs_coeff() const;
    void prune(double eps = 0.0);

private:
    std::map<Index, Complex> c_;
};

// Riesz-type projection onto the holomorphic part: keeps the open first
// quadrant with weight 1, the positive axes with weight 1/2, the origin with
// weight 1/4, and kills everything else.
LaurentPolynomial2D riesz_project(const LaurentPolynomial2D& u);

// max-abs coefficient of u - [Pu + conj(P conj u) + (P(u o sigma)) o sigma
//                              + conj((P(conj u o sigma)) o sigma)]
double harmonic_decomposition_residual(const LaurentPolynomial2D& u);

}  // namespace polylab
