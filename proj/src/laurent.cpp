#include "polylab/laurent.hpp"

#include <cmath>

namespace polylab {

void LaurentPolynomial2D::set(int n, int m, Complex a) {
    if (a == Complex(0.0))
        c_.erase({n, m});
    else
        c_[{n, m}] = a;
}

Complex LaurentPolynomial2D::coeff(int n, int m) const {
    auto it = c_.find({n, m});
    return it == c_.end() ? Complex(0.0) : it->second;
}

namespace {
Complex signed_power(Complex z, int n) {
    // r^{|n|} e^{i n theta}
    if (n >= 0) return std::pow(z, n);
    return std::pow(std::conj(z), -n);
}
}  // namespace

Complex LaurentPolynomial2D::eval(Complex z1, Complex z2) const {
    Complex s = 0.0;
    for (const auto& [nm, a] : c_) s += a * signed_power(z1, nm.first) * signed_power(z2, nm.second);
    return s;
}

LaurentPolynomial2D LaurentPolynomial2D::operator+(const LaurentPolynomial2D& o) const {
    LaurentPolynomial2D r = *this;
    for (const auto& [nm, a] : o.c_) r.set(nm.first, nm.second, r.coeff(nm.first, nm.second) + a);
    return r;
}

LaurentPolynomial2D LaurentPolynomial2D::operator-(const LaurentPolynomial2D& o) const {
    LaurentPolynomial2D r = *this;
    for (const auto& [nm, a] : o.c_) r.set(nm.first, nm.second, r.coeff(nm.first, nm.second) - a);
    return r;
}

LaurentPolynomial2D LaurentPolynomial2D::compose_sigma() const {
    LaurentPolynomial2D r;
    for (const auto& [nm, a] : c_) r.set(-nm.first, nm.second, a);
    return r;
}

LaurentPolynomial2D LaurentPolynomial2D::conjugated() const {
    LaurentPolynomial2D r;
    for (const auto& [nm, a] : c_) r.set(-nm.first, -nm.second, std::conj(a));
    return r;
}

double LaurentPolynomial2D::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& [nm, a] : c_) m = std::max(m, std::abs(a));
    return m;
}

void LaurentPolynomial2D::prune(double eps) {
    for (auto it = c_.begin(); it != c_.end();) {
        if (std::abs(it->second) <= eps)
            it = c_.erase(it);
        else
            ++it;
    }
}

LaurentPolynomial2D riesz_project(const LaurentPolynomial2D& u) {
    LaurentPolynomial2D r;
    for (const auto& [nm, a] : u.coeffs()) {
        auto [n, m] = nm;
        if (n > 0 && m > 0)
            r.set(n, m, a);
        else if ((n > 0 && m == 0) || (n == 0 && m > 0))
            r.set(n, m, 0.5 * a);
        else if (n == 0 && m == 0)
            r.set(0, 0, 0.25 * a);
    }
    return r;
}

double harmonic_decomposition_residual(const LaurentPolynomial2D& u) {
    LaurentPolynomial2D t1 = riesz_project(u);
    LaurentPolynomial2D t2 = riesz_project(u.conjugated()).conjugated();
    LaurentPolynomial2D t3 = riesz_project(u.compose_sigma()).compose_sigma();
    LaurentPolynomial2D t4 = riesz_project(u.conjugated().compose_sigma()).compose_sigma().conjugated();
    LaurentPolynomial2D res = u - t1 - t2 - t3 - t4;
    return res.max_abs_coeff();
}

}  // namespace polylab
