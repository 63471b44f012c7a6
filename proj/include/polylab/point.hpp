#pragma once

#include <complex>
#include <optional>
#include <stdexcept>

#include "polylab/dyadic.hpp"

namespace polylab {

using Complex = std::complex<double>;

// Exact polar data r*e^{2*pi*i*theta} for points produced from dyadic geometry:
// r^2 and theta are dyadic rationals, so box membership tests stay exact.
struct PolarExact {
    Dyadic r_sq;   // |z|^2
    Dyadic theta;  // angle in turns, in [0,1)
};

// A point of the open bidisc.
struct BidiscPoint {
    Complex z1;
    Complex z2;
    std::optional<PolarExact> exact1;
    std::optional<PolarExact> exact2;

    BidiscPoint() = default;
    BidiscPoint(Complex a, Complex b) : z1(a), z2(b) {
        if (std::abs(a) >= 1.0 || std::abs(b) >= 1.0)
            throw std::invalid_argument("bidisc point needs |z_i| < 1");
    }

    Complex coord(int i) const { return i == 0 ? z1 : z2; }
    const std::optional<PolarExact>& exact(int i) const { return i == 0 ? exact1 : exact2; }

    bool has_exact() const { return exact1 && exact2; }
};

}  // namespace polylab
