#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "polylab/point.hpp"

namespace polylab {

// Deterministic generator used for every sampled quantity; the raw engine is
// splitmix64 so that streams are reproducible independent of the standard
// library implementation.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    double uniform() { return (next() >> 11) * 0x1.0p-53; }  // [0,1)

    double normal() {
        double u1 = uniform(), u2 = uniform();
        if (u1 < 1e-300) u1 = 1e-300;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    Complex complex_normal() { return Complex(normal(), normal()); }

    // uniform point of the disc of radius rmax
    Complex disc(double rmax = 0.95) {
        double r = rmax * std::sqrt(uniform());
        double th = 2.0 * std::numbers::pi * uniform();
        return Complex(r * std::cos(th), r * std::sin(th));
    }

    BidiscPoint bidisc(double rmax = 0.95) { return BidiscPoint(disc(rmax), disc(rmax)); }

    // l^p-normalized complex vector
    std::vector<Complex> unit_vector(size_t n, double p) {
        std::vector<Complex> v(n);
        double s = 0.0;
        for (auto& c : v) {
            c = complex_normal();
            s += std::pow(std::abs(c), p);
        }
        double scale = std::pow(s, -1.0 / p);
        for (auto& c : v) c *= scale;
        return v;
    }

private:
    std::uint64_t state_;
};

}  // namespace polylab
