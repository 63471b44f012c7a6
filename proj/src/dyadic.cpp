#include "polylab/dyadic.hpp"

#include <cmath>
#include <limits>

namespace polylab {

namespace {

constexpr long long kMaxNum = std::numeric_limits<long long>::max();

int bit_length(long long v) {
    unsigned long long a = v < 0 ? (unsigned long long)(-(__int128)v) : (unsigned long long)v;
    int b = 0;
    while (a) {
        a >>= 1;
        ++b;
    }
    return b;
}

// num << shift as __int128, throwing instead of overflowing.
__int128 shifted(long long num, int shift) {
    if (bit_length(num) + shift > 120) throw std::overflow_error("dyadic: shift overflow");
    return (__int128)num << shift;
}

}  // namespace

Dyadic Dyadic::make(__int128 num, int exp) {
    if (exp < 0) throw std::invalid_argument("dyadic: negative exponent");
    if (num == 0) exp = 0;
    while (exp > 0 && (num & 1) == 0) {
        num >>= 1;
        --exp;
    }
    if (num > (__int128)kMaxNum || num < -(__int128)kMaxNum)
        throw std::overflow_error("dyadic: numerator exceeds 64 bits");
    Dyadic d;
    d.num_ = (long long)num;
    d.exp_ = exp;
    return d;
}

Dyadic Dyadic::frac(long long num, int exp) { return make(num, exp); }

double Dyadic::to_double() const { return std::ldexp((double)num_, -exp_); }

Dyadic Dyadic::operator-() const { return make(-(__int128)num_, exp_); }

Dyadic Dyadic::operator+(const Dyadic& o) const {
    int e = std::max(exp_, o.exp_);
    __int128 a = shifted(num_, e - exp_);
    __int128 b = shifted(o.num_, e - o.exp_);
    return make(a + b, e);
}

Dyadic Dyadic::operator-(const Dyadic& o) const { return *this + (-o); }

Dyadic Dyadic::operator*(const Dyadic& o) const {
    return make((__int128)num_ * (__int128)o.num_, exp_ + o.exp_);
}

Dyadic Dyadic::halved(int k) const {
    if (k < 0) throw std::invalid_argument("dyadic: halved needs k >= 0");
    return make(num_, exp_ + k);
}

Dyadic Dyadic::doubled(int k) const {
    if (k < 0) throw std::invalid_argument("dyadic: doubled needs k >= 0");
    if (k > 62) throw std::overflow_error("dyadic: doubling too far");
    return make((__int128)num_ << k, exp_);
}

int Dyadic::cmp(const Dyadic& o) const {
    if (sign() != o.sign()) return sign() < o.sign() ? -1 : 1;
    int e = std::max(exp_, o.exp_);
    if (bit_length(num_) + (e - exp_) > 120 || bit_length(o.num_) + (e - o.exp_) > 120) {
        // Same sign, magnitudes many binades apart: order by exact binary magnitude.
        int m1 = bit_length(num_) - exp_;
        int m2 = bit_length(o.num_) - o.exp_;
        if (m1 != m2) return ((m1 < m2) != (sign() < 0)) ? -1 : 1;
        throw std::overflow_error("dyadic: compare overflow");
    }
    __int128 a = (__int128)num_ << (e - exp_);
    __int128 b = (__int128)o.num_ << (e - o.exp_);
    return a < b ? -1 : (a > b ? 1 : 0);
}

Dyadic Dyadic::mod1() const {
    __int128 one = (__int128)1 << exp_;
    __int128 r = (__int128)num_ % one;
    if (r < 0) r += one;
    return make(r, exp_);
}

long long Dyadic::floor() const {
    long long q = num_ >> exp_;  // arithmetic shift floors for negatives
    return q;
}

std::string Dyadic::str() const {
    if (exp_ == 0) return std::to_string(num_);
    return std::to_string(num_) + "/2^" + std::to_string(exp_);
}

}  // namespace polylab
