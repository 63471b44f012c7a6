#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace polylab {

// Exact binary rational num / 2^exp. Canonical form: num odd, or exp == 0.
// All arithmetic is exact; overflow past 64 bits throws.
class Dyadic {
public:
    constexpr Dyadic() = default;
    constexpr Dyadic(long long integer) : num_(integer), exp_(0) {}

    // num / 2^exp, canonicalized.
    static Dyadic frac(long long num, int exp);
    // 2^{-k}, k >= 0.
    static Dyadic pow2(int k) { return frac(1, k); }

    long long num() const { return num_; }
    int exp() const { return exp_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return exp_ == 0; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    double to_double() const;

    Dyadic operator-() const;
    Dyadic operator+(const Dyadic& o) const;
    Dyadic operator-(const Dyadic& o) const;
    Dyadic operator*(const Dyadic& o) const;
    Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }
    Dyadic& operator-=(const Dyadic& o) { return *this = *this - o; }
    Dyadic& operator*=(const Dyadic& o) { return *this = *this * o; }

    // Exact division by 2^k (k >= 0).
    Dyadic halved(int k = 1) const;
    // Exact multiplication by 2^k (k >= 0).
    Dyadic doubled(int k = 1) const;

    bool operator==(const Dyadic& o) const { return num_ == o.num_ && exp_ == o.exp_; }
    bool operator!=(const Dyadic& o) const { return !(*this == o); }
    bool operator<(const Dyadic& o) const { return cmp(o) < 0; }
    bool operator<=(const Dyadic& o) const { return cmp(o) <= 0; }
    bool operator>(const Dyadic& o) const { return cmp(o) > 0; }
    bool operator>=(const Dyadic& o) const { return cmp(o) >= 0; }

    // value mod 1, result in [0,1).
    Dyadic mod1() const;
    // floor of the value as an integer.
    long long floor() const;

    // true iff this is an integer multiple of 2^{-k}.
    bool is_multiple_of_pow2(int k) const { return exp_ <= k; }

    std::string str() const;

private:
    int cmp(const Dyadic& o) const;
    static Dyadic make(__int128 num, int exp);

    long long num_ = 0;
    int exp_ = 0;
};

inline Dyadic operator*(long long a, const Dyadic& d) { return Dyadic(a) * d; }

}  // namespace polylab
