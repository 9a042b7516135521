#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace cwg {

/// Exact rational arithmetic for all density-style measures. Floats are
/// never used for these values; comparisons must be exact.
using Rat = boost::rational<long long>;

inline long long rat_ceil(const Rat& r) {
    long long q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() > 0) ++q;
    return q;
}

inline double rat_double(const Rat& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

inline std::string rat_str(const Rat& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UsageError : Error { using Error::Error; };
struct SizeLimitError : Error { using Error::Error; };
struct BudgetExceededError : Error { using Error::Error; };
struct PreconditionError : Error { using Error::Error; };
struct MatchingFailedError : Error { using Error::Error; };
struct IllegalOfferError : Error { using Error::Error; };
struct IllegalPickError : Error { using Error::Error; };
struct StrategyFailureError : Error { using Error::Error; };
struct InternalError : Error { using Error::Error; };

/// Seedable deterministic generator. mt19937_64 has a fully specified output
/// sequence; the distributions below are hand-rolled so results are identical
/// across platforms and standard library implementations.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(mix(seed)) {}

    uint64_t next() { return eng_(); }

    /// Uniform in [0,1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n), n >= 1. Rejection sampling, no modulo bias.
    int uniform_int(int n) {
        uint64_t bound = static_cast<uint64_t>(n);
        uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        uint64_t x;
        do { x = next(); } while (x >= limit);
        return static_cast<int>(x % bound);
    }

    bool bernoulli(double p) { return uniform01() < p; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (int i = static_cast<int>(v.size()) - 1; i > 0; --i)
            std::swap(v[i], v[uniform_int(i + 1)]);
    }

    template <typename T>
    const T& choice(const std::vector<T>& v) { return v[uniform_int(static_cast<int>(v.size()))]; }

    /// Derives an independent stream seed, used to fan a config seed out to
    /// per-task generators.
    static uint64_t derive(uint64_t seed, uint64_t stream) {
        return mix(mix(seed) ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
    }

private:
    // SplitMix64 finalizer; avoids correlated mt19937_64 states for close seeds.
    static uint64_t mix(uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::mt19937_64 eng_;
};

inline long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace cwg
