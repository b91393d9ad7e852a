#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

namespace polydiff {

// splitmix64; used to key all derived random streams
inline uint64_t mix64(uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Counter-based RNG: every draw is a pure function of (seed, stream, counter).
class CounterRng {
public:
    CounterRng(uint64_t seed, uint64_t stream) : key_(mix64(seed ^ mix64(stream))) {}

    double uniform(uint64_t counter) const
    {
        uint64_t h = mix64(key_ ^ mix64(counter));
        return (double(h >> 11) + 0.5) * 0x1.0p-53;
    }

    // standard normal via Box-Muller; two independent draws per counter pair
    double normal(uint64_t counter) const
    {
        double u1 = uniform(2 * counter);
        double u2 = uniform(2 * counter + 1);
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

private:
    uint64_t key_;
};

namespace detail {
inline const std::vector<int>& primes()
{
    static const std::vector<int> p = {2,  3,  5,  7,  11, 13, 17, 19,
                                       23, 29, 31, 37, 41, 43, 47, 53};
    return p;
}
}  // namespace detail

// Seed-scrambled Halton sequence in [0,1)^d (digit permutations keyed per base).
class ScrambledHalton {
public:
    ScrambledHalton(int dim, uint64_t seed) : dim_(dim), seed_(seed)
    {
        perms_.resize(dim_);
        for (int i = 0; i < dim_; ++i) {
            int b = detail::primes()[i % detail::primes().size()];
            std::vector<int> perm(b);
            std::iota(perm.begin(), perm.end(), 0);
            // Fisher-Yates keyed by (seed, base); keep 0 fixed so 0 maps to 0
            for (int j = b - 1; j >= 2; --j) {
                uint64_t h = mix64(seed_ ^ mix64(uint64_t(i) << 32 | uint64_t(j)));
                int k = 1 + int(h % uint64_t(j));
                std::swap(perm[j], perm[k]);
            }
            perms_[i] = std::move(perm);
        }
    }

    std::vector<double> point(uint64_t index) const
    {
        std::vector<double> x(dim_);
        for (int i = 0; i < dim_; ++i) {
            int b = detail::primes()[i % detail::primes().size()];
            const auto& perm = perms_[i];
            double f = 1.0, r = 0.0;
            uint64_t n = index + 1;  // skip the all-zero point
            while (n > 0) {
                f /= b;
                r += f * perm[n % b];
                n /= b;
            }
            x[i] = r;
        }
        return x;
    }

private:
    int dim_;
    uint64_t seed_;
    std::vector<std::vector<int>> perms_;
};

}  // namespace polydiff
