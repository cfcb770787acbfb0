#pragma once

#include <cstdint>
#include <vector>

namespace slodowy {

/// splitmix64 stream. Self-contained so that seeded runs are byte-identical
/// across platforms (std::uniform_int_distribution is not portable).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n), n >= 1.
    std::uint64_t below(std::uint64_t n) {
        // rejection to kill modulo bias
        std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % n);
        std::uint64_t x = next();
        while (x >= limit) x = next();
        return x % n;
    }

    /// Uniform integer in [lo, hi] inclusive.
    long long int_in(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (next() & 1u) != 0; }

    /// Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& xs) {
        for (std::size_t i = xs.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(xs[i - 1], xs[j]);
        }
    }

private:
    std::uint64_t state_;
};

} // namespace slodowy
