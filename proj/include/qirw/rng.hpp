#pragma once

#include <cstdint>
#include <string_view>

namespace qirw {

// SplitMix64 stream. Sub-draws are split off by tag+counter so that adding a
// draw in one place never shifts the values seen elsewhere; regeneration from
// the same seed is bit-identical by construction.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n). Unbiased rejection sampling.
    std::uint64_t next_below(std::uint64_t n) {
        if (n <= 1) return 0;
        std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % n;
    }

    int next_int(int lo, int hi) { // inclusive range
        return lo + static_cast<int>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // Bernoulli with probability num/den.
    bool next_coin(std::uint64_t num, std::uint64_t den) { return next_below(den) < num; }

    Rng split(std::string_view tag, std::uint64_t counter = 0) const {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (char c : tag) {
            h ^= static_cast<unsigned char>(c);
            h *= 0x100000001b3ULL;
        }
        return Rng(state_ ^ h ^ (counter * 0xd1342543de82ef95ULL));
    }

private:
    std::uint64_t state_;
};

} // namespace qirw
