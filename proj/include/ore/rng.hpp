#pragma once

#include <cstdint>
#include <string_view>

namespace ore {

// Deterministic generator (splitmix64). The standard library engines are
// portable but their distributions are not; reports must be byte-identical
// across platforms given the same seed, so everything random goes through
// this.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform-ish value in [0, n); modulo bias is irrelevant at test scale.
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

    long range(long lo, long hi) {  // inclusive bounds, lo <= hi
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (next() & 1u) != 0; }

    // Independent stream per named check, derived from one master seed.
    static Rng stream(std::uint64_t master, std::string_view label) {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (char c : label) {
            h ^= static_cast<unsigned char>(c);
            h *= 0x100000001b3ull;
        }
        return Rng(master ^ h);
    }

private:
    std::uint64_t state_;
};

}  // namespace ore
