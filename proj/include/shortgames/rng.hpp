// SplitMix64 pseudo-random generator (Steele, Lea & Flood; the same stream
// as java.util.SplittableRandom's mixer). This is the one generator used
// everywhere seeds appear, so published seeds reproduce bit-identically.

#pragma once

#include <cstdint>

namespace shortgames {

class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

    constexpr std::uint64_t next() {
        state_ += kGamma;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform draw in [0, bound) by modulo. The slight bias is irrelevant here;
    // what matters is that the draw sequence is fixed.
    constexpr std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }

    // Advance as if next() had been called n times. The state moves by a fixed
    // increment per draw, so jumping is exact; sharded runs use this to give
    // each slice the same draws it would see in a serial run.
    constexpr void skip(std::uint64_t n) { state_ += kGamma * n; }

    // Derive an independent child stream.
    constexpr SplitMix64 split() { return SplitMix64(next()); }

    // Finalizer alone; handy as a cheap integer mixer for hashing.
    static constexpr std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

private:
    static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ull;
    std::uint64_t state_;
};

}  // namespace shortgames
