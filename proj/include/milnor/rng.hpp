#pragma once

// Deterministic randomness.  Every randomized routine takes an explicit seed;
// derived streams are produced by mixing the seed with a label so results do
// not depend on evaluation order or thread scheduling.

#include <cstdint>
#include <random>
#include <string>

namespace milnor {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, const std::string& label) {
    std::uint64_t h = seed;
    for (unsigned char c : label) h = splitmix64(h ^ c);
    return splitmix64(h);
}

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    long int_in(long lo, long hi) {  // inclusive bounds
        return std::uniform_int_distribution<long>(lo, hi)(gen_);
    }

    long nonzero_in(long lo, long hi) {
        for (;;) {
            long v = int_in(lo, hi);
            if (v != 0) return v;
        }
    }

  private:
    std::mt19937_64 gen_;
};

}  // namespace milnor
