#pragma once

#include <cstdint>
#include <random>

namespace hapsris {

using RandomStream = std::mt19937_64;

/// SplitMix64 finalizer; used to decorrelate derived seeds.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Independent stream for (master_seed, index). Streams depend only on the
/// pair, never on evaluation order, so drops can run in any order or thread.
inline RandomStream substream(std::uint64_t master_seed, std::uint64_t index) {
    const std::uint64_t a = mix64(master_seed);
    const std::uint64_t b = mix64(a ^ mix64(index + 1));
    std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                      static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
    return RandomStream(seq);
}

}  // namespace hapsris
