#pragma once

#include <array>
#include <cstdint>

namespace wishart {

/// Counter-based block cipher used as the simulation RNG: ten rounds of
/// 32x32->64 multiplies over a 128-bit counter with a 64-bit key on a Weyl
/// schedule. Every 4-word block is a pure function of (key, counter), so any
/// sample index can be generated independently of all others — which is what
/// makes the estimator deterministic under any thread partitioning.
struct Philox4x32 {
    static constexpr std::uint32_t kMulHi = 0xD2511F53u;
    static constexpr std::uint32_t kMulLo = 0xCD9E8D57u;
    static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
    static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

    static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> ctr,
                                              std::array<std::uint32_t, 2> key) {
        for (int round = 0; round < 10; ++round) {
            const std::uint64_t prod0 = std::uint64_t(kMulHi) * ctr[0];
            const std::uint64_t prod1 = std::uint64_t(kMulLo) * ctr[2];
            ctr = {static_cast<std::uint32_t>(prod1 >> 32) ^ ctr[1] ^ key[0],
                   static_cast<std::uint32_t>(prod1),
                   static_cast<std::uint32_t>(prod0 >> 32) ^ ctr[3] ^ key[1],
                   static_cast<std::uint32_t>(prod0)};
            key[0] += kWeyl0;
            key[1] += kWeyl1;
        }
        return ctr;
    }

    /// Block for (seed, sample index, block-within-sample).
    static std::array<std::uint32_t, 4> sample_block(std::uint64_t seed, std::uint64_t index,
                                                     std::uint32_t block) {
        return Philox4x32::block(
            {static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32), block,
             0u},
            {static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)});
    }
};

}  // namespace wishart
