// SPDX-License-Identifier: Apache-2.0
// Counter-based seed splitting. Every Monte Carlo stream is seeded from
// (master, point, trial, stream) so results do not depend on scheduling.
#pragma once

#include <cstdint>
#include <random>

namespace ewris {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// seed = sm(sm(sm(sm(master) ^ point) ^ trial) ^ stream)
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t point, std::uint64_t trial,
                                 std::uint64_t stream)
{
    std::uint64_t s = splitmix64(master);
    s = splitmix64(s ^ point);
    s = splitmix64(s ^ trial);
    return splitmix64(s ^ stream);
}

inline Rng make_rng(std::uint64_t master, std::uint64_t point, std::uint64_t trial, std::uint64_t stream)
{
    return Rng(derive_seed(master, point, trial, stream));
}

} // namespace ewris
