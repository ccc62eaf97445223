#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace bhfs {

using Rng = std::mt19937_64;

/// Uniform draw from [0, bound).
inline std::size_t uniform_index(Rng& rng, std::size_t bound)
{
    return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
}

}  // namespace bhfs
