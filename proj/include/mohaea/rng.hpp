#ifndef MOHAEA_RNG_HPP
#define MOHAEA_RNG_HPP

#include <cstdint>
#include <random>

namespace mohaea {

using Rng = std::mt19937_64;

inline double uniform01(Rng& rng)
{
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

inline double uniform(Rng& rng, double lo, double hi)
{
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// uniform integer in [0, n-1]
inline std::size_t uniform_index(Rng& rng, std::size_t n)
{
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

} // namespace mohaea

#endif
