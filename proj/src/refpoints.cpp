#include "mohaea/refpoints.hpp"

#include <algorithm>
#include <numeric>

#include "mohaea/core.hpp"

namespace mohaea {

long long lattice_size(int m, int h)
{
    if (m < 2 || h < 1)
        throw std::invalid_argument("lattice needs m >= 2 and h >= 1");
    // C(h+m-1, m-1)
    long long result = 1;
    for (int i = 1; i <= m - 1; ++i)
        result = result * (h + i) / i;
    return result;
}

namespace {

void compositions(int m, int h, int remaining, std::vector<int>& parts,
                  std::vector<ReferenceDirection>& out)
{
    if (static_cast<int>(parts.size()) == m - 1) {
        ReferenceDirection dir;
        dir.weights.reserve(m);
        for (int part : parts)
            dir.weights.push_back(static_cast<double>(part) / h);
        dir.weights.push_back(static_cast<double>(remaining) / h);
        out.push_back(std::move(dir));
        return;
    }
    for (int part = 0; part <= remaining; ++part) {
        parts.push_back(part);
        compositions(m, h, remaining - part, parts, out);
        parts.pop_back();
    }
}

} // namespace

ReferenceLattice das_dennis(int m, int h)
{
    ReferenceLattice lattice;
    lattice.m = m;
    lattice.h = h;
    lattice.directions.reserve(static_cast<std::size_t>(lattice_size(m, h)));
    std::vector<int> parts;
    compositions(m, h, h, parts, lattice.directions);
    return lattice;
}

int divisions_for_population(int m, int population_size)
{
    if (population_size < 1)
        throw std::invalid_argument("population size must be positive");
    int h = 1;
    while (lattice_size(m, h) < population_size)
        ++h;
    if (lattice_size(m, h) == population_size)
        return h;
    const long long below = h > 1 ? lattice_size(m, h - 1) : 0;
    const long long above = lattice_size(m, h);
    LatticeSizeError err("no exact reference lattice of size " + std::to_string(population_size) +
                         " for m=" + std::to_string(m) + "; nearest achievable sizes are " +
                         std::to_string(below) + " (h=" + std::to_string(h - 1) + ") and " +
                         std::to_string(above) + " (h=" + std::to_string(h) + ")");
    err.nearest_below = static_cast<int>(below);
    err.nearest_above = static_cast<int>(above);
    throw err;
}

void assign_initial_directions(std::vector<Individual>& pop, const ReferenceLattice& lattice, Rng& rng)
{
    if (pop.size() != lattice.directions.size())
        throw std::invalid_argument("population size " + std::to_string(pop.size()) +
                                    " does not match lattice size " +
                                    std::to_string(lattice.directions.size()));
    std::vector<std::size_t> order(pop.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t i = 0; i < pop.size(); ++i)
        pop[i].ref_dir = lattice.directions[order[i]];
}

} // namespace mohaea
