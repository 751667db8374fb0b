#ifndef MOHAEA_REFPOINTS_HPP
#define MOHAEA_REFPOINTS_HPP

#include <stdexcept>
#include <vector>

#include "mohaea/rng.hpp"

namespace mohaea {

struct Individual;

// A simplex direction: m nonnegative weights summing to 1. Lattice-generated
// directions have every component a multiple of 1/H.
struct ReferenceDirection {
    std::vector<double> weights;
};

struct ReferenceLattice {
    std::vector<ReferenceDirection> directions;
    int m = 0;
    int h = 0;
};

// Thrown when a requested population size has no exact simplex lattice.
struct LatticeSizeError : std::runtime_error {
    using std::runtime_error::runtime_error;
    int nearest_below = 0; // achievable size just below the request
    int nearest_above = 0; // achievable size just above the request
};

// Number of lattice directions: C(h+m-1, m-1).
long long lattice_size(int m, int h);

// All compositions of h into m nonnegative parts, scaled by 1/h, in
// lexicographic order.
ReferenceLattice das_dennis(int m, int h);

// Inverts the lattice-size formula; throws LatticeSizeError (listing the two
// nearest achievable sizes) when no exact h exists.
int divisions_for_population(int m, int population_size);

// Random one-to-one assignment of lattice directions onto the population.
void assign_initial_directions(std::vector<Individual>& pop, const ReferenceLattice& lattice, Rng& rng);

} // namespace mohaea

#endif
