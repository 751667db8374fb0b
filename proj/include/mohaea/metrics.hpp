#ifndef MOHAEA_METRICS_HPP
#define MOHAEA_METRICS_HPP

#include "mohaea/core.hpp"
#include "mohaea/problems.hpp"

namespace mohaea {

struct IgdResult {
    double value = 0.0;
    int reference_size = 0;
    int approximation_size = 0;
};

// Inverted generational distance: mean over the reference set of the
// Euclidean distance to the nearest point of p. Throws when p is empty or
// the objective dimensions differ.
IgdResult igd(const ParetoFrontSample& p_star, const std::vector<ObjectiveVector>& p);

// IGD of the population's objective vectors. The experiment protocol scores
// the full population (dominated members included); pass nondominated_only
// for the filtered variant.
IgdResult igd_of_population(const Population& pop, const ParetoFrontSample& p_star,
                            bool nondominated_only = false);

// Reference-set size used by the experiment protocol: 1000 points for
// bi-objective fronts, 300 (the H=23 lattice, matching the experiment's
// population lattice) for tri-objective ones.
int default_reference_size(ProblemId id);

} // namespace mohaea

#endif
