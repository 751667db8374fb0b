#include "mohaea/metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace mohaea {

IgdResult igd(const ParetoFrontSample& p_star, const std::vector<ObjectiveVector>& p)
{
    if (p.empty())
        throw std::invalid_argument("igd of an empty approximation set is undefined");
    if (p_star.points.empty())
        throw std::invalid_argument("igd needs a nonempty reference set");
    const std::size_t m = p_star.points.front().size();
    for (const auto& u : p)
        if (u.size() != m)
            throw std::invalid_argument("igd: objective dimension mismatch");

    double total = 0.0;
    for (const auto& ref : p_star.points) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& u : p) {
            double d2 = 0.0;
            for (std::size_t i = 0; i < m; ++i) {
                double diff = ref[i] - u[i];
                d2 += diff * diff;
            }
            if (d2 < best)
                best = d2;
        }
        total += std::sqrt(best);
    }
    IgdResult result;
    result.value = total / static_cast<double>(p_star.points.size());
    result.reference_size = static_cast<int>(p_star.points.size());
    result.approximation_size = static_cast<int>(p.size());
    return result;
}

IgdResult igd_of_population(const Population& pop, const ParetoFrontSample& p_star,
                            bool nondominated_only)
{
    for (const auto& ind : pop)
        if (!ind.evaluated)
            throw std::invalid_argument("igd over an unevaluated population");
    std::vector<ObjectiveVector> objs;
    objs.reserve(pop.size());
    if (nondominated_only) {
        for (const auto& ind : extract_nondominated(pop))
            objs.push_back(ind.objectives);
    } else {
        for (const auto& ind : pop)
            objs.push_back(ind.objectives);
    }
    return igd(p_star, objs);
}

int default_reference_size(ProblemId id)
{
    return objective_count(id) == 2 ? 1000 : 300;
}

} // namespace mohaea
