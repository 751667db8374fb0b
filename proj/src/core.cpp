#include "mohaea/core.hpp"

#include <cmath>
#include <stdexcept>

namespace mohaea {

bool ProblemSpec::in_bounds(const DecisionVector& x) const
{
    if (static_cast<int>(x.size()) != n)
        return false;
    for (int i = 0; i < n; ++i)
        if (x[i] < lower[i] || x[i] > upper[i])
            return false;
    return true;
}

bool evaluate(Individual& ind, const ProblemSpec& p, EvalBudget& budget)
{
    if (budget.used >= budget.max)
        return false;
    if (!p.in_bounds(ind.x))
        throw std::invalid_argument("decision vector out of bounds for " + p.id);
    ind.objectives = p.evaluator(ind.x);
    if (static_cast<int>(ind.objectives.size()) != p.m)
        throw std::logic_error("evaluator returned wrong objective count for " + p.id);
    for (double f : ind.objectives)
        if (!std::isfinite(f))
            throw std::domain_error("non-finite objective value from " + p.id);
    ind.evaluated = true;
    ++budget.used;
    return true;
}

bool dominates(const ObjectiveVector& a, const ObjectiveVector& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("objective vectors of different lengths");
    bool strict = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i])
            return false;
        if (a[i] < b[i])
            strict = true;
    }
    return strict;
}

int pareto_compare(const ObjectiveVector& a, const ObjectiveVector& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("objective vectors of different lengths");
    bool a_better = false;
    bool b_better = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i])
            a_better = true;
        else if (b[i] < a[i])
            b_better = true;
        if (a_better && b_better)
            return 0;
    }
    if (a_better)
        return -1;
    if (b_better)
        return 1;
    return 0; // identical vectors
}

void update_dominance_counts(Population& pop)
{
    const std::size_t n = pop.size();
    if (n == 0)
        return;
    const std::size_t m = pop.front().objectives.size();

    // flatten into one contiguous buffer; the O(m n^2) pass is the hottest
    // loop in a run and pointer-chasing per individual dominates it otherwise
    std::vector<double> flat(n * m);
    for (std::size_t i = 0; i < n; ++i) {
        if (pop[i].objectives.size() != m)
            throw std::invalid_argument("population with mixed objective dimensions");
        std::copy(pop[i].objectives.begin(), pop[i].objectives.end(), flat.begin() + i * m);
    }

    std::vector<int> counts(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const double* a = flat.data() + i * m;
        for (std::size_t j = i + 1; j < n; ++j) {
            const double* b = flat.data() + j * m;
            bool a_better = false;
            bool b_better = false;
            for (std::size_t k = 0; k < m; ++k) {
                if (a[k] < b[k])
                    a_better = true;
                else if (b[k] < a[k])
                    b_better = true;
            }
            if (a_better && !b_better)
                ++counts[j];
            else if (b_better && !a_better)
                ++counts[i];
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        pop[i].dominance_count = counts[i];
}

std::vector<Individual> extract_nondominated(const Population& pop)
{
    std::vector<int> counts(pop.size(), 0);
    for (std::size_t i = 0; i < pop.size(); ++i) {
        for (std::size_t j = i + 1; j < pop.size(); ++j) {
            int cmp = pareto_compare(pop[i].objectives, pop[j].objectives);
            if (cmp < 0)
                ++counts[j];
            else if (cmp > 0)
                ++counts[i];
        }
    }
    std::vector<Individual> result;
    for (std::size_t i = 0; i < pop.size(); ++i)
        if (counts[i] == 0)
            result.push_back(pop[i]);
    return result;
}

std::vector<ObjectiveVector> nondominated_filter(const std::vector<ObjectiveVector>& points)
{
    std::vector<ObjectiveVector> result;
    for (std::size_t i = 0; i < points.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < points.size() && !dominated; ++j)
            dominated = j != i && dominates(points[j], points[i]);
        if (!dominated)
            result.push_back(points[i]);
    }
    return result;
}

} // namespace mohaea
