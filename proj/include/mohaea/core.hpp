#ifndef MOHAEA_CORE_HPP
#define MOHAEA_CORE_HPP

#include <functional>
#include <string>
#include <vector>

#include "mohaea/operators.hpp"
#include "mohaea/refpoints.hpp"

namespace mohaea {

using DecisionVector = std::vector<double>;
using ObjectiveVector = std::vector<double>;

// A box-bounded minimization problem with m objectives over n real variables.
// The evaluator must be deterministic and return finite values in bounds.
struct ProblemSpec {
    std::string id;
    int n = 0;
    int m = 0;
    std::vector<double> lower;
    std::vector<double> upper;
    std::function<ObjectiveVector(const DecisionVector&)> evaluator;

    bool in_bounds(const DecisionVector& x) const;
};

// Function-evaluation budget. `used` never decreases and never exceeds `max`.
struct EvalBudget {
    long used = 0;
    long max = 0;

    bool exhausted() const { return used >= max; }
    long remaining() const { return max - used; }
};

struct Individual {
    DecisionVector x;
    ObjectiveVector objectives; // cached by evaluate()
    OperatorRates rates;
    ReferenceDirection ref_dir;
    double fitness = 0.0;     // scalar fitness from the last pairwise scoring, lower is better
    int dominance_count = 0;  // population members dominating this one
    bool evaluated = false;
};

using Population = std::vector<Individual>;

// Evaluates ind's decision vector, caching the objectives and consuming one
// budget unit. Returns false (without evaluating) when the budget is
// exhausted — a termination signal, not a fault. Non-finite objective values
// are a contract violation and throw.
bool evaluate(Individual& ind, const ProblemSpec& p, EvalBudget& budget);

// Strict Pareto dominance (minimization): a <= b everywhere, a < b somewhere.
bool dominates(const ObjectiveVector& a, const ObjectiveVector& b);

// -1 if a dominates b, +1 if b dominates a, 0 otherwise. Single pass over m.
int pareto_compare(const ObjectiveVector& a, const ObjectiveVector& b);

// Sets every individual's dominance_count via an O(m N^2) pairwise scan.
void update_dominance_counts(Population& pop);

// Individuals with dominance_count 0 after a fresh count; input not mutated.
std::vector<Individual> extract_nondominated(const Population& pop);

// Nondominated subset of a raw objective set, preserving input order.
std::vector<ObjectiveVector> nondominated_filter(const std::vector<ObjectiveVector>& points);

} // namespace mohaea

#endif
