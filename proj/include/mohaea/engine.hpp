#ifndef MOHAEA_ENGINE_HPP
#define MOHAEA_ENGINE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "mohaea/core.hpp"
#include "mohaea/problems.hpp"

namespace mohaea {

// Running lower bound of the objectives seen so far, kept strictly below
// every observation by a 1e-6 margin.
struct IdealPoint {
    ObjectiveVector z;
    static constexpr double kMargin = 1e-6;
};

// z_i = min(ideal.z_i, f_i - margin); an empty ideal adopts f - margin.
IdealPoint update_ideal(IdealPoint ideal, const ObjectiveVector& f);

// Scalar fitness of a parent/offspring pair sharing one reference direction.
//   DominancePenalty — d1 = 1 - cos(angle(f - z, w)), +1 added to whichever
//                      member of the pair the other one dominates.
//   ClassicalPbi     — d1 + theta*d2 boundary-intersection scalarization,
//                      kept as a documented alternative (no penalty term).
enum class FitnessMode { DominancePenalty, ClassicalPbi };

// Offspring niching distance for the crowding step.
enum class KnnSpace { Decision, Objective };

// Which of the two published operator sets is active:
//   Sm -> {SBX, UU, SM},  Pm -> {SBX, UU, PM}
enum class OperatorSetVariant { Sm, Pm };

const char* variant_name(OperatorSetVariant v); // "sm" / "pm"
OperatorSetVariant variant_from_name(const std::string& name);
std::vector<OperatorId> operator_set_for(OperatorSetVariant v);

struct PairFitness {
    double x_fitness = 0.0;
    double ind_fitness = 0.0;
};

// Fitness of offspring x and parent ind under ind's reference direction,
// measured from the frozen ideal point. Both must be evaluated.
PairFitness update_fitness(const Individual& x, const Individual& ind, const IdealPoint& ideal,
                           FitnessMode mode = FitnessMode::DominancePenalty,
                           double pbi_theta = 5.0);

struct BestStarResult {
    Individual child;
    OperatorRates rates;
    bool rewarded = false;
};

// The survivor/credit step: picks the offspring nearest to ind (k=1 niching),
// scores the pair with update_fitness, keeps the parent unless the offspring
// is at least as fit, rewards the applied operator only on strict
// improvement, and hands ind's reference direction to the child.
BestStarResult best_star(const std::vector<Individual>& offspring, const Individual& ind,
                         OperatorRates rates, OperatorId op, double delta,
                         const IdealPoint& ideal, const ProblemSpec& problem,
                         KnnSpace knn_space = KnnSpace::Decision,
                         FitnessMode mode = FitnessMode::DominancePenalty,
                         double pbi_theta = 5.0);

// Dominance-based tournament: draws `size` distinct candidates other than
// pop[exclude_idx] and returns the index of the one with the lowest
// dominance count (ties broken uniformly at random). A tournament larger
// than the available candidates is reduced with a warning.
std::size_t tournament_select(const Population& pop, std::size_t exclude_idx, int size, Rng& rng);

// Per-generation observer payload (populations after the generation's
// replacement step; `next` dominance counts are refreshed at the start of
// the following generation).
struct GenerationInfo {
    int generation = 0;
    long evals_used = 0;
    const Population& prev;
    const Population& next;
    const IdealPoint& frozen_ideal; // snapshot used for this generation's fitness
};

struct MoHaeaConfig {
    int population_size = 100;   // must be an exact simplex-lattice size for the problem's m
    long max_evals = 50000;
    OperatorSetVariant variant = OperatorSetVariant::Sm;
    std::vector<OperatorId> operator_set; // empty -> derived from `variant`
    OperatorConfig op_config;             // 1/n defaults resolved at run start
    int tournament_size = 4;
    std::uint64_t seed = 0;
    int trace_every = 1;                  // generations between trace points
    bool trace_fronts = false;            // record per-generation nondominated snapshots
    KnnSpace knn_space = KnnSpace::Decision;
    FitnessMode fitness_mode = FitnessMode::DominancePenalty;
    double pbi_theta = 5.0;
    std::function<void(const GenerationInfo&)> on_generation; // optional observer
};

struct TracePoint {
    int generation = 0;
    long evals_used = 0;
    std::vector<double> mean_rates;               // aligned with RunRecord::operator_set
    std::vector<ObjectiveVector> nondominated;    // filled only when trace_fronts is set
};

struct RunRecord {
    Population final_pop;
    std::vector<TracePoint> trace;
    std::vector<OperatorId> operator_set;
    long evals_used = 0;
    int generations = 0;
};

// The full adaptive evolutionary loop on a benchmark instance selected by id.
RunRecord mohaea_run(ProblemId problem, const MoHaeaConfig& cfg);

// Same loop on an arbitrary problem spec (used by tests and custom setups).
RunRecord mohaea_run(const ProblemSpec& problem, const MoHaeaConfig& cfg);

// ---- single-objective baseline ----

struct ScalarProblem {
    int n = 0;
    std::vector<double> lower;
    std::vector<double> upper;
    std::function<double(const std::vector<double>&)> evaluator;
};

struct ScalarIndividual {
    std::vector<double> x;
    double fitness = 0.0;
    OperatorRates rates;
};

struct HaeaGenerationInfo {
    int generation = 0;
    long evals_used = 0;
    const std::vector<ScalarIndividual>& prev;
    const std::vector<ScalarIndividual>& next;
};

struct HaeaConfig {
    int population_size = 50;
    long max_evals = 10000;
    std::vector<OperatorId> operator_set; // empty -> {SBX, UU, SM}
    OperatorConfig op_config;
    int tournament_size = 4;
    std::uint64_t seed = 0;
    std::function<void(const HaeaGenerationInfo&)> on_generation;
};

struct HaeaRecord {
    std::vector<ScalarIndividual> final_pop;
    double best_fitness = 0.0;
    long evals_used = 0;
    int generations = 0;
};

// The original per-individual adaptive loop with scalar fitness: each slot
// keeps the best of {offspring, parent} and rewards its operator only on
// strict improvement.
HaeaRecord haea_run(const ScalarProblem& problem, const HaeaConfig& cfg);

} // namespace mohaea

#endif
