#include "mohaea/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iostream>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace mohaea {

namespace {

// Zero weight components would make axis directions win every cosine tie;
// they are lifted to this floor before angle computations.
constexpr double kZeroWeightNudge = 1e-6;

double cosine_d1(const ObjectiveVector& f, const ObjectiveVector& z, const std::vector<double>& w)
{
    double dot = 0.0, nf = 0.0, nw = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double v = f[i] - z[i];
        const double wi = std::max(w[i], kZeroWeightNudge);
        dot += v * wi;
        nf += v * v;
        nw += wi * wi;
    }
    if (nf == 0.0)
        return 0.0; // sits exactly at the ideal point
    return 1.0 - dot / (std::sqrt(nf) * std::sqrt(nw));
}

double pbi_scalar(const ObjectiveVector& f, const ObjectiveVector& z, const std::vector<double>& w,
                  double theta)
{
    double dot = 0.0, nw = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double wi = std::max(w[i], kZeroWeightNudge);
        dot += (f[i] - z[i]) * wi;
        nw += wi * wi;
    }
    nw = std::sqrt(nw);
    const double d1 = dot / nw;
    double d2sq = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double wi = std::max(w[i], kZeroWeightNudge);
        const double r = (f[i] - z[i]) - d1 * wi / nw;
        d2sq += r * r;
    }
    return d1 + theta * std::sqrt(d2sq);
}

double knn_distance_sq(const Individual& a, const Individual& b, const ProblemSpec& problem,
                       KnnSpace space)
{
    double d2 = 0.0;
    if (space == KnnSpace::Decision) {
        for (int i = 0; i < problem.n; ++i) {
            const double r = (a.x[i] - b.x[i]) / (problem.upper[i] - problem.lower[i]);
            d2 += r * r;
        }
    } else {
        for (std::size_t i = 0; i < a.objectives.size(); ++i) {
            const double r = a.objectives[i] - b.objectives[i];
            d2 += r * r;
        }
    }
    return d2;
}

} // namespace

IdealPoint update_ideal(IdealPoint ideal, const ObjectiveVector& f)
{
    if (ideal.z.empty()) {
        ideal.z.resize(f.size());
        for (std::size_t i = 0; i < f.size(); ++i)
            ideal.z[i] = f[i] - IdealPoint::kMargin;
        return ideal;
    }
    if (ideal.z.size() != f.size())
        throw std::invalid_argument("ideal point dimension mismatch");
    for (std::size_t i = 0; i < f.size(); ++i)
        ideal.z[i] = std::min(ideal.z[i], f[i] - IdealPoint::kMargin);
    return ideal;
}

const char* variant_name(OperatorSetVariant v)
{
    return v == OperatorSetVariant::Sm ? "sm" : "pm";
}

OperatorSetVariant variant_from_name(const std::string& name)
{
    std::string low(name);
    std::transform(low.begin(), low.end(), low.begin(), [](unsigned char c) { return std::tolower(c); });
    if (low == "sm")
        return OperatorSetVariant::Sm;
    if (low == "pm")
        return OperatorSetVariant::Pm;
    throw std::invalid_argument("unknown variant: " + name + " (expected sm or pm)");
}

std::vector<OperatorId> operator_set_for(OperatorSetVariant v)
{
    if (v == OperatorSetVariant::Sm)
        return {OperatorId::Sbx, OperatorId::Uu, OperatorId::Sm};
    return {OperatorId::Sbx, OperatorId::Uu, OperatorId::Pm};
}

PairFitness update_fitness(const Individual& x, const Individual& ind, const IdealPoint& ideal,
                           FitnessMode mode, double pbi_theta)
{
    if (!x.evaluated || !ind.evaluated)
        throw std::invalid_argument("update_fitness needs evaluated individuals");
    const auto& w = ind.ref_dir.weights;
    if (w.size() != ind.objectives.size())
        throw std::invalid_argument("individual carries no usable reference direction");
    if (ideal.z.size() != ind.objectives.size())
        throw std::invalid_argument("ideal point dimension mismatch");

    PairFitness pf;
    if (mode == FitnessMode::ClassicalPbi) {
        pf.x_fitness = pbi_scalar(x.objectives, ideal.z, w, pbi_theta);
        pf.ind_fitness = pbi_scalar(ind.objectives, ideal.z, w, pbi_theta);
        return pf;
    }
    pf.x_fitness = cosine_d1(x.objectives, ideal.z, w);
    pf.ind_fitness = cosine_d1(ind.objectives, ideal.z, w);
    const int cmp = pareto_compare(x.objectives, ind.objectives);
    if (cmp < 0)
        pf.ind_fitness += 1.0; // parent dominated by offspring
    else if (cmp > 0)
        pf.x_fitness += 1.0; // offspring dominated by parent
    return pf;
}

BestStarResult best_star(const std::vector<Individual>& offspring, const Individual& ind,
                         OperatorRates rates, OperatorId op, double delta,
                         const IdealPoint& ideal, const ProblemSpec& problem,
                         KnnSpace knn_space, FitnessMode mode, double pbi_theta)
{
    if (offspring.empty())
        throw std::invalid_argument("best_star needs at least one offspring");

    std::size_t nearest = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < offspring.size(); ++i) {
        const double d = knn_distance_sq(offspring[i], ind, problem, knn_space);
        if (d < best_d) {
            best_d = d;
            nearest = i;
        }
    }

    const Individual& x = offspring[nearest];
    const PairFitness pf = update_fitness(x, ind, ideal, mode, pbi_theta);

    BestStarResult result;
    result.rewarded = pf.x_fitness < pf.ind_fitness;
    if (pf.x_fitness > pf.ind_fitness) {
        result.child = ind; // offspring not better: the parent survives
        result.child.fitness = pf.ind_fitness;
    } else {
        result.child = x;
        result.child.fitness = pf.x_fitness;
    }
    result.child.ref_dir = ind.ref_dir;
    result.rates = reward_punish(std::move(rates), op, result.rewarded, delta);
    return result;
}

std::size_t tournament_select(const Population& pop, std::size_t exclude_idx, int size, Rng& rng)
{
    if (pop.size() < 2)
        throw std::invalid_argument("tournament needs at least two individuals");
    if (exclude_idx >= pop.size())
        throw std::invalid_argument("tournament exclude index out of range");
    const std::size_t candidates = pop.size() - 1;
    if (static_cast<std::size_t>(size) > candidates) {
        static std::atomic<bool> warned{false};
        if (!warned.exchange(true))
            std::cerr << "warning: tournament size reduced to " << candidates
                      << " (population too small)\n";
        size = static_cast<int>(candidates);
    }
    if (size < 1)
        throw std::invalid_argument("tournament size must be positive");

    // distinct draws by rejection; tournaments are small so repeats are rare
    std::vector<std::size_t> slots;
    slots.reserve(size);
    std::size_t best = pop.size();
    int best_count = std::numeric_limits<int>::max();
    int ties = 0;
    while (static_cast<int>(slots.size()) < size) {
        std::size_t idx = uniform_index(rng, candidates);
        if (idx >= exclude_idx)
            ++idx; // skip the excluded slot
        if (std::find(slots.begin(), slots.end(), idx) != slots.end())
            continue;
        slots.push_back(idx);
        const int c = pop[idx].dominance_count;
        if (c < best_count) {
            best_count = c;
            best = idx;
            ties = 1;
        } else if (c == best_count) {
            ++ties; // reservoir tie-break keeps each tied candidate equally likely
            if (uniform01(rng) * ties < 1.0)
                best = idx;
        }
    }
    return best;
}

namespace {

Individual make_offspring(DecisionVector&& x)
{
    Individual ind;
    ind.x = std::move(x);
    return ind;
}

TracePoint make_trace(int t, long evals, const Population& pop, std::size_t n_ops, bool fronts)
{
    TracePoint tp;
    tp.generation = t;
    tp.evals_used = evals;
    tp.mean_rates.assign(n_ops, 0.0);
    for (const auto& ind : pop)
        for (std::size_t k = 0; k < n_ops; ++k)
            tp.mean_rates[k] += ind.rates.p[k];
    for (double& v : tp.mean_rates)
        v /= static_cast<double>(pop.size());
    if (fronts) {
        for (const auto& ind : pop)
            if (ind.dominance_count == 0)
                tp.nondominated.push_back(ind.objectives);
    }
    return tp;
}

} // namespace

RunRecord mohaea_run(ProblemId problem, const MoHaeaConfig& cfg)
{
    return mohaea_run(make_problem(problem), cfg);
}

RunRecord mohaea_run(const ProblemSpec& problem, const MoHaeaConfig& cfg)
{
    const int n_pop = cfg.population_size;
    if (n_pop < 1)
        throw std::invalid_argument("population size must be positive");
    if (cfg.max_evals < n_pop)
        throw std::invalid_argument("evaluation budget too small to initialize the population");

    const std::vector<OperatorId> ops =
        cfg.operator_set.empty() ? operator_set_for(cfg.variant) : cfg.operator_set;
    const OperatorConfig opcfg = resolve_defaults(cfg.op_config, problem.n);

    ReferenceLattice lattice;
    if (n_pop == 1) {
        // no simplex lattice has a single direction; a lone-slot run gets the center
        lattice.m = problem.m;
        lattice.h = 1;
        lattice.directions.push_back({std::vector<double>(problem.m, 1.0 / problem.m)});
    } else {
        lattice = das_dennis(problem.m, divisions_for_population(problem.m, n_pop));
    }

    Rng rng(cfg.seed);
    EvalBudget budget{0, cfg.max_evals};

    Population pop;
    pop.reserve(n_pop);
    for (int i = 0; i < n_pop; ++i) {
        Individual ind;
        ind.x.resize(problem.n);
        for (int j = 0; j < problem.n; ++j)
            ind.x[j] = uniform(rng, problem.lower[j], problem.upper[j]);
        ind.rates = init_rates(ops, rng);
        if (!evaluate(ind, problem, budget))
            throw std::logic_error("initial evaluation exceeded the budget");
        pop.push_back(std::move(ind));
    }
    assign_initial_directions(pop, lattice, rng);

    IdealPoint ideal;
    for (const auto& ind : pop)
        ideal = update_ideal(std::move(ideal), ind.objectives);

    RunRecord rec;
    rec.operator_set = ops;
    update_dominance_counts(pop);
    rec.trace.push_back(make_trace(0, budget.used, pop, ops.size(), cfg.trace_fronts));

    int t = 0;
    while (budget.remaining() > 0) {
        const long used_before = budget.used;
        const IdealPoint frozen = ideal; // fitness snapshot for this generation
        Population next;
        next.reserve(n_pop);

        for (std::size_t i = 0; i < pop.size(); ++i) {
            const Individual& ind = pop[i];
            OperatorRates rates = ind.rates;
            const double delta = uniform01(rng);
            const OperatorId op = choose_operator(rates, rng);
            const int n_off = operator_arity(op);
            // With decision-space niching the non-nearest child is never
            // scored, so it is discarded unevaluated; each application then
            // costs one evaluation. Objective-space niching needs both
            // children evaluated before the distance can be taken.
            const int cost = (n_off == 2 && cfg.knn_space == KnnSpace::Objective) ? 2 : 1;
            if (budget.remaining() < cost) {
                next.push_back(ind); // cannot afford this step; the parent carries over
                continue;
            }

            std::vector<Individual> offspring;
            offspring.reserve(n_off);
            if (n_off == 2) {
                const std::size_t partner = tournament_select(pop, i, cfg.tournament_size, rng);
                auto [c1, c2] = op == OperatorId::Sbx
                                    ? sbx_crossover(ind.x, pop[partner].x, problem.lower,
                                                    problem.upper, opcfg, rng)
                                    : uniform_uniform(ind.x, pop[partner].x, problem.lower,
                                                      problem.upper, opcfg, rng);
                Individual o1 = make_offspring(std::move(c1));
                Individual o2 = make_offspring(std::move(c2));
                if (cfg.knn_space == KnnSpace::Decision) {
                    const bool first = knn_distance_sq(o1, ind, problem, KnnSpace::Decision) <=
                                       knn_distance_sq(o2, ind, problem, KnnSpace::Decision);
                    offspring.push_back(first ? std::move(o1) : std::move(o2));
                } else {
                    offspring.push_back(std::move(o1));
                    offspring.push_back(std::move(o2));
                }
            } else {
                auto c = op == OperatorId::Pm
                             ? polynomial_mutation(ind.x, problem.lower, problem.upper, opcfg, rng)
                             : shrink_mutation(ind.x, problem.lower, problem.upper, opcfg, rng);
                offspring.push_back(make_offspring(std::move(c)));
            }
            for (auto& o : offspring) {
                if (!evaluate(o, problem, budget))
                    throw std::logic_error("offspring evaluation exceeded the budget");
                ideal = update_ideal(std::move(ideal), o.objectives);
            }

            BestStarResult r = best_star(offspring, ind, std::move(rates), op, delta, frozen,
                                         problem, cfg.knn_space, cfg.fitness_mode, cfg.pbi_theta);
            r.child.rates = std::move(r.rates);
            next.push_back(std::move(r.child));
        }

        if (budget.used == used_before)
            break; // no operator application was affordable
        if (cfg.on_generation)
            cfg.on_generation(GenerationInfo{t + 1, budget.used, pop, next, frozen});
        pop = std::move(next);
        ++t;
        update_dominance_counts(pop);
        if (cfg.trace_every > 0 && t % cfg.trace_every == 0)
            rec.trace.push_back(make_trace(t, budget.used, pop, ops.size(), cfg.trace_fronts));
    }

    if (rec.trace.back().generation != t)
        rec.trace.push_back(make_trace(t, budget.used, pop, ops.size(), cfg.trace_fronts));
    rec.final_pop = std::move(pop);
    rec.evals_used = budget.used;
    rec.generations = t;
    return rec;
}

// ---- single-objective baseline ----

namespace {

std::size_t scalar_tournament(const std::vector<ScalarIndividual>& pop, std::size_t exclude_idx,
                              int size, Rng& rng)
{
    const std::size_t candidates = pop.size() - 1;
    if (static_cast<std::size_t>(size) > candidates)
        size = static_cast<int>(candidates);
    std::vector<std::size_t> slots;
    slots.reserve(size);
    std::size_t best = pop.size();
    double best_fit = std::numeric_limits<double>::infinity();
    int ties = 0;
    while (static_cast<int>(slots.size()) < size) {
        std::size_t idx = uniform_index(rng, candidates);
        if (idx >= exclude_idx)
            ++idx;
        if (std::find(slots.begin(), slots.end(), idx) != slots.end())
            continue;
        slots.push_back(idx);
        if (pop[idx].fitness < best_fit) {
            best_fit = pop[idx].fitness;
            best = idx;
            ties = 1;
        } else if (pop[idx].fitness == best_fit) {
            ++ties;
            if (uniform01(rng) * ties < 1.0)
                best = idx;
        }
    }
    return best;
}

} // namespace

HaeaRecord haea_run(const ScalarProblem& problem, const HaeaConfig& cfg)
{
    if (cfg.population_size < 1)
        throw std::invalid_argument("population size must be positive");
    if (cfg.max_evals < cfg.population_size)
        throw std::invalid_argument("evaluation budget too small to initialize the population");

    const std::vector<OperatorId> ops =
        cfg.operator_set.empty()
            ? std::vector<OperatorId>{OperatorId::Sbx, OperatorId::Uu, OperatorId::Sm}
            : cfg.operator_set;
    const OperatorConfig opcfg = resolve_defaults(cfg.op_config, problem.n);

    Rng rng(cfg.seed);
    long used = 0;
    auto eval = [&](const std::vector<double>& x) {
        const double f = problem.evaluator(x);
        if (!std::isfinite(f))
            throw std::domain_error("non-finite scalar fitness");
        ++used;
        return f;
    };

    std::vector<ScalarIndividual> pop(cfg.population_size);
    for (auto& ind : pop) {
        ind.x.resize(problem.n);
        for (int j = 0; j < problem.n; ++j)
            ind.x[j] = uniform(rng, problem.lower[j], problem.upper[j]);
        ind.rates = init_rates(ops, rng);
        ind.fitness = eval(ind.x);
    }

    int t = 0;
    while (used < cfg.max_evals) {
        const long used_before = used;
        std::vector<ScalarIndividual> next;
        next.reserve(pop.size());

        for (std::size_t i = 0; i < pop.size(); ++i) {
            const ScalarIndividual& ind = pop[i];
            OperatorRates rates = ind.rates;
            const double delta = uniform01(rng);
            const OperatorId op = choose_operator(rates, rng);
            const int n_off = operator_arity(op);
            if (cfg.max_evals - used < n_off) {
                next.push_back(ind);
                continue;
            }

            std::vector<std::vector<double>> offspring;
            if (n_off == 2) {
                const std::size_t partner =
                    pop.size() > 1 ? scalar_tournament(pop, i, cfg.tournament_size, rng) : i;
                auto [c1, c2] = op == OperatorId::Sbx
                                    ? sbx_crossover(ind.x, pop[partner].x, problem.lower,
                                                    problem.upper, opcfg, rng)
                                    : uniform_uniform(ind.x, pop[partner].x, problem.lower,
                                                      problem.upper, opcfg, rng);
                offspring.push_back(std::move(c1));
                offspring.push_back(std::move(c2));
            } else {
                offspring.push_back(op == OperatorId::Pm
                                        ? polynomial_mutation(ind.x, problem.lower, problem.upper,
                                                              opcfg, rng)
                                        : shrink_mutation(ind.x, problem.lower, problem.upper,
                                                          opcfg, rng));
            }

            ScalarIndividual child = ind;
            for (auto& ox : offspring) {
                const double f = eval(ox);
                if (f < child.fitness) {
                    child.x = std::move(ox);
                    child.fitness = f;
                }
            }
            const bool improved = child.fitness < ind.fitness;
            child.rates = reward_punish(std::move(rates), op, improved, delta);
            next.push_back(std::move(child));
        }

        if (used == used_before)
            break;
        if (cfg.on_generation)
            cfg.on_generation(HaeaGenerationInfo{t + 1, used, pop, next});
        pop = std::move(next);
        ++t;
    }

    HaeaRecord rec;
    rec.best_fitness = std::numeric_limits<double>::infinity();
    for (const auto& ind : pop)
        rec.best_fitness = std::min(rec.best_fitness, ind.fitness);
    rec.final_pop = std::move(pop);
    rec.evals_used = used;
    rec.generations = t;
    return rec;
}

} // namespace mohaea
