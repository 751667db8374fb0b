#include <doctest.h>

#include <cmath>

#include "mohaea/core.hpp"
#include "mohaea/problems.hpp"

using namespace mohaea;

namespace {

// Independent quadratic oracle: counts by the dominance definition alone.
std::vector<int> brute_force_counts(const std::vector<ObjectiveVector>& objs)
{
    std::vector<int> counts(objs.size(), 0);
    for (std::size_t i = 0; i < objs.size(); ++i)
        for (std::size_t j = 0; j < objs.size(); ++j)
            if (j != i && dominates(objs[j], objs[i]))
                ++counts[i];
    return counts;
}

Population population_from(const std::vector<ObjectiveVector>& objs)
{
    Population pop;
    for (const auto& f : objs) {
        Individual ind;
        ind.objectives = f;
        ind.evaluated = true;
        pop.push_back(std::move(ind));
    }
    return pop;
}

} // namespace

TEST_CASE("evaluate caches objectives and counts budget")
{
    ProblemSpec zdt1 = make_problem(ProblemId::Zdt1);
    EvalBudget budget{0, 10};

    Individual ind;
    ind.x.assign(30, 0.0);
    ind.x[0] = 0.5;
    REQUIRE(evaluate(ind, zdt1, budget));
    CHECK(ind.evaluated);
    CHECK(ind.objectives[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(ind.objectives[1] == doctest::Approx(1.0 - std::sqrt(0.5)).epsilon(1e-12));
    CHECK(budget.used == 1);

    ind.x.assign(30, 0.0);
    REQUIRE(evaluate(ind, zdt1, budget));
    CHECK(ind.objectives[0] == doctest::Approx(0.0));
    CHECK(ind.objectives[1] == doctest::Approx(1.0));
    CHECK(budget.used == 2);
}

TEST_CASE("evaluate on DTLZ2 optimum corner")
{
    ProblemSpec dtlz2 = make_problem(ProblemId::Dtlz2);
    EvalBudget budget{0, 1};
    Individual ind;
    ind.x.assign(12, 0.5);
    ind.x[0] = 0.0;
    ind.x[1] = 0.0;
    REQUIRE(evaluate(ind, dtlz2, budget));
    CHECK(ind.objectives[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ind.objectives[1] == doctest::Approx(0.0));
    CHECK(ind.objectives[2] == doctest::Approx(0.0));
}

TEST_CASE("evaluate signals budget exhaustion without evaluating")
{
    ProblemSpec zdt1 = make_problem(ProblemId::Zdt1);
    EvalBudget budget{1, 1};
    Individual ind;
    ind.x.assign(30, 0.2);
    CHECK_FALSE(evaluate(ind, zdt1, budget));
    CHECK_FALSE(ind.evaluated);
    CHECK(budget.used == 1);
}

TEST_CASE("evaluate rejects out-of-bounds and non-finite evaluations")
{
    ProblemSpec zdt1 = make_problem(ProblemId::Zdt1);
    EvalBudget budget{0, 5};
    Individual ind;
    ind.x.assign(30, 1.5);
    CHECK_THROWS_AS(evaluate(ind, zdt1, budget), std::invalid_argument);

    ProblemSpec bad;
    bad.id = "bad";
    bad.n = 1;
    bad.m = 2;
    bad.lower = {0.0};
    bad.upper = {1.0};
    bad.evaluator = [](const DecisionVector&) {
        return ObjectiveVector{std::nan(""), 0.0};
    };
    Individual one;
    one.x = {0.5};
    CHECK_THROWS_AS(evaluate(one, bad, budget), std::domain_error);
}

TEST_CASE("dominates matches the strict definition")
{
    CHECK(dominates({1, 2}, {1, 3}));
    CHECK_FALSE(dominates({1, 2}, {1, 2}));
    CHECK_FALSE(dominates({1, 3}, {3, 1}));
    CHECK_FALSE(dominates({3, 1}, {1, 3}));
    CHECK_THROWS_AS(dominates({1, 2}, {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("dominance is irreflexive, antisymmetric and transitive on samples")
{
    Rng rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        ObjectiveVector a{uniform01(rng), uniform01(rng), uniform01(rng)};
        ObjectiveVector b{uniform01(rng), uniform01(rng), uniform01(rng)};
        ObjectiveVector c{uniform01(rng), uniform01(rng), uniform01(rng)};
        CHECK_FALSE(dominates(a, a));
        if (dominates(a, b))
            CHECK_FALSE(dominates(b, a));
        if (dominates(a, b) && dominates(b, c))
            CHECK(dominates(a, c));
        // pareto_compare agrees with the two dominates calls
        int cmp = pareto_compare(a, b);
        CHECK(cmp == (dominates(a, b) ? -1 : dominates(b, a) ? 1 : 0));
    }
}

TEST_CASE("update_dominance_counts on hand cases")
{
    auto pop = population_from({{0, 0}, {1, 1}, {2, 2}});
    update_dominance_counts(pop);
    CHECK(pop[0].dominance_count == 0);
    CHECK(pop[1].dominance_count == 1);
    CHECK(pop[2].dominance_count == 2);

    pop = population_from({{0, 1}, {1, 0}});
    update_dominance_counts(pop);
    CHECK(pop[0].dominance_count == 0);
    CHECK(pop[1].dominance_count == 0);
}

TEST_CASE("update_dominance_counts equals the brute-force oracle")
{
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<ObjectiveVector> objs;
        for (int i = 0; i < 20; ++i)
            objs.push_back({uniform01(rng), uniform01(rng)});
        auto pop = population_from(objs);
        update_dominance_counts(pop);
        auto expected = brute_force_counts(objs);
        for (std::size_t i = 0; i < pop.size(); ++i)
            CHECK(pop[i].dominance_count == expected[i]);
    }
}

TEST_CASE("extract_nondominated")
{
    auto pop = population_from({{0, 0}, {1, 1}});
    auto front = extract_nondominated(pop);
    REQUIRE(front.size() == 1);
    CHECK(front[0].objectives == ObjectiveVector{0, 0});

    // all points on f2 = 1 - f1 are mutually nondominated
    std::vector<ObjectiveVector> line;
    for (int i = 0; i <= 10; ++i)
        line.push_back({i / 10.0, 1.0 - i / 10.0});
    CHECK(extract_nondominated(population_from(line)).size() == line.size());

    CHECK(extract_nondominated({}).empty());
}

TEST_CASE("extract_nondominated matches a quadratic filter on random 3-objective sets")
{
    Rng rng(13);
    std::vector<ObjectiveVector> objs;
    for (int i = 0; i < 50; ++i)
        objs.push_back({uniform01(rng), uniform01(rng), uniform01(rng)});
    auto front = extract_nondominated(population_from(objs));
    auto counts = brute_force_counts(objs);
    std::size_t expected = 0;
    for (std::size_t i = 0; i < objs.size(); ++i)
        if (counts[i] == 0)
            ++expected;
    CHECK(front.size() == expected);
    for (const auto& ind : front) {
        bool dominated = false;
        for (const auto& other : objs)
            dominated = dominated || dominates(other, ind.objectives);
        CHECK_FALSE(dominated);
    }
}

TEST_CASE("budget is monotone across evaluator calls")
{
    ProblemSpec zdt1 = make_problem(ProblemId::Zdt1);
    EvalBudget budget{0, 100};
    Rng rng(3);
    long last = 0;
    for (int i = 0; i < 100; ++i) {
        Individual ind;
        ind.x.resize(30);
        for (auto& v : ind.x)
            v = uniform01(rng);
        REQUIRE(evaluate(ind, zdt1, budget));
        CHECK(budget.used == last + 1);
        last = budget.used;
    }
    CHECK(budget.exhausted());
}
