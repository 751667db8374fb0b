#include <doctest.h>

#include <cmath>

#include "mohaea/operators.hpp"
#include "mohaea/problems.hpp"

using namespace mohaea;

namespace {

DecisionVector random_point(const ProblemSpec& spec, Rng& rng)
{
    DecisionVector x(spec.n);
    for (int i = 0; i < spec.n; ++i)
        x[i] = uniform(rng, spec.lower[i], spec.upper[i]);
    return x;
}

bool within_bounds(const DecisionVector& x, const ProblemSpec& spec)
{
    for (int i = 0; i < spec.n; ++i)
        if (x[i] < spec.lower[i] || x[i] > spec.upper[i])
            return false;
    return true;
}

constexpr OperatorId kAllOps[] = {OperatorId::Sbx, OperatorId::Pm, OperatorId::Sm, OperatorId::Uu};

} // namespace

TEST_CASE("operator identities")
{
    CHECK(operator_arity(OperatorId::Sbx) == 2);
    CHECK(operator_arity(OperatorId::Uu) == 2);
    CHECK(operator_arity(OperatorId::Pm) == 1);
    CHECK(operator_arity(OperatorId::Sm) == 1);
    for (OperatorId op : kAllOps)
        CHECK(operator_from_name(operator_name(op)) == op);
}

TEST_CASE("sbx with identical parents returns the parents")
{
    Rng rng(1);
    OperatorConfig cfg = resolve_defaults({}, 5);
    std::vector<double> lo(5, 0.0), hi(5, 1.0);
    DecisionVector p{0.1, 0.4, 0.6, 0.9, 0.5};
    auto [c1, c2] = sbx_crossover(p, p, lo, hi, cfg, rng);
    CHECK(c1 == p);
    CHECK(c2 == p);
}

TEST_CASE("sbx child distribution is symmetric about the parents' mean")
{
    Rng rng(2);
    OperatorConfig cfg = resolve_defaults({}, 1);
    std::vector<double> lo{0.0}, hi{1.0};
    DecisionVector p1{0.2}, p2{0.8};
    double sum = 0.0;
    long count = 0;
    for (int i = 0; i < 100000; ++i) {
        auto [c1, c2] = sbx_crossover(p1, p2, lo, hi, cfg, rng);
        sum += c1[0] + c2[0];
        count += 2;
        CHECK(c1[0] >= 0.0);
        CHECK(c1[0] <= 1.0);
    }
    CHECK(sum / count == doctest::Approx(0.5).epsilon(0.02)); // mean within +-0.01
}

TEST_CASE("polynomial mutation identity at rate zero and bounds always")
{
    Rng rng(3);
    OperatorConfig cfg;
    cfg.mutation_rate = 0.0;
    std::vector<double> lo(4, -1.0), hi(4, 2.0);
    DecisionVector p{-0.5, 0.0, 1.5, 2.0};
    CHECK(polynomial_mutation(p, lo, hi, cfg, rng) == p);

    cfg.mutation_rate = 1.0;
    for (int i = 0; i < 1000; ++i) {
        auto c = polynomial_mutation(p, lo, hi, cfg, rng);
        for (int j = 0; j < 4; ++j) {
            CHECK(c[j] >= lo[j]);
            CHECK(c[j] <= hi[j]);
        }
    }
}

TEST_CASE("polynomial mutation hits the 1/n per-gene rate")
{
    const int n = 30;
    Rng rng(4);
    OperatorConfig cfg = resolve_defaults({}, n);
    std::vector<double> lo(n, 0.0), hi(n, 1.0);
    DecisionVector p(n, 0.5);
    long mutated = 0;
    const long trials = 100000;
    for (long t = 0; t < trials; ++t) {
        auto c = polynomial_mutation(p, lo, hi, cfg, rng);
        for (int j = 0; j < n; ++j)
            if (c[j] != p[j])
                ++mutated;
    }
    const double draws = static_cast<double>(trials) * n;
    const double rate = 1.0 / n;
    const double sigma = std::sqrt(draws * rate * (1.0 - rate));
    CHECK(std::abs(mutated - draws * rate) < 3.0 * sigma);
}

TEST_CASE("shrink mutation uses sigma = range/20")
{
    Rng rng(5);
    OperatorConfig cfg;
    cfg.mutation_rate = 1.0;
    std::vector<double> lo{0.0}, hi{1.0};
    DecisionVector p{0.5};
    double sum = 0.0, sumsq = 0.0;
    const int trials = 100000;
    for (int t = 0; t < trials; ++t) {
        auto c = shrink_mutation(p, lo, hi, cfg, rng);
        const double step = c[0] - 0.5;
        sum += step;
        sumsq += step * step;
    }
    const double mean = sum / trials;
    const double stdev = std::sqrt(sumsq / trials - mean * mean);
    CHECK(stdev == doctest::Approx(0.05).epsilon(0.04)); // 0.05 +- 0.002
    CHECK(std::abs(mean) < 0.001);

    cfg.mutation_rate = 0.0;
    CHECK(shrink_mutation(p, lo, hi, cfg, rng) == p);
}

TEST_CASE("uniform-uniform swap preserves the gene multiset at rate zero")
{
    const int n = 8;
    Rng rng(6);
    OperatorConfig cfg;
    cfg.uu_gene_rate = 0.0;
    std::vector<double> lo(n, 0.0), hi(n, 1.0);
    DecisionVector p1, p2;
    for (int i = 0; i < n; ++i) {
        p1.push_back(uniform01(rng));
        p2.push_back(uniform01(rng));
    }
    for (int t = 0; t < 200; ++t) {
        auto [c1, c2] = uniform_uniform(p1, p2, lo, hi, cfg, rng);
        for (int i = 0; i < n; ++i) {
            // per-gene swap keeps the pair {p1[i], p2[i]} intact
            const bool kept = c1[i] == p1[i] && c2[i] == p2[i];
            const bool swapped = c1[i] == p2[i] && c2[i] == p1[i];
            CHECK((kept || swapped));
        }
    }

    auto [s1, s2] = uniform_uniform(p1, p1, lo, hi, cfg, rng);
    CHECK(s1 == p1);
    CHECK(s2 == p1);
}

TEST_CASE("uniform-uniform resamples about one gene per child at 1/n")
{
    const int n = 12;
    Rng rng(7);
    OperatorConfig cfg = resolve_defaults({}, n);
    std::vector<double> lo(n, 0.0), hi(n, 1.0);
    DecisionVector p(n, 0.25);
    long resampled = 0;
    const int trials = 50000;
    for (int t = 0; t < trials; ++t) {
        auto [c1, c2] = uniform_uniform(p, p, lo, hi, cfg, rng);
        for (int i = 0; i < n; ++i) {
            resampled += c1[i] != p[i];
            resampled += c2[i] != p[i];
        }
    }
    const double per_child = resampled / (2.0 * trials);
    CHECK(per_child == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("all operators respect bounds on random invocations")
{
    Rng rng(8);
    for (ProblemId id : kAllProblems) {
        auto spec = make_problem(id);
        OperatorConfig cfg = resolve_defaults({}, spec.n);
        INFO(problem_name(id));
        for (int t = 0; t < 10000; ++t) {
            auto a = random_point(spec, rng);
            auto b = random_point(spec, rng);
            auto [s1, s2] = sbx_crossover(a, b, spec.lower, spec.upper, cfg, rng);
            REQUIRE(within_bounds(s1, spec));
            REQUIRE(within_bounds(s2, spec));
            auto [u1, u2] = uniform_uniform(a, b, spec.lower, spec.upper, cfg, rng);
            REQUIRE(within_bounds(u1, spec));
            REQUIRE(within_bounds(u2, spec));
            REQUIRE(within_bounds(polynomial_mutation(a, spec.lower, spec.upper, cfg, rng), spec));
            REQUIRE(within_bounds(shrink_mutation(a, spec.lower, spec.upper, cfg, rng), spec));
        }
    }
}

TEST_CASE("choose_operator follows the encoded probabilities")
{
    Rng rng(9);
    OperatorRates rates;
    rates.ops = {OperatorId::Sbx, OperatorId::Uu, OperatorId::Sm};
    rates.p = {1.0, 0.0, 0.0};
    rates.normalize();
    for (int t = 0; t < 1000; ++t)
        CHECK(choose_operator(rates, rng) == OperatorId::Sbx);

    rates.p = {0.5, 0.0, 0.5};
    rates.normalize();
    int sbx = 0;
    const int trials = 100000;
    for (int t = 0; t < trials; ++t)
        sbx += choose_operator(rates, rng) == OperatorId::Sbx;
    CHECK(sbx / static_cast<double>(trials) == doctest::Approx(0.5).epsilon(0.02));

    rates.p = {1.0, 1.0, 1.0};
    rates.normalize();
    int counts[3] = {0, 0, 0};
    for (int t = 0; t < trials; ++t) {
        switch (choose_operator(rates, rng)) {
        case OperatorId::Sbx: ++counts[0]; break;
        case OperatorId::Uu: ++counts[1]; break;
        default: ++counts[2]; break;
        }
    }
    for (int c : counts)
        CHECK(c / static_cast<double>(trials) == doctest::Approx(1.0 / 3.0).epsilon(0.03));
}

TEST_CASE("reward_punish arithmetic")
{
    OperatorRates rates;
    rates.ops = {OperatorId::Sbx, OperatorId::Sm};
    rates.p = {0.5, 0.5};

    auto rewarded = reward_punish(rates, OperatorId::Sbx, true, 1.0);
    CHECK(rewarded.p[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
    CHECK(rewarded.p[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-9));

    auto unchanged = reward_punish(rates, OperatorId::Sbx, false, 0.0);
    CHECK(unchanged.p[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(unchanged.p[1] == doctest::Approx(0.5).epsilon(1e-12));

    rates.p = {0.8, 0.2};
    auto punished = reward_punish(rates, OperatorId::Sbx, false, 0.5);
    CHECK(punished.p[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
    CHECK(punished.p[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-9));

    CHECK_THROWS_AS(reward_punish(rates, OperatorId::Sbx, true, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(reward_punish(rates, OperatorId::Pm, true, 0.5), std::invalid_argument);
}

TEST_CASE("reward_punish keeps the unmodified operators' order")
{
    Rng rng(10);
    OperatorRates rates;
    rates.ops = {OperatorId::Sbx, OperatorId::Uu, OperatorId::Sm};
    for (int t = 0; t < 1000; ++t) {
        rates.p = {uniform01(rng) + 0.01, uniform01(rng) + 0.01, uniform01(rng) + 0.01};
        rates.normalize();
        const bool uu_above_sm = rates.p[1] >= rates.p[2];
        auto next = reward_punish(rates, OperatorId::Sbx, uniform01(rng) < 0.5, uniform01(rng));
        CHECK((next.p[1] >= next.p[2]) == uu_above_sm);
    }
}

TEST_CASE("rates stay strictly positive under heavy punishment")
{
    Rng rng(11);
    OperatorRates rates;
    rates.ops = {OperatorId::Sbx, OperatorId::Sm};
    rates.p = {0.5, 0.5};
    for (int t = 0; t < 10000; ++t)
        rates = reward_punish(std::move(rates), OperatorId::Sm, false, uniform01(rng));
    CHECK(rates.p[1] > 0.0);
    CHECK(rates.is_normalized());
}

TEST_CASE("normalization is idempotent")
{
    Rng rng(12);
    for (int t = 0; t < 1000; ++t) {
        OperatorRates rates;
        rates.ops = {OperatorId::Sbx, OperatorId::Uu, OperatorId::Sm};
        rates.p = {uniform01(rng), uniform01(rng), uniform01(rng) + 1e-6};
        rates.normalize();
        auto once = rates.p;
        rates.normalize();
        CHECK(rates.p == once);
        CHECK(rates.is_normalized());
    }
}

TEST_CASE("init_rates draws normalized uniform rates")
{
    Rng rng(13);
    const OperatorId single[] = {OperatorId::Pm};
    auto lone = init_rates(single, rng);
    CHECK(lone.p.size() == 1);
    CHECK(lone.p[0] == doctest::Approx(1.0));

    const OperatorId three[] = {OperatorId::Sbx, OperatorId::Uu, OperatorId::Sm};
    double mean[3] = {0, 0, 0};
    const int draws = 10000;
    for (int t = 0; t < draws; ++t) {
        auto r = init_rates(three, rng);
        CHECK(r.is_normalized());
        for (int i = 0; i < 3; ++i)
            mean[i] += r.p[i];
    }
    for (double m : mean)
        CHECK(m / draws == doctest::Approx(1.0 / 3.0).epsilon(0.03));
}
