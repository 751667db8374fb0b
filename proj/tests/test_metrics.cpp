#include <doctest.h>

#include <cmath>
#include <limits>

#include "mohaea/metrics.hpp"

using namespace mohaea;

namespace {

// Literal transcription of the metric definition, kept independent of the
// library implementation.
double igd_oracle(const std::vector<ObjectiveVector>& ref, const std::vector<ObjectiveVector>& p)
{
    double total = 0.0;
    for (const auto& v : ref) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& u : p) {
            double d = 0.0;
            for (std::size_t i = 0; i < v.size(); ++i)
                d += (v[i] - u[i]) * (v[i] - u[i]);
            best = std::min(best, std::sqrt(d));
        }
        total += best;
    }
    return total / static_cast<double>(ref.size());
}

ParetoFrontSample as_sample(std::vector<ObjectiveVector> points)
{
    ParetoFrontSample s;
    s.problem = ProblemId::Zdt1;
    s.count = static_cast<int>(points.size());
    s.points = std::move(points);
    return s;
}

} // namespace

TEST_CASE("igd of a set against itself is zero")
{
    auto sample = sample_true_pf(ProblemId::Zdt1, 100);
    CHECK(igd(sample, sample.points).value == 0.0);
}

TEST_CASE("igd two-point hand computation")
{
    auto ref = as_sample({{0, 1}, {1, 0}});
    auto r = igd(ref, {{0, 0}});
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.reference_size == 2);
    CHECK(r.approximation_size == 1);
}

TEST_CASE("igd of a uniformly perturbed front is the perturbation")
{
    auto sample = sample_true_pf(ProblemId::Zdt1, 1000);
    auto shifted = sample.points;
    for (auto& p : shifted)
        p[1] += 0.001;
    CHECK(igd(sample, shifted).value == doctest::Approx(0.001).epsilon(1e-6));
}

TEST_CASE("igd errors")
{
    auto ref = as_sample({{0, 1}, {1, 0}});
    CHECK_THROWS_AS(igd(ref, {}), std::invalid_argument);
    CHECK_THROWS_AS(igd(ref, {{0, 0, 0}}), std::invalid_argument);
}

TEST_CASE("igd matches the brute-force oracle on random instances")
{
    Rng rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const int m = trial % 2 == 0 ? 2 : 3;
        std::vector<ObjectiveVector> ref, p;
        const int nref = 5 + static_cast<int>(uniform01(rng) * 60);
        const int np = 1 + static_cast<int>(uniform01(rng) * 40);
        for (int i = 0; i < nref; ++i) {
            ObjectiveVector v(m);
            for (auto& x : v)
                x = uniform(rng, -2.0, 2.0);
            ref.push_back(std::move(v));
        }
        for (int i = 0; i < np; ++i) {
            ObjectiveVector v(m);
            for (auto& x : v)
                x = uniform(rng, -2.0, 2.0);
            p.push_back(std::move(v));
        }
        CHECK(igd(as_sample(ref), p).value == doctest::Approx(igd_oracle(ref, p)).epsilon(1e-12));
    }
}

TEST_CASE("igd is monotone nonincreasing under approximation growth")
{
    Rng rng(29);
    auto sample = sample_true_pf(ProblemId::Zdt2, 200);
    std::vector<ObjectiveVector> p;
    double last = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 30; ++i) {
        p.push_back({uniform01(rng), uniform01(rng)});
        double value = igd(sample, p).value;
        CHECK(value <= last + 1e-15);
        last = value;
    }
}

TEST_CASE("igd is invariant under joint translation")
{
    Rng rng(31);
    std::vector<ObjectiveVector> ref, p;
    for (int i = 0; i < 40; ++i)
        ref.push_back({uniform01(rng), uniform01(rng)});
    for (int i = 0; i < 15; ++i)
        p.push_back({uniform01(rng), uniform01(rng)});
    const double base = igd(as_sample(ref), p).value;
    const ObjectiveVector shift{3.25, -1.5};
    for (auto& v : ref)
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] += shift[i];
    for (auto& v : p)
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] += shift[i];
    CHECK(igd(as_sample(ref), p).value == doctest::Approx(base).epsilon(1e-12));
}

TEST_CASE("igd_of_population uses every member, dominated ones included")
{
    auto sample = sample_true_pf(ProblemId::Zdt1, 50);
    Population pop;
    for (const auto& f : sample.points) {
        Individual ind;
        ind.objectives = f;
        ind.evaluated = true;
        pop.push_back(std::move(ind));
    }
    CHECK(igd_of_population(pop, sample).value == 0.0);

    // a dominated straggler can only bring reference points closer
    Individual straggler;
    straggler.objectives = {2.0, 2.0};
    straggler.evaluated = true;
    pop.push_back(straggler);
    CHECK(igd_of_population(pop, sample).value == 0.0);

    auto filtered = igd_of_population(pop, sample, true);
    CHECK(filtered.value == 0.0);
    CHECK(filtered.approximation_size == 50); // straggler dropped
}

TEST_CASE("default reference sizes")
{
    CHECK(default_reference_size(ProblemId::Zdt1) == 1000);
    CHECK(default_reference_size(ProblemId::Dtlz2) == 300);
}
