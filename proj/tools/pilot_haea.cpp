// Scratch pilot for the scalar baseline convergence threshold.
#include <cstdio>
#include <cstdlib>

#include "mohaea/engine.hpp"

using namespace mohaea;

int main(int argc, char** argv)
{
    long evals = argc > 1 ? std::atol(argv[1]) : 10000;
    int pop = argc > 2 ? std::atoi(argv[2]) : 50;

    ScalarProblem sphere;
    sphere.n = 10;
    sphere.lower.assign(10, -5.0);
    sphere.upper.assign(10, 5.0);
    sphere.evaluator = [](const std::vector<double>& x) {
        double s = 0.0;
        for (double v : x)
            s += v * v;
        return s;
    };

    int solved3 = 0, solved2 = 0, solved1 = 0;
    double worst = 0.0, sum = 0.0;
    for (int seed = 0; seed < 30; ++seed) {
        HaeaConfig cfg;
        cfg.population_size = pop;
        cfg.max_evals = evals;
        cfg.seed = static_cast<std::uint64_t>(seed);
        auto rec = haea_run(sphere, cfg);
        std::printf("seed %2d best %.3e gens %d\n", seed, rec.best_fitness, rec.generations);
        solved3 += rec.best_fitness < 1e-3;
        solved2 += rec.best_fitness < 1e-2;
        solved1 += rec.best_fitness < 1e-1;
        worst = std::max(worst, rec.best_fitness);
        sum += rec.best_fitness;
    }
    std::printf("evals=%ld pop=%d  <1e-3: %d/30  <1e-2: %d/30  <1e-1: %d/30  mean %.3e worst %.3e\n",
                evals, pop, solved3, solved2, solved1, sum / 30.0, worst);
    return 0;
}
