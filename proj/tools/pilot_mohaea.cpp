// Scratch pilot: per-problem IGD statistics for a handful of seeds.
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <vector>

#include "mohaea/harness.hpp"

using namespace mohaea;

int main(int argc, char** argv)
{
    if (argc < 3) {
        std::fprintf(stderr, "usage: pilot_mohaea <problem> <variant> [seeds] [evals] [pop] [ref]\n");
        return 2;
    }
    const ProblemId id = problem_from_name(argv[1]);
    const OperatorSetVariant variant = variant_from_name(argv[2]);
    const int seeds = argc > 3 ? std::atoi(argv[3]) : 5;
    ExperimentConfig defaults;
    const FamilySettings& fam = family_settings(defaults, id);
    const long evals = argc > 4 ? std::atol(argv[4]) : fam.max_evals;
    const int pop = argc > 5 ? std::atoi(argv[5]) : fam.population;
    const int ref = argc > 6 ? std::atoi(argv[6]) : default_reference_size(id);
    const bool knn_obj = argc > 7 && std::strcmp(argv[7], "obj") == 0;

    const auto sample = sample_true_pf(id, ref);
    std::vector<double> igds;
    for (int seed = 1; seed <= seeds; ++seed) {
        MoHaeaConfig cfg;
        cfg.population_size = pop;
        cfg.max_evals = evals;
        cfg.variant = variant;
        cfg.seed = static_cast<std::uint64_t>(seed);
        if (knn_obj)
            cfg.knn_space = KnnSpace::Objective;
        auto rec = mohaea_run(id, cfg);
        auto result = igd_of_population(rec.final_pop, sample);
        igds.push_back(result.value);
        std::printf("  seed %2d igd %.4e gens %d evals %ld\n", seed, result.value,
                    rec.generations, rec.evals_used);
        std::fflush(stdout);
    }
    auto [mean, stdev] = summarize(igds);
    std::printf("%s %s evals=%ld pop=%d ref=%d  mean %.4e  std %.4e\n", problem_name(id),
                variant_name(variant), evals, pop, ref, mean, stdev);
    return 0;
}
