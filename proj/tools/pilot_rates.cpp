// Scratch pilot: operator-rate trajectories over the final quarter of a run.
#include <cstdio>
#include <cstdlib>

#include "mohaea/harness.hpp"

using namespace mohaea;

int main(int argc, char** argv)
{
    const ProblemId id = problem_from_name(argc > 1 ? argv[1] : "zdt1");
    const int seeds = argc > 2 ? std::atoi(argv[2]) : 30;
    ExperimentConfig defaults;
    const FamilySettings& fam = family_settings(defaults, id);

    int sbx_wins = 0;
    for (int seed = 1; seed <= seeds; ++seed) {
        MoHaeaConfig cfg;
        cfg.population_size = fam.population;
        cfg.max_evals = fam.max_evals;
        cfg.variant = OperatorSetVariant::Sm;
        cfg.seed = static_cast<std::uint64_t>(seed);
        auto rec = mohaea_run(id, cfg);
        const std::size_t tail_start = rec.trace.size() - rec.trace.size() / 4;
        double sbx = 0.0, uu = 0.0, sm = 0.0;
        int n = 0;
        for (std::size_t i = tail_start; i < rec.trace.size(); ++i) {
            sbx += rec.trace[i].mean_rates[0];
            uu += rec.trace[i].mean_rates[1];
            sm += rec.trace[i].mean_rates[2];
            ++n;
        }
        std::printf("seed %2d tail rates: SBX %.3f UU %.3f SM %.3f\n", seed, sbx / n, uu / n, sm / n);
        sbx_wins += sbx > sm;
    }
    std::printf("%s: SBX above SM in final quarter: %d/%d\n", problem_name(id), sbx_wins, seeds);
    return 0;
}
