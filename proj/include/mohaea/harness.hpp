#ifndef MOHAEA_HARNESS_HPP
#define MOHAEA_HARNESS_HPP

#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mohaea/engine.hpp"
#include "mohaea/metrics.hpp"

namespace mohaea {

// Per-family experiment settings (ZDT vs DTLZ).
struct FamilySettings {
    long max_evals = 0;
    int population = 0;
};

struct ExperimentConfig {
    std::vector<ProblemId> problems;
    std::vector<OperatorSetVariant> variants;
    int runs = 30;
    std::uint64_t base_seed = 1; // run i uses seed base_seed + i
    FamilySettings zdt{50000, 100};
    FamilySettings dtlz{75000, 300};
    std::filesystem::path output_dir = "out";
    int threads = 0;             // 0 -> hardware concurrency
    int reference_size = 0;      // 0 -> per-problem default
    KnnSpace knn_space = KnnSpace::Decision;
    FitnessMode fitness_mode = FitnessMode::DominancePenalty;
};

// Parses a JSON experiment config; unknown keys are rejected. The
// MOHAEA_OUTPUT_DIR environment variable overrides output_dir when set.
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

struct SummaryRow {
    ProblemId problem;
    OperatorSetVariant variant;
    double mean_igd = 0.0;
    double std_igd = 0.0;
    double best_igd = 0.0;
    int runs = 0;
};

// Arithmetic mean and sample standard deviation (divisor runs-1; one value
// yields std 0).
std::pair<double, double> summarize(const std::vector<double>& per_run_igd);

struct CellResult {
    ProblemId problem;
    OperatorSetVariant variant;
    std::vector<double> igd_per_run; // indexed by run
    int best_run = 0;
};

// Runs the runs x problems x variants grid (parallel over cells), writing:
//   runs/<problem>_<variant>_runNN.csv         per-run record (resume marker)
//   runs/<problem>_<variant>_runNN_front.csv   final population objectives
//   runs/<problem>_<variant>_runNN_rates.csv   per-generation mean rates
//   fronts/<problem>_<variant>_best.csv        front of the best-IGD run
//   rates/<problem>_<variant>_mean.csv         rate trajectories averaged over runs
//   summary.csv                                problem,variant,mean_igd,std_igd,best_igd,runs
// Cells whose per-run record already exists are loaded instead of re-run, so
// an interrupted batch resumes where it stopped.
std::vector<SummaryRow> run_experiment(const ExperimentConfig& cfg);

// CLI entry point (subcommands: run, bench, igd, pf, lattice). Returns the
// process exit status; errors print a one-line diagnostic to stderr.
int cli_dispatch(int argc, const char* const* argv);

// Settings helpers shared by the CLI and the acceptance suite.
const FamilySettings& family_settings(const ExperimentConfig& cfg, ProblemId id);
MoHaeaConfig run_config_for(const ExperimentConfig& cfg, ProblemId id,
                            OperatorSetVariant variant, std::uint64_t seed);

} // namespace mohaea

#endif
