#include "mohaea/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "mohaea/csvio.hpp"

namespace fs = std::filesystem;

namespace mohaea {

std::pair<double, double> summarize(const std::vector<double>& per_run_igd)
{
    if (per_run_igd.empty())
        throw std::invalid_argument("summarize needs at least one value");
    const double n = static_cast<double>(per_run_igd.size());
    double mean = 0.0;
    for (double v : per_run_igd)
        mean += v;
    mean /= n;
    if (per_run_igd.size() == 1)
        return {mean, 0.0};
    double ss = 0.0;
    for (double v : per_run_igd)
        ss += (v - mean) * (v - mean);
    return {mean, std::sqrt(ss / (n - 1.0))};
}

const FamilySettings& family_settings(const ExperimentConfig& cfg, ProblemId id)
{
    return is_zdt(id) ? cfg.zdt : cfg.dtlz;
}

MoHaeaConfig run_config_for(const ExperimentConfig& cfg, ProblemId id,
                            OperatorSetVariant variant, std::uint64_t seed)
{
    const FamilySettings& fam = family_settings(cfg, id);
    MoHaeaConfig run;
    run.population_size = fam.population;
    run.max_evals = fam.max_evals;
    run.variant = variant;
    run.seed = seed;
    run.trace_every = 1;
    run.knn_space = cfg.knn_space;
    run.fitness_mode = cfg.fitness_mode;
    return run;
}

namespace {

std::string cell_name(ProblemId problem, OperatorSetVariant variant)
{
    return std::string(problem_name(problem)) + "_" + variant_name(variant);
}

std::string run_tag(ProblemId problem, OperatorSetVariant variant, int run)
{
    char buf[16];
    std::snprintf(buf, sizeof(buf), "_run%02d", run);
    return cell_name(problem, variant) + buf;
}

std::vector<std::string> rates_header(const std::vector<OperatorId>& ops)
{
    std::vector<std::string> header{"generation", "evals"};
    for (OperatorId op : ops)
        header.emplace_back(operator_name(op));
    return header;
}

void write_rates_csv(const fs::path& path, const RunRecord& rec)
{
    std::vector<std::vector<double>> rows;
    rows.reserve(rec.trace.size());
    for (const auto& tp : rec.trace) {
        std::vector<double> row{static_cast<double>(tp.generation),
                                static_cast<double>(tp.evals_used)};
        row.insert(row.end(), tp.mean_rates.begin(), tp.mean_rates.end());
        rows.push_back(std::move(row));
    }
    write_table_csv(path, rates_header(rec.operator_set), rows);
}

struct RunPaths {
    fs::path record;
    fs::path front;
    fs::path rates;
};

RunPaths run_paths(const fs::path& out, ProblemId problem, OperatorSetVariant variant, int run)
{
    const std::string tag = run_tag(problem, variant, run);
    return {out / "runs" / (tag + ".csv"),
            out / "runs" / (tag + "_front.csv"),
            out / "runs" / (tag + "_rates.csv")};
}

// Returns the recorded IGD when this (problem, variant, run) already
// completed with the expected seed; empty otherwise.
std::optional<double> load_completed_run(const RunPaths& paths, std::uint64_t seed)
{
    if (!fs::exists(paths.record) || !fs::exists(paths.front) || !fs::exists(paths.rates))
        return std::nullopt;
    try {
        std::vector<std::string> header;
        auto rows = read_table_csv(paths.record, &header);
        if (rows.size() != 1 || header != std::vector<std::string>{"igd", "evals", "generations", "seed"})
            return std::nullopt;
        if (static_cast<std::uint64_t>(rows[0][3]) != seed)
            return std::nullopt;
        return rows[0][0];
    } catch (const std::exception&) {
        return std::nullopt; // unreadable marker: recompute the run
    }
}

// Rate trajectories averaged across runs; generations past a shorter run's
// end use the runs that reached them.
void write_mean_rates(const fs::path& out, ProblemId problem, OperatorSetVariant variant, int runs)
{
    std::vector<std::string> header;
    std::vector<std::vector<double>> sums;
    std::vector<int> hits;
    for (int run = 0; run < runs; ++run) {
        const auto paths = run_paths(out, problem, variant, run);
        std::vector<std::string> h;
        auto rows = read_table_csv(paths.rates, &h);
        if (header.empty())
            header = h;
        else if (header != h)
            throw std::runtime_error("inconsistent rates schema in " + paths.rates.string());
        for (std::size_t g = 0; g < rows.size(); ++g) {
            if (g >= sums.size()) {
                sums.emplace_back(header.size(), 0.0);
                hits.push_back(0);
            }
            for (std::size_t c = 0; c < header.size(); ++c)
                sums[g][c] += rows[g][c];
            ++hits[g];
        }
    }
    for (std::size_t g = 0; g < sums.size(); ++g)
        for (double& v : sums[g])
            v /= hits[g];
    write_table_csv(out / "rates" / (cell_name(problem, variant) + "_mean.csv"), header, sums);
}

void write_summary_csv(const fs::path& path, const std::vector<SummaryRow>& rows)
{
    std::ofstream os(path);
    if (!os)
        throw std::runtime_error("cannot open for writing: " + path.string());
    os << "problem,variant,mean_igd,std_igd,best_igd,runs\n";
    for (const auto& r : rows) {
        os << problem_name(r.problem) << ',' << variant_name(r.variant) << ','
           << format_double(r.mean_igd) << ',' << format_double(r.std_igd) << ','
           << format_double(r.best_igd) << ',' << r.runs << '\n';
    }
}

void write_metadata(const fs::path& out, const ExperimentConfig& cfg,
                    const std::map<ProblemId, int>& ref_sizes)
{
    nlohmann::json meta;
    for (ProblemId id : cfg.problems)
        meta["problems"].push_back(problem_name(id));
    for (OperatorSetVariant v : cfg.variants)
        meta["variants"].push_back(variant_name(v));
    meta["runs"] = cfg.runs;
    meta["base_seed"] = cfg.base_seed;
    meta["zdt"] = {{"max_evals", cfg.zdt.max_evals}, {"population", cfg.zdt.population}};
    meta["dtlz"] = {{"max_evals", cfg.dtlz.max_evals}, {"population", cfg.dtlz.population}};
    meta["knn_space"] = cfg.knn_space == KnnSpace::Decision ? "decision" : "objective";
    meta["fitness_mode"] = cfg.fitness_mode == FitnessMode::DominancePenalty ? "penalty" : "pbi";
    for (const auto& [id, size] : ref_sizes)
        meta["reference_sizes"][problem_name(id)] = size;
    std::ofstream os(out / "metadata.json");
    os << meta.dump(2) << '\n';
}

} // namespace

std::vector<SummaryRow> run_experiment(const ExperimentConfig& cfg)
{
    if (cfg.runs < 1)
        throw std::invalid_argument("experiment needs runs >= 1");
    if (cfg.problems.empty() || cfg.variants.empty())
        throw std::invalid_argument("experiment needs at least one problem and one variant");

    const fs::path out = cfg.output_dir;
    fs::create_directories(out / "runs");
    fs::create_directories(out / "fronts");
    fs::create_directories(out / "rates");

    // reference fronts, shared read-only across workers
    std::map<ProblemId, int> ref_sizes;
    std::map<ProblemId, ParetoFrontSample> references;
    for (ProblemId id : cfg.problems) {
        if (references.count(id))
            continue;
        const int size = cfg.reference_size > 0 ? cfg.reference_size : default_reference_size(id);
        references.emplace(id, sample_true_pf(id, size));
        ref_sizes[id] = references.at(id).count;
    }

    struct Task {
        ProblemId problem;
        OperatorSetVariant variant;
        int run;
        std::size_t cell;
    };
    std::vector<Task> tasks;
    std::vector<CellResult> cells;
    for (ProblemId id : cfg.problems) {
        for (OperatorSetVariant v : cfg.variants) {
            const std::size_t cell = cells.size();
            cells.push_back(CellResult{id, v, std::vector<double>(cfg.runs, 0.0), 0});
            for (int run = 0; run < cfg.runs; ++run)
                tasks.push_back(Task{id, v, run, cell});
        }
    }

    std::atomic<std::size_t> cursor{0};
    std::mutex err_mutex;
    std::exception_ptr first_error;

    auto worker = [&]() {
        for (;;) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= tasks.size())
                return;
            const Task& task = tasks[i];
            try {
                const std::uint64_t seed = cfg.base_seed + static_cast<std::uint64_t>(task.run);
                const auto paths = run_paths(out, task.problem, task.variant, task.run);
                if (auto done = load_completed_run(paths, seed)) {
                    cells[task.cell].igd_per_run[task.run] = *done;
                    continue;
                }
                const MoHaeaConfig run_cfg = run_config_for(cfg, task.problem, task.variant, seed);
                const RunRecord rec = mohaea_run(task.problem, run_cfg);
                const IgdResult result = igd_of_population(rec.final_pop, references.at(task.problem));

                std::vector<ObjectiveVector> front;
                front.reserve(rec.final_pop.size());
                for (const auto& ind : rec.final_pop)
                    front.push_back(ind.objectives);
                write_objectives_csv(paths.front, front);
                write_rates_csv(paths.rates, rec);
                // the record marks completion, so it is written last
                write_table_csv(paths.record, {"igd", "evals", "generations", "seed"},
                                {{result.value, static_cast<double>(rec.evals_used),
                                  static_cast<double>(rec.generations), static_cast<double>(seed)}});
                cells[task.cell].igd_per_run[task.run] = result.value;
            } catch (...) {
                std::scoped_lock lock(err_mutex);
                if (!first_error)
                    first_error = std::current_exception();
                cursor.store(tasks.size()); // stop handing out work
                return;
            }
        }
    };

    unsigned n_threads = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads)
                                         : std::max(1u, std::thread::hardware_concurrency());
    n_threads = std::min<unsigned>(n_threads, tasks.size());
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < n_threads; ++w)
        pool.emplace_back(worker);
    worker();
    for (auto& th : pool)
        th.join();
    if (first_error)
        std::rethrow_exception(first_error);

    std::vector<SummaryRow> rows;
    for (auto& cell : cells) {
        auto [mean, stdev] = summarize(cell.igd_per_run);
        cell.best_run = static_cast<int>(std::min_element(cell.igd_per_run.begin(),
                                                          cell.igd_per_run.end()) -
                                         cell.igd_per_run.begin());
        SummaryRow row;
        row.problem = cell.problem;
        row.variant = cell.variant;
        row.mean_igd = mean;
        row.std_igd = stdev;
        row.best_igd = cell.igd_per_run[cell.best_run];
        row.runs = cfg.runs;
        rows.push_back(row);

        // best-run front and across-run mean rates always go through the
        // on-disk per-run files, so resumed batches emit identical bytes
        const auto best_paths = run_paths(out, cell.problem, cell.variant, cell.best_run);
        write_objectives_csv(out / "fronts" / (cell_name(cell.problem, cell.variant) + "_best.csv"),
                             read_objectives_csv(best_paths.front));
        write_mean_rates(out, cell.problem, cell.variant, cfg.runs);
    }
    write_summary_csv(out / "summary.csv", rows);
    write_metadata(out, cfg, ref_sizes);
    return rows;
}

ExperimentConfig load_experiment_config(const fs::path& path)
{
    std::ifstream is(path);
    if (!is)
        throw std::runtime_error("cannot open config: " + path.string());
    nlohmann::json j;
    try {
        is >> j;
    } catch (const std::exception& e) {
        throw std::runtime_error("malformed config " + path.string() + ": " + e.what());
    }

    static const std::vector<std::string> known{
        "problems", "variants", "runs", "base_seed", "output_dir", "zdt", "dtlz",
        "threads",  "reference_size", "knn_space", "fitness_mode"};
    for (const auto& [key, _] : j.items())
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw std::runtime_error("unknown config key: " + key);

    ExperimentConfig cfg;
    cfg.problems.clear();
    if (!j.contains("problems") || (j["problems"].is_string() && j["problems"] == "all")) {
        cfg.problems.assign(std::begin(kAllProblems), std::end(kAllProblems));
    } else {
        for (const auto& name : j["problems"])
            cfg.problems.push_back(problem_from_name(name.get<std::string>()));
    }
    if (j.contains("variants"))
        for (const auto& name : j["variants"])
            cfg.variants.push_back(variant_from_name(name.get<std::string>()));
    else
        cfg.variants = {OperatorSetVariant::Sm, OperatorSetVariant::Pm};

    cfg.runs = j.value("runs", cfg.runs);
    cfg.base_seed = j.value("base_seed", cfg.base_seed);
    cfg.output_dir = j.value("output_dir", cfg.output_dir.string());
    if (j.contains("zdt")) {
        cfg.zdt.max_evals = j["zdt"].value("max_evals", cfg.zdt.max_evals);
        cfg.zdt.population = j["zdt"].value("population", cfg.zdt.population);
    }
    if (j.contains("dtlz")) {
        cfg.dtlz.max_evals = j["dtlz"].value("max_evals", cfg.dtlz.max_evals);
        cfg.dtlz.population = j["dtlz"].value("population", cfg.dtlz.population);
    }
    cfg.threads = j.value("threads", cfg.threads);
    cfg.reference_size = j.value("reference_size", cfg.reference_size);
    if (j.contains("knn_space")) {
        const std::string s = j["knn_space"];
        if (s == "decision")
            cfg.knn_space = KnnSpace::Decision;
        else if (s == "objective")
            cfg.knn_space = KnnSpace::Objective;
        else
            throw std::runtime_error("unknown knn_space: " + s);
    }
    if (j.contains("fitness_mode")) {
        const std::string s = j["fitness_mode"];
        if (s == "penalty")
            cfg.fitness_mode = FitnessMode::DominancePenalty;
        else if (s == "pbi")
            cfg.fitness_mode = FitnessMode::ClassicalPbi;
        else
            throw std::runtime_error("unknown fitness_mode: " + s);
    }

    if (const char* env = std::getenv("MOHAEA_OUTPUT_DIR"); env && *env)
        cfg.output_dir = env;
    return cfg;
}

namespace {

void print_summary(const std::vector<SummaryRow>& rows)
{
    std::printf("%-8s %-8s %-14s %-14s %-14s %s\n", "problem", "variant", "mean_igd", "std_igd",
                "best_igd", "runs");
    for (const auto& r : rows)
        std::printf("%-8s %-8s %-14.6e %-14.6e %-14.6e %d\n", problem_name(r.problem),
                    variant_name(r.variant), r.mean_igd, r.std_igd, r.best_igd, r.runs);
}

} // namespace

int cli_dispatch(int argc, const char* const* argv)
{
    CLI::App app{"adaptive multi-objective evolutionary optimizer and benchmark harness"};
    app.require_subcommand(1);

    // run
    auto* run_cmd = app.add_subcommand("run", "single seeded optimization run");
    std::string run_problem, run_variant = "sm", run_knn = "decision", run_fitness = "penalty";
    std::uint64_t run_seed = 1;
    long run_evals = 0;
    int run_pop = 0, run_ref = 0;
    std::string run_front, run_rates, run_solutions;
    run_cmd->add_option("--problem", run_problem, "problem id (zdt1..zdt6, dtlz1..dtlz6)")->required();
    run_cmd->add_option("--variant", run_variant, "operator set: sm or pm");
    run_cmd->add_option("--seed", run_seed, "random seed");
    run_cmd->add_option("--evals", run_evals, "evaluation budget (default per family)");
    run_cmd->add_option("--pop", run_pop, "population size (default per family)");
    run_cmd->add_option("--front", run_front, "write final population objectives CSV here");
    run_cmd->add_option("--rates", run_rates, "write per-generation mean rates CSV here");
    run_cmd->add_option("--solutions", run_solutions, "write final decision vectors CSV here");
    run_cmd->add_option("--knn", run_knn, "niching space: decision or objective");
    run_cmd->add_option("--fitness", run_fitness, "fitness mode: penalty or pbi");
    run_cmd->add_option("--ref-count", run_ref, "IGD reference size (default per problem)");

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "full batch experiment from a JSON config");
    std::string bench_config;
    bench_cmd->add_option("--config", bench_config, "experiment config file")->required();

    // igd
    auto* igd_cmd = app.add_subcommand("igd", "IGD of a front CSV against the true front");
    std::string igd_problem, igd_input;
    int igd_count = 0;
    igd_cmd->add_option("--problem", igd_problem, "problem id")->required();
    igd_cmd->add_option("--input", igd_input, "front CSV (header f1,f2[,f3])")->required();
    igd_cmd->add_option("--count", igd_count, "reference sample size (default per problem)");

    // pf
    auto* pf_cmd = app.add_subcommand("pf", "sample the analytic Pareto front");
    std::string pf_problem, pf_out;
    int pf_count = 0;
    pf_cmd->add_option("--problem", pf_problem, "problem id")->required();
    pf_cmd->add_option("--count", pf_count, "number of points (default per problem)");
    pf_cmd->add_option("--out", pf_out, "output CSV (default stdout)");

    // lattice
    auto* lattice_cmd = app.add_subcommand("lattice", "dump a simplex direction lattice");
    lattice_cmd->set_help_flag("--help", "print help"); // frees -h for the divisions option
    int lat_m = 0, lat_h = 0;
    std::string lat_out;
    lattice_cmd->add_option("--m", lat_m, "objective count")->required();
    lattice_cmd->add_option("--h", lat_h, "divisions per axis")->required();
    lattice_cmd->add_option("--out", lat_out, "output CSV (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*run_cmd) {
            const ProblemId id = problem_from_name(run_problem);
            ExperimentConfig defaults;
            const FamilySettings& fam = family_settings(defaults, id);
            MoHaeaConfig cfg;
            cfg.population_size = run_pop > 0 ? run_pop : fam.population;
            cfg.max_evals = run_evals > 0 ? run_evals : fam.max_evals;
            cfg.variant = variant_from_name(run_variant);
            cfg.seed = run_seed;
            if (run_knn == "decision")
                cfg.knn_space = KnnSpace::Decision;
            else if (run_knn == "objective")
                cfg.knn_space = KnnSpace::Objective;
            else
                throw std::invalid_argument("unknown niching space: " + run_knn);
            if (run_fitness == "penalty")
                cfg.fitness_mode = FitnessMode::DominancePenalty;
            else if (run_fitness == "pbi")
                cfg.fitness_mode = FitnessMode::ClassicalPbi;
            else
                throw std::invalid_argument("unknown fitness mode: " + run_fitness);

            const RunRecord rec = mohaea_run(id, cfg);
            const int ref = run_ref > 0 ? run_ref : default_reference_size(id);
            const IgdResult result = igd_of_population(rec.final_pop, sample_true_pf(id, ref));
            if (!run_front.empty()) {
                std::vector<ObjectiveVector> front;
                for (const auto& ind : rec.final_pop)
                    front.push_back(ind.objectives);
                write_objectives_csv(fs::path(run_front), front);
            }
            if (!run_rates.empty())
                write_rates_csv(run_rates, rec);
            if (!run_solutions.empty()) {
                const int n_vars = static_cast<int>(rec.final_pop.front().x.size());
                std::vector<std::string> header;
                for (int i = 1; i <= n_vars; ++i)
                    header.push_back("x" + std::to_string(i));
                std::vector<std::vector<double>> rows;
                for (const auto& ind : rec.final_pop)
                    rows.push_back(ind.x);
                write_table_csv(run_solutions, header, rows);
            }
            std::printf("problem=%s variant=%s seed=%llu evals=%ld generations=%d igd=%.6e (ref %d)\n",
                        problem_name(id), variant_name(cfg.variant),
                        static_cast<unsigned long long>(run_seed), rec.evals_used, rec.generations,
                        result.value, result.reference_size);
        } else if (*bench_cmd) {
            const ExperimentConfig cfg = load_experiment_config(bench_config);
            const auto rows = run_experiment(cfg);
            print_summary(rows);
            std::printf("outputs in %s\n", cfg.output_dir.string().c_str());
        } else if (*igd_cmd) {
            const ProblemId id = problem_from_name(igd_problem);
            const auto front = read_objectives_csv(igd_input);
            const int count = igd_count > 0 ? igd_count : default_reference_size(id);
            const IgdResult result = igd(sample_true_pf(id, count), front);
            std::printf("%s\n", format_double(result.value).c_str());
        } else if (*pf_cmd) {
            const ProblemId id = problem_from_name(pf_problem);
            const int count = pf_count > 0 ? pf_count : default_reference_size(id);
            const auto sample = sample_true_pf(id, count);
            if (pf_out.empty())
                write_objectives_csv(std::cout, sample.points);
            else
                write_objectives_csv(fs::path(pf_out), sample.points);
        } else if (*lattice_cmd) {
            const ReferenceLattice lattice = das_dennis(lat_m, lat_h);
            std::vector<std::string> header;
            for (int i = 1; i <= lat_m; ++i)
                header.push_back("w" + std::to_string(i));
            std::vector<std::vector<double>> rows;
            for (const auto& dir : lattice.directions)
                rows.push_back(dir.weights);
            if (lat_out.empty()) {
                for (std::size_t i = 0; i < header.size(); ++i)
                    std::cout << (i ? "," : "") << header[i];
                std::cout << '\n';
                for (const auto& row : rows) {
                    for (std::size_t i = 0; i < row.size(); ++i)
                        std::cout << (i ? "," : "") << format_double(row[i]);
                    std::cout << '\n';
                }
            } else {
                write_table_csv(lat_out, header, rows);
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace mohaea
