#ifndef MOHAEA_OPERATORS_HPP
#define MOHAEA_OPERATORS_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mohaea/rng.hpp"

namespace mohaea {

// Variation operators available to the adaptive engine.
//   Sbx — simulated binary crossover (binary)
//   Pm  — polynomial mutation (unary)
//   Sm  — shrink (Gaussian) mutation (unary)
//   Uu  — uniform crossover followed by uniform mutation (binary)
enum class OperatorId { Sbx, Pm, Sm, Uu };

constexpr int operator_arity(OperatorId op)
{
    return (op == OperatorId::Sbx || op == OperatorId::Uu) ? 2 : 1;
}

const char* operator_name(OperatorId op); // "SBX", "PM", "SM", "UU"
OperatorId operator_from_name(const std::string& name);

struct OperatorConfig {
    double sbx_eta = 20.0;
    double pm_eta = 20.0;
    double crossover_rate = 1.0;
    double mutation_rate = -1.0;    // < 0 means "use 1/n", resolved by resolve_defaults
    double sm_sigma_divisor = 20.0; // per-gene sigma = (upper - lower) / divisor
    double uu_gene_rate = -1.0;     // < 0 means "use 1/n"
};

// Fill the 1/n-dependent defaults for an n-variable problem.
OperatorConfig resolve_defaults(OperatorConfig cfg, int n_variables);

// Per-individual operator selection probabilities over a fixed operator set.
// Probabilities are kept normalized (sum 1) and floored at kMinRate so that a
// repeatedly punished operator never collapses to exactly zero.
struct OperatorRates {
    std::vector<OperatorId> ops;
    std::vector<double> p;

    static constexpr double kMinRate = 1e-12;

    double rate_of(OperatorId op) const;
    bool is_normalized(double tol = 1e-9) const;
    void normalize();
};

// Each rate drawn U[0,1], then normalized.
OperatorRates init_rates(std::span<const OperatorId> ops, Rng& rng);

// Roulette selection proportional to the encoded rates.
OperatorId choose_operator(const OperatorRates& rates, Rng& rng);

// Multiply the applied operator's rate by (1+delta) on improvement and by
// (1-delta) otherwise, then renormalize.
OperatorRates reward_punish(OperatorRates rates, OperatorId op, bool improved, double delta);

// Variation operators. All outputs are clamped to [lower, upper].
std::pair<std::vector<double>, std::vector<double>>
sbx_crossover(const std::vector<double>& p1, const std::vector<double>& p2,
              std::span<const double> lower, std::span<const double> upper,
              const OperatorConfig& cfg, Rng& rng);

std::vector<double>
polynomial_mutation(const std::vector<double>& p,
                    std::span<const double> lower, std::span<const double> upper,
                    const OperatorConfig& cfg, Rng& rng);

std::vector<double>
shrink_mutation(const std::vector<double>& p,
                std::span<const double> lower, std::span<const double> upper,
                const OperatorConfig& cfg, Rng& rng);

std::pair<std::vector<double>, std::vector<double>>
uniform_uniform(const std::vector<double>& p1, const std::vector<double>& p2,
                std::span<const double> lower, std::span<const double> upper,
                const OperatorConfig& cfg, Rng& rng);

} // namespace mohaea

#endif
