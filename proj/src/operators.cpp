#include "mohaea/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mohaea {

namespace {

double clamp_to(double v, double lo, double hi)
{
    return std::min(std::max(v, lo), hi);
}

// Parents closer than this are copied unchanged by SBX.
constexpr double kSbxEps = 1e-14;

} // namespace

const char* operator_name(OperatorId op)
{
    switch (op) {
    case OperatorId::Sbx: return "SBX";
    case OperatorId::Pm: return "PM";
    case OperatorId::Sm: return "SM";
    case OperatorId::Uu: return "UU";
    }
    return "?";
}

OperatorId operator_from_name(const std::string& name)
{
    std::string up(name);
    std::transform(up.begin(), up.end(), up.begin(), [](unsigned char c) { return std::toupper(c); });
    if (up == "SBX") return OperatorId::Sbx;
    if (up == "PM") return OperatorId::Pm;
    if (up == "SM") return OperatorId::Sm;
    if (up == "UU" || up == "U&U") return OperatorId::Uu;
    throw std::invalid_argument("unknown operator: " + name);
}

OperatorConfig resolve_defaults(OperatorConfig cfg, int n_variables)
{
    if (n_variables <= 0)
        throw std::invalid_argument("operator config needs a positive variable count");
    if (cfg.mutation_rate < 0.0)
        cfg.mutation_rate = 1.0 / n_variables;
    if (cfg.uu_gene_rate < 0.0)
        cfg.uu_gene_rate = 1.0 / n_variables;
    return cfg;
}

double OperatorRates::rate_of(OperatorId op) const
{
    for (std::size_t i = 0; i < ops.size(); ++i)
        if (ops[i] == op)
            return p[i];
    throw std::invalid_argument(std::string("operator not in active set: ") + operator_name(op));
}

bool OperatorRates::is_normalized(double tol) const
{
    double sum = std::accumulate(p.begin(), p.end(), 0.0);
    if (std::abs(sum - 1.0) > tol)
        return false;
    return std::all_of(p.begin(), p.end(), [](double v) { return v >= 0.0; });
}

void OperatorRates::normalize()
{
    if (p.empty())
        throw std::invalid_argument("empty rate vector");
    double sum = 0.0;
    bool floored = true;
    for (double v : p) {
        if (v < 0.0)
            throw std::invalid_argument("negative operator rate");
        floored = floored && v >= kMinRate;
        sum += v;
    }
    if (sum <= 0.0)
        throw std::invalid_argument("all-zero operator rates");
    if (floored && std::abs(sum - 1.0) <= 1e-15)
        return; // already normalized to machine precision: keep bits stable
    for (double& v : p)
        v = std::max(v / sum, kMinRate);
    // flooring perturbs the sum by at most ops*kMinRate; rescale once more
    sum = std::accumulate(p.begin(), p.end(), 0.0);
    for (double& v : p)
        v /= sum;
}

OperatorRates init_rates(std::span<const OperatorId> ops, Rng& rng)
{
    if (ops.empty())
        throw std::invalid_argument("empty operator set");
    OperatorRates rates;
    rates.ops.assign(ops.begin(), ops.end());
    rates.p.resize(ops.size());
    do {
        for (double& v : rates.p)
            v = uniform01(rng);
    } while (std::accumulate(rates.p.begin(), rates.p.end(), 0.0) <= 0.0);
    rates.normalize();
    return rates;
}

OperatorId choose_operator(const OperatorRates& rates, Rng& rng)
{
    double sum = std::accumulate(rates.p.begin(), rates.p.end(), 0.0);
    if (sum <= 0.0)
        throw std::invalid_argument("cannot select from all-zero rates");
    double target = uniform01(rng) * sum;
    double acc = 0.0;
    for (std::size_t i = 0; i < rates.ops.size(); ++i) {
        acc += rates.p[i];
        if (target < acc)
            return rates.ops[i];
    }
    return rates.ops.back();
}

OperatorRates reward_punish(OperatorRates rates, OperatorId op, bool improved, double delta)
{
    if (delta < 0.0 || delta > 1.0)
        throw std::invalid_argument("learning rate outside [0,1]");
    bool found = false;
    for (std::size_t i = 0; i < rates.ops.size(); ++i) {
        if (rates.ops[i] == op) {
            rates.p[i] *= improved ? (1.0 + delta) : (1.0 - delta);
            found = true;
            break;
        }
    }
    if (!found)
        throw std::invalid_argument(std::string("operator not in active set: ") + operator_name(op));
    rates.normalize();
    return rates;
}

std::pair<std::vector<double>, std::vector<double>>
sbx_crossover(const std::vector<double>& p1, const std::vector<double>& p2,
              std::span<const double> lower, std::span<const double> upper,
              const OperatorConfig& cfg, Rng& rng)
{
    if (p1.size() != p2.size() || p1.size() != lower.size() || p1.size() != upper.size())
        throw std::invalid_argument("sbx: mismatched vector lengths");

    std::vector<double> c1 = p1;
    std::vector<double> c2 = p2;
    if (uniform01(rng) >= cfg.crossover_rate) // draws lie in [0,1): rate 1 always fires
        return {std::move(c1), std::move(c2)};

    const double eta = cfg.sbx_eta;
    for (std::size_t i = 0; i < p1.size(); ++i) {
        if (uniform01(rng) > 0.5)
            continue;
        double y1 = std::min(p1[i], p2[i]);
        double y2 = std::max(p1[i], p2[i]);
        if (y2 - y1 <= kSbxEps)
            continue;
        const double yl = lower[i];
        const double yu = upper[i];
        const double u = uniform01(rng);

        auto spread = [&](double beta) {
            double alpha = 2.0 - std::pow(beta, -(eta + 1.0));
            if (u <= 1.0 / alpha)
                return std::pow(u * alpha, 1.0 / (eta + 1.0));
            return std::pow(1.0 / (2.0 - u * alpha), 1.0 / (eta + 1.0));
        };

        double betaq = spread(1.0 + 2.0 * (y1 - yl) / (y2 - y1));
        double a = 0.5 * ((y1 + y2) - betaq * (y2 - y1));
        betaq = spread(1.0 + 2.0 * (yu - y2) / (y2 - y1));
        double b = 0.5 * ((y1 + y2) + betaq * (y2 - y1));

        a = clamp_to(a, yl, yu);
        b = clamp_to(b, yl, yu);
        if (uniform01(rng) <= 0.5)
            std::swap(a, b);
        c1[i] = a;
        c2[i] = b;
    }
    return {std::move(c1), std::move(c2)};
}

std::vector<double>
polynomial_mutation(const std::vector<double>& p,
                    std::span<const double> lower, std::span<const double> upper,
                    const OperatorConfig& cfg, Rng& rng)
{
    if (p.size() != lower.size() || p.size() != upper.size())
        throw std::invalid_argument("pm: mismatched vector lengths");
    std::vector<double> c = p;
    const double eta = cfg.pm_eta;
    const double mut_pow = 1.0 / (eta + 1.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (uniform01(rng) >= cfg.mutation_rate)
            continue;
        const double yl = lower[i];
        const double yu = upper[i];
        const double span = yu - yl;
        const double y = c[i];
        const double u = uniform01(rng);
        double deltaq;
        if (u <= 0.5) {
            double xy = 1.0 - (y - yl) / span;
            double val = 2.0 * u + (1.0 - 2.0 * u) * std::pow(xy, eta + 1.0);
            deltaq = std::pow(val, mut_pow) - 1.0;
        } else {
            double xy = 1.0 - (yu - y) / span;
            double val = 2.0 * (1.0 - u) + 2.0 * (u - 0.5) * std::pow(xy, eta + 1.0);
            deltaq = 1.0 - std::pow(val, mut_pow);
        }
        c[i] = clamp_to(y + deltaq * span, yl, yu);
    }
    return c;
}

std::vector<double>
shrink_mutation(const std::vector<double>& p,
                std::span<const double> lower, std::span<const double> upper,
                const OperatorConfig& cfg, Rng& rng)
{
    if (p.size() != lower.size() || p.size() != upper.size())
        throw std::invalid_argument("sm: mismatched vector lengths");
    std::vector<double> c = p;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (uniform01(rng) >= cfg.mutation_rate)
            continue;
        const double sigma = (upper[i] - lower[i]) / cfg.sm_sigma_divisor;
        const double step = std::normal_distribution<double>(0.0, sigma)(rng);
        c[i] = clamp_to(c[i] + step, lower[i], upper[i]);
    }
    return c;
}

std::pair<std::vector<double>, std::vector<double>>
uniform_uniform(const std::vector<double>& p1, const std::vector<double>& p2,
                std::span<const double> lower, std::span<const double> upper,
                const OperatorConfig& cfg, Rng& rng)
{
    if (p1.size() != p2.size() || p1.size() != lower.size() || p1.size() != upper.size())
        throw std::invalid_argument("uu: mismatched vector lengths");
    std::vector<double> c1 = p1;
    std::vector<double> c2 = p2;
    for (std::size_t i = 0; i < c1.size(); ++i) {
        if (uniform01(rng) <= 0.5)
            std::swap(c1[i], c2[i]);
    }
    for (auto* child : {&c1, &c2}) {
        for (std::size_t i = 0; i < child->size(); ++i) {
            if (uniform01(rng) < cfg.uu_gene_rate)
                (*child)[i] = uniform(rng, lower[i], upper[i]);
        }
    }
    return {std::move(c1), std::move(c2)};
}

} // namespace mohaea
