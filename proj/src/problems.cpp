#include "mohaea/problems.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mohaea {

namespace {

constexpr double kPi = std::numbers::pi;

// Lower end of the achievable f1 range on the ZDT6 front.
constexpr double kZdt6F1Min = 0.2807753191;

double zdt_g(const DecisionVector& x)
{
    double s = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i)
        s += x[i];
    return 1.0 + 9.0 * s / (static_cast<double>(x.size()) - 1.0);
}

// Rastrigin-style distance function shared by DTLZ1 and DTLZ3.
double dtlz_multimodal_g(const DecisionVector& x, int k)
{
    double s = 0.0;
    for (std::size_t i = x.size() - k; i < x.size(); ++i) {
        double z = x[i] - 0.5;
        s += z * z - std::cos(20.0 * kPi * z);
    }
    return 100.0 * (k + s);
}

double dtlz_sphere_g(const DecisionVector& x, int k)
{
    double s = 0.0;
    for (std::size_t i = x.size() - k; i < x.size(); ++i) {
        double z = x[i] - 0.5;
        s += z * z;
    }
    return s;
}

// DTLZ2-style objective shape on spherical angles theta (size m-1).
ObjectiveVector sphere_shape(const std::vector<double>& theta, double g)
{
    const int m = static_cast<int>(theta.size()) + 1;
    ObjectiveVector f(m);
    for (int j = 0; j < m; ++j) {
        double v = 1.0 + g;
        for (int i = 0; i < m - 1 - j; ++i)
            v *= std::cos(theta[i]);
        if (j > 0)
            v *= std::sin(theta[m - 1 - j]);
        f[j] = v;
    }
    return f;
}

std::vector<double> linspace(double lo, double hi, int count)
{
    std::vector<double> v(count);
    for (int i = 0; i < count; ++i)
        v[i] = lo + (hi - lo) * static_cast<double>(i) / (count - 1);
    return v;
}

double norm2(const ObjectiveVector& f)
{
    double s = 0.0;
    for (double v : f)
        s += v * v;
    return std::sqrt(s);
}

} // namespace

const char* problem_name(ProblemId id)
{
    switch (id) {
    case ProblemId::Zdt1: return "zdt1";
    case ProblemId::Zdt2: return "zdt2";
    case ProblemId::Zdt3: return "zdt3";
    case ProblemId::Zdt4: return "zdt4";
    case ProblemId::Zdt6: return "zdt6";
    case ProblemId::Dtlz1: return "dtlz1";
    case ProblemId::Dtlz2: return "dtlz2";
    case ProblemId::Dtlz3: return "dtlz3";
    case ProblemId::Dtlz4: return "dtlz4";
    case ProblemId::Dtlz6: return "dtlz6";
    }
    return "?";
}

ProblemId problem_from_name(const std::string& name)
{
    std::string low(name);
    std::transform(low.begin(), low.end(), low.begin(), [](unsigned char c) { return std::tolower(c); });
    for (ProblemId id : kAllProblems)
        if (low == problem_name(id))
            return id;
    throw std::invalid_argument("unknown problem: " + name);
}

bool is_zdt(ProblemId id)
{
    switch (id) {
    case ProblemId::Zdt1:
    case ProblemId::Zdt2:
    case ProblemId::Zdt3:
    case ProblemId::Zdt4:
    case ProblemId::Zdt6:
        return true;
    default:
        return false;
    }
}

int objective_count(ProblemId id)
{
    return is_zdt(id) ? 2 : 3;
}

ProblemSpec make_problem(ProblemId id, int n_override)
{
    ProblemSpec spec;
    spec.id = problem_name(id);
    spec.m = objective_count(id);

    switch (id) {
    case ProblemId::Zdt1:
    case ProblemId::Zdt2:
    case ProblemId::Zdt3:
        spec.n = 30;
        break;
    case ProblemId::Zdt4:
    case ProblemId::Zdt6:
        spec.n = 10;
        break;
    case ProblemId::Dtlz1:
        spec.n = 7; // m + k - 1 with k = 5
        break;
    default:
        spec.n = 12; // m + k - 1 with k = 10
        break;
    }
    if (n_override > 0)
        spec.n = n_override;
    if (spec.n <= spec.m)
        throw std::invalid_argument("variable count too small for " + spec.id);

    spec.lower.assign(spec.n, 0.0);
    spec.upper.assign(spec.n, 1.0);
    if (id == ProblemId::Zdt4) {
        for (int i = 1; i < spec.n; ++i) {
            spec.lower[i] = -5.0;
            spec.upper[i] = 5.0;
        }
    }

    const int k = spec.n - spec.m + 1; // DTLZ distance-variable count

    switch (id) {
    case ProblemId::Zdt1:
        spec.evaluator = [](const DecisionVector& x) {
            double g = zdt_g(x);
            return ObjectiveVector{x[0], g * (1.0 - std::sqrt(x[0] / g))};
        };
        break;
    case ProblemId::Zdt2:
        spec.evaluator = [](const DecisionVector& x) {
            double g = zdt_g(x);
            double r = x[0] / g;
            return ObjectiveVector{x[0], g * (1.0 - r * r)};
        };
        break;
    case ProblemId::Zdt3:
        spec.evaluator = [](const DecisionVector& x) {
            double g = zdt_g(x);
            double r = x[0] / g;
            return ObjectiveVector{x[0], g * (1.0 - std::sqrt(r) - r * std::sin(10.0 * kPi * x[0]))};
        };
        break;
    case ProblemId::Zdt4:
        spec.evaluator = [](const DecisionVector& x) {
            double g = 1.0 + 10.0 * (static_cast<double>(x.size()) - 1.0);
            for (std::size_t i = 1; i < x.size(); ++i)
                g += x[i] * x[i] - 10.0 * std::cos(4.0 * kPi * x[i]);
            return ObjectiveVector{x[0], g * (1.0 - std::sqrt(x[0] / g))};
        };
        break;
    case ProblemId::Zdt6:
        spec.evaluator = [](const DecisionVector& x) {
            double f1 = 1.0 - std::exp(-4.0 * x[0]) * std::pow(std::sin(6.0 * kPi * x[0]), 6.0);
            double s = 0.0;
            for (std::size_t i = 1; i < x.size(); ++i)
                s += x[i];
            double g = 1.0 + 9.0 * std::pow(s / (static_cast<double>(x.size()) - 1.0), 0.25);
            double r = f1 / g;
            return ObjectiveVector{f1, g * (1.0 - r * r)};
        };
        break;
    case ProblemId::Dtlz1:
        spec.evaluator = [k](const DecisionVector& x) {
            double g = dtlz_multimodal_g(x, k);
            double half = 0.5 * (1.0 + g);
            return ObjectiveVector{
                half * x[0] * x[1],
                half * x[0] * (1.0 - x[1]),
                half * (1.0 - x[0]),
            };
        };
        break;
    case ProblemId::Dtlz2:
        spec.evaluator = [k](const DecisionVector& x) {
            double g = dtlz_sphere_g(x, k);
            return sphere_shape({x[0] * kPi / 2.0, x[1] * kPi / 2.0}, g);
        };
        break;
    case ProblemId::Dtlz3:
        spec.evaluator = [k](const DecisionVector& x) {
            double g = dtlz_multimodal_g(x, k);
            return sphere_shape({x[0] * kPi / 2.0, x[1] * kPi / 2.0}, g);
        };
        break;
    case ProblemId::Dtlz4:
        spec.evaluator = [k](const DecisionVector& x) {
            constexpr double alpha = 100.0;
            double g = dtlz_sphere_g(x, k);
            return sphere_shape({std::pow(x[0], alpha) * kPi / 2.0,
                                 std::pow(x[1], alpha) * kPi / 2.0},
                                g);
        };
        break;
    case ProblemId::Dtlz6:
        // the disconnected instance (2^(m-1) front patches); conference-paper
        // numbering, where it is the last of the suite
        spec.evaluator = [k](const DecisionVector& x) {
            const int m = 3;
            double g = 0.0;
            for (std::size_t i = x.size() - k; i < x.size(); ++i)
                g += x[i];
            g = 1.0 + 9.0 * g / k;
            double h = m;
            for (int i = 0; i < m - 1; ++i)
                h -= x[i] / (1.0 + g) * (1.0 + std::sin(3.0 * kPi * x[i]));
            return ObjectiveVector{x[0], x[1], (1.0 + g) * h};
        };
        break;
    }
    return spec;
}

namespace {

ParetoFrontSample curve_sample(ProblemId id, int count,
                               const std::function<double(double)>& f2_of_f1,
                               double f1_lo = 0.0, double f1_hi = 1.0)
{
    ParetoFrontSample sample;
    sample.problem = id;
    for (double f1 : linspace(f1_lo, f1_hi, count))
        sample.points.push_back({f1, f2_of_f1(f1)});
    sample.count = static_cast<int>(sample.points.size());
    return sample;
}

double zdt3_curve(double f1)
{
    return 1.0 - std::sqrt(f1) - f1 * std::sin(10.0 * kPi * f1);
}

// last objective of the disconnected instance at g = 1 (its front surface)
double dtlz6_front_f3(double f1, double f2)
{
    double h = 3.0;
    h -= f1 / 2.0 * (1.0 + std::sin(3.0 * kPi * f1));
    h -= f2 / 2.0 * (1.0 + std::sin(3.0 * kPi * f2));
    return 2.0 * h;
}

// The ZDT3 front is five disjoint arcs: oversample the curve, keep the
// nondominated part, then thin evenly to the requested count.
ParetoFrontSample zdt3_sample(int count)
{
    ParetoFrontSample sample;
    sample.problem = ProblemId::Zdt3;
    int oversample = 10 * count;
    std::vector<ObjectiveVector> kept;
    for (;;) {
        std::vector<ObjectiveVector> grid;
        grid.reserve(oversample);
        for (double f1 : linspace(0.0, 1.0, oversample))
            grid.push_back({f1, zdt3_curve(f1)});
        kept = nondominated_filter(grid);
        if (static_cast<int>(kept.size()) >= count)
            break;
        oversample *= 2;
    }
    const int kept_size = static_cast<int>(kept.size());
    for (int i = 0; i < count; ++i) {
        int idx = count == 1 ? 0
                             : static_cast<int>(static_cast<long long>(i) * (kept_size - 1) / (count - 1));
        sample.points.push_back(kept[idx]);
    }
    sample.count = static_cast<int>(sample.points.size());
    return sample;
}

// Densest simplex lattice with at most `count` directions.
ReferenceLattice lattice_within(int m, int count)
{
    int h = 1;
    while (lattice_size(m, h + 1) <= count)
        ++h;
    return das_dennis(m, h);
}

} // namespace

ParetoFrontSample sample_true_pf(ProblemId id, int count)
{
    if (count < 2)
        throw std::invalid_argument("front sample needs count >= 2");
    switch (id) {
    case ProblemId::Zdt1:
    case ProblemId::Zdt4:
        return curve_sample(id, count, [](double f1) { return 1.0 - std::sqrt(f1); });
    case ProblemId::Zdt2:
        return curve_sample(id, count, [](double f1) { return 1.0 - f1 * f1; });
    case ProblemId::Zdt6:
        return curve_sample(id, count, [](double f1) { return 1.0 - f1 * f1; }, kZdt6F1Min, 1.0);
    case ProblemId::Zdt3:
        return zdt3_sample(count);
    case ProblemId::Dtlz1: {
        ParetoFrontSample sample;
        sample.problem = id;
        for (const auto& dir : lattice_within(3, count).directions) {
            ObjectiveVector f(dir.weights);
            for (double& v : f)
                v *= 0.5;
            sample.points.push_back(std::move(f));
        }
        sample.count = static_cast<int>(sample.points.size());
        return sample;
    }
    case ProblemId::Dtlz2:
    case ProblemId::Dtlz3:
    case ProblemId::Dtlz4: {
        ParetoFrontSample sample;
        sample.problem = id;
        for (const auto& dir : lattice_within(3, count).directions) {
            ObjectiveVector f(dir.weights);
            double norm = norm2(f);
            for (double& v : f)
                v /= norm;
            sample.points.push_back(std::move(f));
        }
        sample.count = static_cast<int>(sample.points.size());
        return sample;
    }
    case ProblemId::Dtlz6: {
        // four disjoint patches: oversample the g=1 surface on a grid, keep
        // the nondominated part, thin evenly to the requested count
        ParetoFrontSample sample;
        sample.problem = id;
        int side = static_cast<int>(std::ceil(std::sqrt(12.0 * count)));
        std::vector<ObjectiveVector> kept;
        for (;;) {
            std::vector<ObjectiveVector> grid;
            grid.reserve(static_cast<std::size_t>(side) * side);
            for (double f1 : linspace(0.0, 1.0, side))
                for (double f2 : linspace(0.0, 1.0, side))
                    grid.push_back({f1, f2, dtlz6_front_f3(f1, f2)});
            kept = nondominated_filter(grid);
            if (static_cast<int>(kept.size()) >= count)
                break;
            side *= 2;
        }
        const int kept_size = static_cast<int>(kept.size());
        for (int i = 0; i < count; ++i) {
            int idx = count == 1 ? 0
                                 : static_cast<int>(static_cast<long long>(i) * (kept_size - 1) /
                                                    (count - 1));
            sample.points.push_back(kept[idx]);
        }
        sample.count = static_cast<int>(sample.points.size());
        return sample;
    }
    }
    throw std::invalid_argument("unknown problem id");
}

double pf_residual(ProblemId id, const ObjectiveVector& f)
{
    if (static_cast<int>(f.size()) != objective_count(id))
        throw std::invalid_argument("objective count mismatch for " + std::string(problem_name(id)));
    switch (id) {
    case ProblemId::Zdt1:
    case ProblemId::Zdt4:
        return std::abs(f[1] - (1.0 - std::sqrt(std::max(f[0], 0.0))));
    case ProblemId::Zdt2:
    case ProblemId::Zdt6:
        return std::abs(f[1] - (1.0 - f[0] * f[0]));
    case ProblemId::Zdt3:
        return std::abs(f[1] - zdt3_curve(std::max(f[0], 0.0)));
    case ProblemId::Dtlz1: {
        double s = f[0] + f[1] + f[2];
        return std::abs(s - 0.5);
    }
    case ProblemId::Dtlz2:
    case ProblemId::Dtlz3:
    case ProblemId::Dtlz4:
        return std::abs(norm2(f) - 1.0);
    case ProblemId::Dtlz6:
        // surface membership at g = 1 (dominated patches included, as for ZDT3)
        return std::abs(f[2] - dtlz6_front_f3(f[0], f[1]));
    }
    throw std::invalid_argument("unknown problem id");
}

} // namespace mohaea
