#ifndef MOHAEA_PROBLEMS_HPP
#define MOHAEA_PROBLEMS_HPP

#include <string>
#include <vector>

#include "mohaea/core.hpp"

namespace mohaea {

enum class ProblemId {
    Zdt1, Zdt2, Zdt3, Zdt4, Zdt6,
    Dtlz1, Dtlz2, Dtlz3, Dtlz4, Dtlz6,
};

constexpr ProblemId kAllProblems[] = {
    ProblemId::Zdt1, ProblemId::Zdt2, ProblemId::Zdt3, ProblemId::Zdt4, ProblemId::Zdt6,
    ProblemId::Dtlz1, ProblemId::Dtlz2, ProblemId::Dtlz3, ProblemId::Dtlz4, ProblemId::Dtlz6,
};

const char* problem_name(ProblemId id);                 // lowercase, e.g. "zdt1"
ProblemId problem_from_name(const std::string& name);   // case-insensitive; throws on unknown id

bool is_zdt(ProblemId id);
int objective_count(ProblemId id); // 2 for ZDT, 3 for DTLZ

// Canonical instance: ZDT1-3 n=30, ZDT4/ZDT6 n=10 (ZDT4 with x2..xn in
// [-5,5]), DTLZ1 n=7, DTLZ2-4/DTLZ6 n=12. Pass n_override > 0 to change the
// variable count for sensitivity studies.
ProblemSpec make_problem(ProblemId id, int n_override = 0);

// An analytic sample of a problem's true Pareto front, used as the IGD
// reference set.
struct ParetoFrontSample {
    std::vector<ObjectiveVector> points;
    ProblemId problem;
    int count = 0; // == points.size()
};

// Evenly spread points on the analytic front. ZDT and DTLZ6 samplers return
// exactly `count` points (the disconnected fronts are oversampled, filtered
// and thinned); DTLZ1-4 use the densest simplex lattice with at most `count`
// directions, so their result size is the nearest exact lattice size below
// or equal to the request.
ParetoFrontSample sample_true_pf(ProblemId id, int count);

// |front-defining-equation residual| at f; 0 means f lies on the analytic
// front surface (for ZDT3 this is curve membership, ignoring dominated arcs).
double pf_residual(ProblemId id, const ObjectiveVector& f);

} // namespace mohaea

#endif
