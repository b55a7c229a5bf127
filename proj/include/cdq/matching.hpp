#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cdq/expand.hpp"
#include "cdq/model.hpp"
#include "cdq/optimize.hpp"
#include "cdq/schedule.hpp"

namespace cdq {

struct ClosedFormStep {
    double tau, gamma, beta;
};

// Lowest-order matching: tau = -2(s + ldot*alpha)/(lbar(1-lbar)),
// gamma = tau*lbar, beta = tau*(1-lbar). Throws numeric_error when the
// drive term is nonnegative (no matching solution) and validation_error at
// the lambda endpoints.
ClosedFormStep closed_form_step(double lbar, double lambda_dot, double sbar, double abar);

struct AngleSet {
    int p = 0;
    std::vector<double> gammas, betas, taus, step_errors;
    double equivalent_T = 0.0;   // sum of taus
};

struct StepValidity {
    bool bch_ok = true;
    bool magnus_ok = true;
};

enum class MatchDirection { Forward, Reverse };

struct MatchReport {
    AngleSet angles;
    Schedule schedule;
    MatchDirection direction = MatchDirection::Forward;
    std::vector<StepValidity> validity;
    double total_error = 0.0;
    std::pair<int, int> orders{4, 3};
    bool divergence_warning = false;    // some step error above the ceiling
    bool nonsmooth_warning = false;     // reverse input had a large angle jump
    bool monotone_clamped = false;      // reverse lambda fit needed clamping
    std::string note;
};

struct MatcherConfig {
    std::pair<int, int> orders{4, 3};      // BCH, Magnus
    double t_lo = 0.1, t_hi = 200.0;       // outer bisection bracket
    double t_rel_tol = 1e-3;
    int simplex_max_eval = 500;
    double simplex_tol = 1e-9;
    double error_ceiling = 1.0;            // divergence warning threshold
    double tau_overshoot_cap = 4.0;        // trial tau <= cap * remaining
    double nonsmooth_jump = 0.5;           // reverse smoothness threshold
};

// Forward map: (schedule shape, p) -> angles and equivalent T.
MatchReport derive_angles(const ProblemInstance& inst, const Schedule& shape, int p,
                          const MatcherConfig& cfg = {});
MatchReport derive_angles(const ProblemInstance& inst, const Schedule& shape, int p,
                          const AlphaFn& alpha, const MatcherConfig& cfg);

// Reverse map: angles -> (lambda(t), s(t), T) via first-order piecewise
// matching with the CD contribution subtracted from s.
MatchReport reverse_protocol(const ProblemInstance& inst, const std::vector<double>& gammas,
                             const std::vector<double>& betas, const MatcherConfig& cfg = {});

// Perturbative validity of one matched step.
StepValidity validity_check(double gamma, double beta, double lbar, double lambda_dot,
                            double sbar, double abar, const ProblemInstance& inst);

}  // namespace cdq
