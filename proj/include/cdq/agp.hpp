#pragma once

#include <vector>

#include "cdq/model.hpp"

namespace cdq {

// First-order variational gauge-potential coefficient as a trace ratio.
//
// With H = lambda*H_T + (1-lambda)*H_S, dH = H_T - H_S and G = [H, dH]
// (lambda-independent), the coefficient is
//   alpha(lambda) = norm_sq(G) / norm_sq([G, H])
// with signed normalized traces, so alpha <= 0 always. The denominator is
// quadratic in lambda; its three Gram numbers are cached per pair so the
// evaluation is a closed rational form.
class AlphaFunction {
  public:
    AlphaFunction(const PauliSum& h_target, const PauliSum& h_simple);
    double operator()(double lambda) const;
    double numerator() const { return num_; }

  private:
    double num_;     // norm_sq(G) < 0
    double d_ss_;    // norm_sq([G, H_S])
    double d_tt_;    // norm_sq([G, H_T])
    double d_st_;    // cross trace
};

enum class ClosedFormKind { TwoLevel, Chain, Regular };

// alpha on the instance's annealing pair (H_T, H_S).
double alpha_numeric(const ProblemInstance& inst, double lambda);

// alpha on the instance's matching-frame pair (reduced for TwoLevel).
AlphaFunction matching_alpha(const ProblemInstance& inst);

// The closed forms as printed in the reference derivations. The two-level
// form agrees with the trace ratio exactly. The chain and nu-regular forms
// do not reduce to the trace ratio of their Hamiltonian pairs (they agree
// with it only at lambda = 1/2 for the chain); see docs/alpha_notes.md.
double alpha_closed(ClosedFormKind kind, double lambda, int nu = 0);

struct AlphaSample {
    double lambda;
    double numeric;
    double closed;
};

enum class AlphaMethod { Numeric, ClosedTwoLevel, ClosedChain, ClosedRegular };

struct AlphaProfile {
    AlphaMethod method = AlphaMethod::Numeric;
    std::vector<AlphaSample> grid;   // lambda strictly increasing in [0,1]
};

AlphaProfile alpha_profile(const ProblemInstance& inst, int grid_points);

}  // namespace cdq
