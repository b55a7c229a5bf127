#pragma once

#include <vector>

#include "cdq/matching.hpp"
#include "cdq/model.hpp"
#include "cdq/schedule.hpp"

namespace cdq {

inline constexpr int kStateCap = 20;

struct StateVector {
    int n_qubits = 0;
    std::vector<cplx> amplitudes;

    static StateVector plus_state(int n);
    double norm() const;
};

// Fast repeated application of a fixed PauliSum to state vectors.
class PauliApplier {
  public:
    PauliApplier(const PauliSum& op, int n_qubits);
    void apply(const std::vector<cplx>& in, std::vector<cplx>& out) const;
    int n_qubits() const { return n_; }

  private:
    struct Term {
        std::uint64_t flip;
        std::vector<cplx> coeff;   // per-basis-state coefficient
    };
    int n_;
    std::vector<Term> terms_;
};

// QAOA ansatz from the maximal H_S eigenstate: per layer exp(i gamma G_T)
// (diagonal) then exp(i beta G_S) (single-qubit X rotations), with the
// instance's step generators.
StateVector qaoa_state(const ProblemInstance& inst, const std::vector<double>& gammas,
                       const std::vector<double>& betas);

struct EvolveOptions {
    bool include_cd = true;
    bool include_s = true;
    int steps_per_unit = 0;        // 0: automatic (1e4 steps over [0,T])
};

// RK4 Schroedinger integration psi' = i H_CD(t) psi from the maximal H_S
// eigenstate, with norm renormalization and a halving-based error estimate.
StateVector cd_evolve(const ProblemInstance& inst, const Schedule& sched,
                      const AlphaFn& alpha, const EvolveOptions& opt = {});

double objective_expectation(const ProblemInstance& inst, const StateVector& state);
double approximation_ratio(const ProblemInstance& inst, const StateVector& state);

struct BlochPoint {
    double t, x, y, z;
};

// Effective-sector spin trajectory for the two-level instance, sampled
// inside each unitary.
std::vector<BlochPoint> bloch_trajectory(const ProblemInstance& inst,
                                         const std::vector<double>& gammas,
                                         const std::vector<double>& betas,
                                         int samples_per_step = 24);

// Scan+polish the p=1 angle landscape of a ring/graph instance.
struct ScanResult {
    double gamma = 0, beta = 0, ratio = 0;
};
ScanResult scan_p1(const ProblemInstance& inst, int grid = 60);

// Repeated-evaluation QAOA objective with cached diagonals, for optimizers.
class QaoaEvaluator {
  public:
    explicit QaoaEvaluator(const ProblemInstance& inst);
    // approximation ratio of the ansatz at (gammas | betas), packed x = [g..., b...]
    double ratio(const std::vector<double>& packed) const;
    int evaluations() const { return evals_; }

  private:
    int n_;
    double beta_coeff_;
    double obj_max_;
    std::vector<double> gamma_diag_;
    std::vector<double> obj_diag_;
    mutable std::vector<cplx> work_;
    mutable int evals_ = 0;
};

struct MaxCutAscentResult {
    std::vector<double> gammas, betas;
    double ratio = 0.0;
    int iterations = 0;
    double grad_norm = 0.0;
};

// Warm-started central-difference gradient ascent of the QAOA objective.
MaxCutAscentResult optimize_angles(const ProblemInstance& inst,
                                   std::vector<double> gammas,
                                   std::vector<double> betas,
                                   const GradientAscentOptions& opt = {});

}  // namespace cdq
