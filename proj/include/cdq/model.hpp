#pragma once

#include <utility>
#include <vector>

#include "cdq/pauli.hpp"

namespace cdq {

enum class InstanceKind { TwoLevel, IsingRing, MaxCutGraph };

using Edge = std::pair<int, int>;

// A problem family member: the annealing pair (h_simple, h_target), the
// cached commutator, the reported objective, and the operator frame the
// QAOA/matching layer works in.
//
// For IsingRing and MaxCutGraph the matching frame equals the annealing
// pair. The TwoLevel instance is special: its dynamics live in the
// Z2-symmetric two-dimensional sector, and matched angles/values are only
// meaningful for the unit-normalized sector generators. There the matching
// runs on the reduced single-spin pair (sigma_z, sigma_x), and the matched
// angles drive exp(i gamma (-Z0 Z1)) and exp(i beta (X0+X1)/2).
struct ProblemInstance {
    InstanceKind kind = InstanceKind::TwoLevel;
    int n_qubits = 0;
    std::vector<Edge> edges;        // ring/graph edges; empty for TwoLevel

    PauliSum h_simple;              // H_S
    PauliSum h_target;              // H_T
    PauliSum comm;                  // [H_T, H_S], cached
    PauliSum objective;             // expectation defines the approximation ratio
    double obj_max = 0.0;

    // QAOA step generators (same qubit count as the instance)
    PauliSum qaoa_gamma_gen;        // multiplies gamma, diagonal in Z basis
    PauliSum qaoa_beta_gen;         // multiplies beta, sum of c*X_q
    double beta_x_coeff = 1.0;      // c in exp(i beta c X_q) per qubit

    // Matching-frame pair (reduced for TwoLevel)
    PauliSum match_h_target;
    PauliSum match_h_simple;
    int match_n_qubits = 0;

    int degree() const;             // regular degree, or -1 if irregular
    bool has_triangle() const;
};

ProblemInstance build_two_level();
ProblemInstance build_ising_ring(int N);
ProblemInstance build_maxcut(const std::vector<Edge>& edges);

// lambda*H_T + (1-lambda)*H_S + i(s + lambdadot*alpha)[H_T,H_S] over the
// instance's annealing pair. Hermitian for finite inputs.
PauliSum cd_hamiltonian(const ProblemInstance& inst, double lambda, double lambda_dot,
                        double s, double alpha);

// Exact MaxCut value by exhaustive search (n <= 24).
int max_cut_brute_force(int n, const std::vector<Edge>& edges);

// Simple connected degree-regular graph from a seeded pairing-model sampler.
std::vector<Edge> random_regular_graph(int degree, int n, unsigned seed);

}  // namespace cdq
