#pragma once

#include <array>
#include <functional>
#include <vector>

#include "cdq/model.hpp"
#include "cdq/schedule.hpp"

namespace cdq {

using AlphaFn = std::function<double(double)>;

// Effective step generators as sums over a fixed Hermitian operator basis.
//
// Everything the BCH expansion (order <= 5) of one QAOA step and the Magnus
// expansion (order <= 3) of the CD evolution can produce lives in the span
// of nested i-commutators of the matching pair (h_T, h_S). The context
// precomputes that basis and its Gram matrix of normalized traces once per
// instance; generator arithmetic and trace norms then reduce to small dense
// vector algebra, independent of qubit count.
class MatchContext {
  public:
    MatchContext(const PauliSum& h_target, const PauliSum& h_simple, AlphaFn alpha);
    explicit MatchContext(const ProblemInstance& inst);

    static constexpr int kBasis = 19;
    using Coeffs = std::array<double, kBasis>;

    // Z = -i log(exp(i beta h_S) exp(i gamma h_T)) truncated at `order` (1..5)
    Coeffs bch_coeffs(double gamma, double beta, int order) const;

    // Omega of the CD evolution over [t0, t0+tau], truncated at `order` (1..3)
    Coeffs magnus_coeffs(const Schedule& sched, double t0, double tau, int order) const;

    // sqrt(|<c, G c>|) for the basis Gram matrix G
    double gram_norm(const Coeffs& c) const;
    double diff_norm(const Coeffs& a, const Coeffs& b) const;

    PauliSum materialize(const Coeffs& c) const;
    const PauliSum& basis_op(int i) const { return ops_[static_cast<std::size_t>(i)]; }
    const AlphaFn& alpha() const { return alpha_; }
    double alpha_at(double lambda) const { return alpha_(lambda); }

    // norms used by the validity criteria
    double norm_h_target() const { return norm_t_; }
    double norm_h_simple() const { return norm_s_; }
    double norm_comm() const { return norm_k_; }

  private:
    void build(const PauliSum& h_target, const PauliSum& h_simple);
    std::vector<PauliSum> ops_;
    std::array<std::array<double, kBasis>, kBasis> gram_{};
    AlphaFn alpha_;
    double norm_t_ = 0, norm_s_ = 0, norm_k_ = 0;
    // index maps for nested commutator application
    std::array<std::array<int, kBasis>, 2> apply_{};   // [gen][src] -> dst or -1
};

struct GeneratorSeries {
    std::vector<PauliSum> terms_by_order;  // order 1, 2, ...
    PauliSum total;
    int order = 0;
};

GeneratorSeries bch_generator(const ProblemInstance& inst, double gamma, double beta,
                              int order);
GeneratorSeries magnus_generator(const ProblemInstance& inst, const Schedule& sched,
                                 const AlphaFn& alpha, double t0, double tau, int order);
// e = sqrt(|tr((Z - Omega)^2)| / 2^n) / tau, identity components excluded
double step_error(const ProblemInstance& inst, double gamma, double beta,
                  const Schedule& sched, const AlphaFn& alpha, double t0, double tau,
                  std::pair<int, int> orders);

}  // namespace cdq
