#pragma once

#include <array>
#include <complex>
#include <vector>

#include "cdq/expand.hpp"
#include "cdq/schedule.hpp"

namespace cdq {

// Free-fermion simulator for the transverse Ising ring (even N, periodic).
//
// In the even-parity sector the dynamics block into N/2 independent
// momentum pairs k = (2m+1)pi/N with a two-dimensional space
// {|0>, c_k^dag c_-k^dag |0>}. The three Hamiltonian pieces act per pair as
//   sum X          -> 2 tz
//   sum ZZ         -> 2 cos k (1 - tz) + 2 sin k ty
//   sum (YZ + ZY)  -> 4 sin k tx
// (validated against the statevector simulator at small N).
class FermionRing {
  public:
    using Mode = std::array<cplx, 2>;

    explicit FermionRing(int N);

    int N() const { return n_; }
    int mode_count() const { return n_ / 2; }
    double momentum(int i) const { return ks_[static_cast<std::size_t>(i)]; }

    std::vector<Mode> initial() const;   // vacuum = maximal H_S eigenstate

    // QAOA with the ring generators: exp(i gamma (-1/2 sum ZZ)) then
    // exp(i beta sum X), exact per-mode exponentials.
    std::vector<Mode> qaoa(const std::vector<double>& gammas,
                           const std::vector<double>& betas) const;

    // RK4 evolution under the CD Hamiltonian blocks.
    std::vector<Mode> evolve(const Schedule& sched, const AlphaFn& alpha,
                             bool include_cd, bool include_s,
                             int steps = 4000) const;

    // objective = (N - <sum ZZ>)/2; ratio = objective/N
    double cut_value(const std::vector<Mode>& modes) const;
    double ratio(const std::vector<Mode>& modes) const;

  private:
    int n_;
    std::vector<double> ks_;
};

}  // namespace cdq
