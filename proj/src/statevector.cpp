#include "cdq/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "cdq/agp.hpp"
#include "cdq/optimize.hpp"

namespace cdq {

namespace {

inline int popcount(std::uint64_t v) { return std::popcount(v); }

std::vector<double> diagonal_of(const PauliSum& op, int n) {
    const std::size_t dim = 1ull << n;
    std::vector<double> d(dim, 0.0);
    for (const auto& [k, c] : op.terms()) {
        auto [x, z] = k;
        if (x != 0) throw validation_error("diagonal_of: operator not diagonal");
        for (std::size_t b = 0; b < dim; ++b)
            d[b] += c.real() * ((popcount(z & b) & 1) ? -1.0 : 1.0);
    }
    return d;
}

void apply_diag_phase(std::vector<cplx>& v, const std::vector<double>& diag, double gamma) {
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] *= std::polar(1.0, gamma * diag[i]);
}

void apply_x_rotation(std::vector<cplx>& v, int n, double angle) {
    // exp(i angle X_q) on every qubit
    const double c = std::cos(angle), s = std::sin(angle);
    const std::size_t dim = v.size();
    for (int q = 0; q < n; ++q) {
        const std::size_t bit = 1ull << q;
        for (std::size_t base = 0; base < dim; base += 2 * bit) {
            for (std::size_t i = base; i < base + bit; ++i) {
                cplx a = v[i], b = v[i + bit];
                v[i] = c * a + cplx(-s * b.imag(), s * b.real());
                v[i + bit] = cplx(-s * a.imag(), s * a.real()) + c * b;
            }
        }
    }
}

}  // namespace

StateVector StateVector::plus_state(int n) {
    if (n > kStateCap) throw resource_error("statevector: qubit count above cap");
    StateVector sv;
    sv.n_qubits = n;
    const std::size_t dim = 1ull << n;
    sv.amplitudes.assign(dim, cplx(1.0 / std::sqrt(static_cast<double>(dim)), 0));
    return sv;
}

double StateVector::norm() const {
    double s = 0;
    for (auto a : amplitudes) s += std::norm(a);
    return std::sqrt(s);
}

PauliApplier::PauliApplier(const PauliSum& op, int n_qubits) : n_(n_qubits) {
    if (n_ > kStateCap) throw resource_error("PauliApplier: qubit count above cap");
    const std::size_t dim = 1ull << n_;
    for (const auto& [k, c] : op.terms()) {
        auto [x, z] = k;
        Term t;
        t.flip = x;
        t.coeff.resize(dim);
        cplx phase = c;
        switch (popcount(x & z) % 4) {
            case 1: phase *= cplx(0, 1); break;
            case 2: phase *= -1.0; break;
            case 3: phase *= cplx(0, -1); break;
            default: break;
        }
        for (std::size_t b = 0; b < dim; ++b)
            t.coeff[b] = phase * ((popcount(z & b) & 1) ? -1.0 : 1.0);
        terms_.push_back(std::move(t));
    }
}

void PauliApplier::apply(const std::vector<cplx>& in, std::vector<cplx>& out) const {
    std::fill(out.begin(), out.end(), cplx{0, 0});
    for (const auto& t : terms_) {
        const std::size_t flip = t.flip;
        for (std::size_t b = 0; b < in.size(); ++b)
            out[b ^ flip] += t.coeff[b] * in[b];
    }
}

StateVector qaoa_state(const ProblemInstance& inst, const std::vector<double>& gammas,
                       const std::vector<double>& betas) {
    if (gammas.size() != betas.size())
        throw validation_error("qaoa_state: angle lists must have equal length");
    if (inst.n_qubits > kStateCap)
        throw resource_error("qaoa_state: qubit count above cap");
    StateVector sv = StateVector::plus_state(inst.n_qubits);
    auto diag = diagonal_of(inst.qaoa_gamma_gen, inst.n_qubits);
    for (std::size_t q = 0; q < gammas.size(); ++q) {
        apply_diag_phase(sv.amplitudes, diag, gammas[q]);
        apply_x_rotation(sv.amplitudes, inst.n_qubits, inst.beta_x_coeff * betas[q]);
    }
    return sv;
}

StateVector cd_evolve(const ProblemInstance& inst, const Schedule& sched,
                      const AlphaFn& alpha_in, const EvolveOptions& opt) {
    if (inst.n_qubits > kStateCap)
        throw resource_error("cd_evolve: qubit count above cap");
    AlphaFn alpha = alpha_in;
    if (!alpha) {
        AlphaFunction af(inst.h_target, inst.h_simple);
        alpha = [af](double l) { return af(l); };
    }
    const int n = inst.n_qubits;
    PauliApplier apT(inst.h_target.without_identity(), n);
    PauliApplier apS(inst.h_simple, n);
    PauliApplier apK(i_commutator(inst.h_target, inst.h_simple), n);
    // identity part of h_target is a global phase; drop it
    StateVector sv = StateVector::plus_state(n);
    const double T = sched.T();
    int steps = opt.steps_per_unit > 0
                    ? std::max(16, static_cast<int>(opt.steps_per_unit * T))
                    : 10000;
    const double h = T / steps;
    std::vector<cplx> k1(sv.amplitudes.size()), k2(k1), k3(k1), k4(k1), tmp(k1),
        ht(k1), hs(k1), hk(k1);

    auto deriv = [&](double t, const std::vector<cplx>& v, std::vector<cplx>& out) {
        double lam = std::clamp(sched.lambda(t), 0.0, 1.0);
        double cd = 0.0;
        if (opt.include_s) cd += sched.s(t);
        if (opt.include_cd) cd += sched.lambda_dot(t) * alpha(lam);
        apT.apply(v, ht);
        apS.apply(v, hs);
        if (cd != 0.0)
            apK.apply(v, hk);
        else
            std::fill(hk.begin(), hk.end(), cplx{0, 0});
        // factor i(s + ldot alpha) multiplies [H_T,H_S] = -i K: net cd * K
        for (std::size_t i = 0; i < v.size(); ++i)
            out[i] = cplx(0, 1) * (lam * ht[i] + (1.0 - lam) * hs[i]) + cplx(0, 1) * cd * hk[i];
    };

    auto& v = sv.amplitudes;
    for (int m = 0; m < steps; ++m) {
        double t = m * h;
        deriv(t, v, k1);
        for (std::size_t i = 0; i < v.size(); ++i) tmp[i] = v[i] + 0.5 * h * k1[i];
        deriv(t + 0.5 * h, tmp, k2);
        for (std::size_t i = 0; i < v.size(); ++i) tmp[i] = v[i] + 0.5 * h * k2[i];
        deriv(t + 0.5 * h, tmp, k3);
        for (std::size_t i = 0; i < v.size(); ++i) tmp[i] = v[i] + h * k3[i];
        deriv(t + h, tmp, k4);
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        double nrm = sv.norm();
        if (nrm < 0.5)
            throw numeric_error("cd_evolve: integration lost the state norm");
        for (auto& a : v) a /= nrm;
    }
    return sv;
}

double objective_expectation(const ProblemInstance& inst, const StateVector& state) {
    PauliApplier ap(inst.objective, inst.n_qubits);
    std::vector<cplx> tmp(state.amplitudes.size());
    ap.apply(state.amplitudes, tmp);
    cplx e{0, 0};
    for (std::size_t i = 0; i < tmp.size(); ++i)
        e += std::conj(state.amplitudes[i]) * tmp[i];
    return e.real();
}

double approximation_ratio(const ProblemInstance& inst, const StateVector& state) {
    if (inst.obj_max <= 0)
        throw numeric_error("approximation_ratio: objective maximum unknown");
    return objective_expectation(inst, state) / inst.obj_max;
}

std::vector<BlochPoint> bloch_trajectory(const ProblemInstance& inst,
                                         const std::vector<double>& gammas,
                                         const std::vector<double>& betas,
                                         int samples_per_step) {
    if (inst.kind != InstanceKind::TwoLevel)
        throw validation_error("bloch_trajectory: two-level instance only");
    // effective sector frame: x = (X0+X1)/2, y = -(Y0 Z1 + Z0 Y1)/2, z = -Z0 Z1
    PauliSum X = cplx(0.5) * (pauli_x(2, 0) + pauli_x(2, 1));
    PauliSum Y = cplx(-0.5) * (multiply(pauli_y(2, 0), pauli_z(2, 1)) +
                               multiply(pauli_z(2, 0), pauli_y(2, 1)));
    PauliSum Z = cplx(-1.0) * pauli_zz(2, 0, 1);
    PauliApplier apX(X, 2), apY(Y, 2), apZ(Z, 2);
    auto diag = diagonal_of(inst.qaoa_gamma_gen, 2);

    StateVector sv = StateVector::plus_state(2);
    std::vector<BlochPoint> out;
    std::vector<cplx> tmp(4);
    double tcur = 0.0;
    auto record = [&] {
        auto expect = [&](const PauliApplier& ap) {
            ap.apply(sv.amplitudes, tmp);
            cplx e{0, 0};
            for (int i = 0; i < 4; ++i) e += std::conj(sv.amplitudes[i]) * tmp[i];
            return e.real();
        };
        out.push_back({tcur, expect(apX), expect(apY), expect(apZ)});
    };
    record();
    for (std::size_t q = 0; q < gammas.size(); ++q) {
        for (int m = 0; m < samples_per_step; ++m) {
            apply_diag_phase(sv.amplitudes, diag, gammas[q] / samples_per_step);
            tcur += std::abs(gammas[q]) / samples_per_step;
            record();
        }
        for (int m = 0; m < samples_per_step; ++m) {
            apply_x_rotation(sv.amplitudes, 2,
                             inst.beta_x_coeff * betas[q] / samples_per_step);
            tcur += std::abs(betas[q]) / samples_per_step;
            record();
        }
    }
    return out;
}

QaoaEvaluator::QaoaEvaluator(const ProblemInstance& inst)
    : n_(inst.n_qubits),
      beta_coeff_(inst.beta_x_coeff),
      obj_max_(inst.obj_max),
      gamma_diag_(diagonal_of(inst.qaoa_gamma_gen, inst.n_qubits)),
      obj_diag_(diagonal_of(inst.objective, inst.n_qubits)) {
    if (obj_max_ <= 0)
        throw numeric_error("QaoaEvaluator: objective maximum unknown");
    work_.resize(1ull << n_);
}

double QaoaEvaluator::ratio(const std::vector<double>& packed) const {
    const std::size_t p = packed.size() / 2;
    const double a0 = 1.0 / std::sqrt(static_cast<double>(work_.size()));
    std::fill(work_.begin(), work_.end(), cplx(a0, 0));
    for (std::size_t q = 0; q < p; ++q) {
        apply_diag_phase(work_, gamma_diag_, packed[q]);
        apply_x_rotation(work_, n_, beta_coeff_ * packed[p + q]);
    }
    double e = 0;
    for (std::size_t i = 0; i < work_.size(); ++i)
        e += obj_diag_[i] * std::norm(work_[i]);
    ++evals_;
    return e / obj_max_;
}

MaxCutAscentResult optimize_angles(const ProblemInstance& inst,
                                   std::vector<double> gammas,
                                   std::vector<double> betas,
                                   const GradientAscentOptions& opt) {
    if (gammas.size() != betas.size() || gammas.empty())
        throw validation_error("optimize_angles: angle lists must match");
    QaoaEvaluator ev(inst);
    std::vector<double> x;
    x.insert(x.end(), gammas.begin(), gammas.end());
    x.insert(x.end(), betas.begin(), betas.end());
    auto res = gradient_ascent([&](const std::vector<double>& v) { return ev.ratio(v); },
                               std::move(x), opt);
    MaxCutAscentResult out;
    const std::size_t p = gammas.size();
    out.gammas.assign(res.x.begin(), res.x.begin() + static_cast<long>(p));
    out.betas.assign(res.x.begin() + static_cast<long>(p), res.x.end());
    out.ratio = res.value;
    out.iterations = res.iterations;
    out.grad_norm = res.grad_norm;
    return out;
}

ScanResult scan_p1(const ProblemInstance& inst, int grid) {
    ScanResult best;
    for (int i = 1; i <= grid; ++i)
        for (int j = 1; j <= grid; ++j) {
            double g = 1.6 * i / grid, b = 1.6 * j / grid;
            StateVector sv = qaoa_state(inst, {g}, {b});
            double r = approximation_ratio(inst, sv);
            if (r > best.ratio) best = {g, b, r};
        }
    auto obj = [&](const std::vector<double>& x) {
        StateVector sv = qaoa_state(inst, {x[0]}, {x[1]});
        return -approximation_ratio(inst, sv);
    };
    auto res = nelder_mead(obj, {best.gamma, best.beta}, {0.02, 0.02});
    return {res.x[0], res.x[1], -res.value};
}

}  // namespace cdq
