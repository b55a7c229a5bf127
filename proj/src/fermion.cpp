#include "cdq/fermion.hpp"

#include <algorithm>
#include <cmath>

namespace cdq {

namespace {

using Mode = FermionRing::Mode;

// H = a0*I + n.tau; returns exp(iH) v exactly
Mode exp_apply(double a0, double nx, double ny, double nz, const Mode& v) {
    double r = std::sqrt(nx * nx + ny * ny + nz * nz);
    cplx ph = std::polar(1.0, a0);
    if (r < 1e-300) return {ph * v[0], ph * v[1]};
    double cr = std::cos(r), sr = std::sin(r) / r;
    // U = cos r + i sin r (n.tau)/r
    cplx u00 = cplx(cr, sr * nz), u11 = cplx(cr, -sr * nz);
    cplx u01 = cplx(sr * ny, sr * nx), u10 = cplx(-sr * ny, sr * nx);
    return {ph * (u00 * v[0] + u01 * v[1]), ph * (u10 * v[0] + u11 * v[1])};
}

}  // namespace

FermionRing::FermionRing(int N) : n_(N) {
    if (N < 4 || N % 2 != 0)
        throw validation_error("FermionRing: need even N >= 4");
    for (int m = 0; m < N / 2; ++m)
        ks_.push_back((2 * m + 1) * M_PI / N);
}

std::vector<Mode> FermionRing::initial() const {
    return std::vector<Mode>(static_cast<std::size_t>(mode_count()), Mode{cplx(1, 0), cplx(0, 0)});
}

std::vector<Mode> FermionRing::qaoa(const std::vector<double>& gammas,
                                    const std::vector<double>& betas) const {
    if (gammas.size() != betas.size())
        throw validation_error("FermionRing::qaoa: angle lists must match");
    auto modes = initial();
    for (std::size_t q = 0; q < gammas.size(); ++q) {
        double g = gammas[q], b = betas[q];
        for (int i = 0; i < mode_count(); ++i) {
            double k = ks_[static_cast<std::size_t>(i)];
            auto& v = modes[static_cast<std::size_t>(i)];
            // exp(i g * (-1/2)(2cos k (1-tz) + 2 sin k ty))
            double a0 = -g * std::cos(k);
            double nz = g * std::cos(k), ny = -g * std::sin(k);
            v = exp_apply(a0, 0.0, ny, nz, v);
            // exp(i b * 2 tz)
            v = exp_apply(0.0, 0.0, 0.0, 2.0 * b, v);
        }
    }
    return modes;
}

std::vector<Mode> FermionRing::evolve(const Schedule& sched, const AlphaFn& alpha,
                                      bool include_cd, bool include_s, int steps) const {
    auto modes = initial();
    const double T = sched.T();
    const double h = T / steps;
    for (int i = 0; i < mode_count(); ++i) {
        double k = ks_[static_cast<std::size_t>(i)];
        double ck = std::cos(k), sk = std::sin(k);
        auto ham = [&](double t, const Mode& v) -> Mode {
            double lam = std::clamp(sched.lambda(t), 0.0, 1.0);
            double cd = 0.0;
            if (include_s) cd += sched.s(t);
            if (include_cd) cd += sched.lambda_dot(t) * alpha(lam);
            // lam*(-1/2)*BZZ + (1-lam)*BS + cd*BCD
            double a0 = -lam * ck;
            double nz = lam * ck + 2.0 * (1.0 - lam);
            double ny = -lam * sk;
            double nx = 4.0 * cd * sk;
            Mode out;
            out[0] = cplx(0, 1) * ((a0 + nz) * v[0] + (cplx(nx, -ny)) * v[1]);
            out[1] = cplx(0, 1) * ((cplx(nx, ny)) * v[0] + (a0 - nz) * v[1]);
            return out;
        };
        auto& v = modes[static_cast<std::size_t>(i)];
        for (int m = 0; m < steps; ++m) {
            double t = m * h;
            Mode k1 = ham(t, v);
            Mode vt{v[0] + 0.5 * h * k1[0], v[1] + 0.5 * h * k1[1]};
            Mode k2 = ham(t + 0.5 * h, vt);
            vt = {v[0] + 0.5 * h * k2[0], v[1] + 0.5 * h * k2[1]};
            Mode k3 = ham(t + 0.5 * h, vt);
            vt = {v[0] + h * k3[0], v[1] + h * k3[1]};
            Mode k4 = ham(t + h, vt);
            v[0] += h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]);
            v[1] += h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]);
            double nrm = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
            v[0] /= nrm;
            v[1] /= nrm;
        }
    }
    return modes;
}

double FermionRing::cut_value(const std::vector<Mode>& modes) const {
    double zz = 0.0;
    for (int i = 0; i < mode_count(); ++i) {
        double k = ks_[static_cast<std::size_t>(i)];
        const auto& v = modes[static_cast<std::size_t>(i)];
        double n1 = std::norm(v[0]), n2 = std::norm(v[1]);
        // <2 cos k (1 - tz) + 2 sin k ty>
        double tz = n1 - n2;
        double ty = 2.0 * std::imag(std::conj(v[0]) * v[1]);
        zz += 2.0 * std::cos(k) * (1.0 - tz) + 2.0 * std::sin(k) * ty;
    }
    return 0.5 * (n_ - zz);
}

double FermionRing::ratio(const std::vector<Mode>& modes) const {
    return cut_value(modes) / n_;
}

}  // namespace cdq
