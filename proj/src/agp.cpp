#include "cdq/agp.hpp"

#include <cmath>

namespace cdq {

AlphaFunction::AlphaFunction(const PauliSum& h_target, const PauliSum& h_simple) {
    PauliSum dH = h_target - h_simple;
    // G = [H, dH] = [H_S, H_T] for every lambda
    PauliSum G = commutator(h_simple, h_target);
    num_ = norm_sq(G);
    PauliSum gs = commutator(G, h_simple);
    PauliSum gt = commutator(G, h_target);
    d_ss_ = norm_sq(gs);
    d_tt_ = norm_sq(gt);
    d_st_ = trace_product(gs, gt).real();
}

double AlphaFunction::operator()(double lambda) const {
    double l = lambda, m = 1.0 - lambda;
    double den = m * m * d_ss_ + l * l * d_tt_ + 2.0 * l * m * d_st_;
    if (std::abs(den) < 1e-14)
        throw numeric_error("alpha: degenerate commutator, no CD direction");
    return num_ / den;
}

double alpha_numeric(const ProblemInstance& inst, double lambda) {
    if (lambda < 0.0 || lambda > 1.0)
        throw validation_error("alpha_numeric: lambda outside [0,1]");
    AlphaFunction f(inst.h_target, inst.h_simple);
    return f(lambda);
}

AlphaFunction matching_alpha(const ProblemInstance& inst) {
    return AlphaFunction(inst.match_h_target, inst.match_h_simple);
}

double alpha_closed(ClosedFormKind kind, double lambda, int nu) {
    if (lambda < 0.0 || lambda > 1.0)
        throw validation_error("alpha_closed: lambda outside [0,1]");
    double u = (1.0 - lambda) * (1.0 - lambda);
    double v = lambda * lambda;
    switch (kind) {
        case ClosedFormKind::TwoLevel:
            return -1.0 / (16.0 * u + v);
        case ClosedFormKind::Chain:
            return -(u + v) / (8.0 * (u + v) * (u + v) + 8.0 * u * v);
        case ClosedFormKind::Regular: {
            if (nu < 2) throw validation_error("alpha_closed: regular form needs nu >= 2");
            double num = -32.0 * u - 8.0 * (3.0 * nu - 2.0) * v;
            double t = u + 4.0 * (3.0 * nu - 2.0) * v;
            double den = 256.0 * t * t + 256.0 * v * u * (nu - 1.0) +
                         96.0 * (nu - 1.0) * (nu - 2.0) * v * v;
            return num / den;
        }
    }
    throw validation_error("alpha_closed: unknown kind");
}

AlphaProfile alpha_profile(const ProblemInstance& inst, int grid_points) {
    if (grid_points < 2) throw validation_error("alpha_profile: need >= 2 points");
    AlphaProfile prof;
    AlphaFunction f(inst.h_target, inst.h_simple);
    int nu = inst.degree();
    switch (inst.kind) {
        case InstanceKind::TwoLevel: prof.method = AlphaMethod::ClosedTwoLevel; break;
        case InstanceKind::IsingRing: prof.method = AlphaMethod::ClosedChain; break;
        case InstanceKind::MaxCutGraph: prof.method = AlphaMethod::ClosedRegular; break;
    }
    for (int i = 0; i < grid_points; ++i) {
        double l = static_cast<double>(i) / (grid_points - 1);
        double closed = 0.0;
        switch (inst.kind) {
            case InstanceKind::TwoLevel:
                closed = alpha_closed(ClosedFormKind::TwoLevel, l);
                break;
            case InstanceKind::IsingRing:
                closed = alpha_closed(ClosedFormKind::Chain, l);
                break;
            case InstanceKind::MaxCutGraph:
                closed = (nu >= 2) ? alpha_closed(ClosedFormKind::Regular, l, nu)
                                   : 0.0;
                break;
        }
        prof.grid.push_back({l, f(l), closed});
    }
    return prof;
}

}  // namespace cdq
