#include "cdq/matching.hpp"

#include <algorithm>
#include <cmath>

#include "cdq/agp.hpp"

namespace cdq {

namespace {

constexpr double kLambdaEps = 1e-3;
constexpr double kSeedClampLo = 0.02, kSeedClampHi = 0.98;

struct Step {
    double gamma, beta, tau, err;
    double lbar, ldot, sbar, abar;   // interval data for validity flags
};

struct MarchResult {
    std::vector<Step> steps;
    bool aborted = false;            // hit the step cap
};

// March matched steps across [0, T]; the final step may overshoot.
MarchResult march(const MatchContext& ctx, const Schedule& sched,
                  const MatcherConfig& cfg, int p_cap) {
    const double T = sched.T();
    MarchResult out;
    double t0 = 0.0;
    const auto [bo, mo] = cfg.orders;
    while (t0 < T * (1.0 - 1e-9)) {
        if (static_cast<int>(out.steps.size()) >= p_cap) {
            out.aborted = true;
            return out;
        }
        const double remaining = T - t0;
        const double tau_cap = cfg.tau_overshoot_cap * remaining;

        // closed-form seed, two midpoint fixed-point refinements
        double tau0 = 0.2 * T;
        bool have_cf = false;
        {
            double lb = std::clamp(sched.lambda(t0), kSeedClampLo, kSeedClampHi);
            double drive = sched.s(t0) + sched.lambda_dot(t0) * ctx.alpha_at(lb);
            if (drive < 0) {
                tau0 = -2.0 * drive / (lb * (1.0 - lb));
                have_cf = true;
                for (int it = 0; it < 2; ++it) {
                    double tm = t0 + 0.5 * tau0;
                    double lm = std::clamp(sched.lambda(tm), kSeedClampLo, kSeedClampHi);
                    double d2 = sched.s(tm) + sched.lambda_dot(tm) * ctx.alpha_at(lm);
                    if (d2 >= 0) break;
                    tau0 = -2.0 * d2 / (lm * (1.0 - lm));
                }
            }
        }
        (void)have_cf;
        tau0 = std::min(tau0, 2.0 * remaining);

        auto err_at = [&](double g, double b, double tau) {
            auto cz = ctx.bch_coeffs(g, b, bo);
            auto cw = ctx.magnus_coeffs(sched, t0, tau, mo);
            return ctx.diff_norm(cz, cw) / tau;
        };

        // stage 1: coarse tau scan with interval-consistent closed-form angles
        double bg = 0, bb = 0, bt = tau0, be = 1e300;
        for (double fac : {0.3, 0.5, 0.75, 1.0, 1.5, 2.0}) {
            double tau = std::min(fac * tau0, tau_cap);
            if (tau <= 0) continue;
            double lm = std::clamp(sched.lambda(t0 + 0.5 * tau), kSeedClampLo, kSeedClampHi);
            double g = tau * lm, b = tau * (1.0 - lm);
            double e = err_at(g, b, tau);
            if (e < be) {
                be = e;
                bg = g;
                bb = b;
                bt = tau;
            }
        }
        // stage 2: simplex over (gamma, beta, tau)
        auto obj = [&](const std::vector<double>& x) {
            if (x[2] <= 1e-9 || x[2] > tau_cap) return 1e6;
            return err_at(x[0], x[1], x[2]);
        };
        SimplexOptions sopt;
        sopt.max_evaluations = cfg.simplex_max_eval;
        sopt.diameter_tol = cfg.simplex_tol;
        auto res = nelder_mead(obj, {bg, bb, bt},
                               {0.05 * std::max(std::abs(bg), 0.05),
                                0.05 * std::max(std::abs(bb), 0.05), 0.05 * bt},
                               sopt);
        Step st;
        st.gamma = res.x[0];
        st.beta = res.x[1];
        st.tau = std::min(res.x[2], tau_cap);
        st.err = res.value;
        double tmid = t0 + 0.5 * st.tau;
        st.lbar = std::clamp(sched.lambda(tmid), 0.0, 1.0);
        st.ldot = sched.lambda_dot(tmid);
        st.sbar = sched.s(tmid);
        st.abar = ctx.alpha_at(st.lbar);
        out.steps.push_back(st);
        t0 += st.tau;
    }
    return out;
}

double window_objective(const MarchResult& m, double T) {
    double tot = 0, sumtau = 0;
    for (const auto& s : m.steps) {
        tot += s.err;
        sumtau += s.tau;
    }
    // tiny overshoot tie-break picks the member of a degenerate-zero family
    // whose last step ends at the protocol end
    return tot + 1e-3 * std::max(0.0, sumtau - T) / T;
}

MatchReport finalize(const ProblemInstance& inst, const MarchResult& m, const Schedule& sched,
                     const MatcherConfig& cfg, MatchDirection dir) {
    MatchReport rep;
    rep.schedule = sched;
    rep.direction = dir;
    rep.orders = cfg.orders;
    rep.angles.p = static_cast<int>(m.steps.size());
    for (const auto& s : m.steps) {
        rep.angles.gammas.push_back(s.gamma);
        rep.angles.betas.push_back(s.beta);
        rep.angles.taus.push_back(s.tau);
        rep.angles.step_errors.push_back(s.err);
        rep.angles.equivalent_T += s.tau;
        rep.total_error += s.err;
        rep.validity.push_back(
            validity_check(s.gamma, s.beta, s.lbar, s.ldot, s.sbar, s.abar, inst));
        if (s.err > cfg.error_ceiling) rep.divergence_warning = true;
    }
    return rep;
}

}  // namespace

ClosedFormStep closed_form_step(double lbar, double lambda_dot, double sbar, double abar) {
    if (lbar < kLambdaEps || lbar > 1.0 - kLambdaEps)
        throw validation_error("closed_form_step: lambda at protocol edge");
    double drive = sbar + lambda_dot * abar;
    if (drive >= 0)
        throw numeric_error("closed_form_step: s + lambdadot*alpha >= 0, no matching step");
    double tau = -2.0 * drive / (lbar * (1.0 - lbar));
    return {tau, tau * lbar, tau * (1.0 - lbar)};
}

StepValidity validity_check(double gamma, double beta, double lbar, double lambda_dot,
                            double sbar, double abar, const ProblemInstance& inst) {
    (void)lbar;
    (void)sbar;
    StepValidity v;
    double g = std::abs(gamma), b = std::abs(beta);
    double third = g * g * b / 12.0 + b * b * g / 12.0;
    double second = g * b / 2.0;
    if (second < 1e-15)
        v.bch_ok = third < 1e-15;
    else
        v.bch_ok = third < 0.2 * second;
    double tau = g + b;
    double nk = trace_norm(inst.comm);
    double nt = trace_norm(inst.h_target.without_identity());
    double ns = trace_norm(inst.h_simple);
    double lhs = std::abs(lambda_dot) * tau * tau * tau * nk / 12.0;
    double rhs = 0.2 * tau * (nt + ns);
    v.magnus_ok = lhs < rhs;
    (void)abar;
    return v;
}

MatchReport derive_angles(const ProblemInstance& inst, const Schedule& shape, int p,
                          const MatcherConfig& cfg) {
    AlphaFunction af = matching_alpha(inst);
    return derive_angles(inst, shape, p, [af](double l) { return af(l); }, cfg);
}

MatchReport derive_angles(const ProblemInstance& inst, const Schedule& shape, int p,
                          const AlphaFn& alpha, const MatcherConfig& cfg) {
    if (p < 1) throw validation_error("derive_angles: p must be >= 1");
    MatchContext ctx(inst.match_h_target, inst.match_h_simple, alpha);

    auto run = [&](double T) { return march(ctx, shape.with_time(T), cfg, p + 1); };
    auto steps_of = [](const MarchResult& m) {
        return m.aborted ? std::numeric_limits<int>::max()
                         : static_cast<int>(m.steps.size());
    };

    MarchResult m_lo = run(cfg.t_lo);
    if (steps_of(m_lo) > p)
        throw numeric_error("derive_angles: requested p infeasible at lower bracket");
    MarchResult m_hi = run(cfg.t_hi);
    if (steps_of(m_hi) <= p)
        throw numeric_error("derive_angles: requested p infeasible at upper bracket");

    double lo = cfg.t_lo, hi = cfg.t_hi;
    MarchResult best = std::move(m_lo);
    double Tb = lo;
    while (hi - lo > cfg.t_rel_tol * hi) {
        double mid = 0.5 * (lo + hi);
        MarchResult mm = run(mid);
        if (steps_of(mm) <= p) {
            lo = mid;
            Tb = mid;
            best = std::move(mm);
        } else {
            hi = mid;
        }
    }

    // polish: minimize total error over the window of T with exactly p steps
    auto tot = [&](double T) -> std::pair<double, MarchResult> {
        MarchResult mm = run(T);
        if (steps_of(mm) != p) return {1e18, std::move(mm)};
        return {window_objective(mm, T), std::move(mm)};
    };
    double w_lo = std::max(cfg.t_lo, Tb * (1.0 - 2.0 / std::max(p, 1)));
    double bestf = 1e18;
    double bestT = Tb;
    {
        auto [f, mm] = tot(Tb);
        if (f < bestf) {
            bestf = f;
            bestT = Tb;
            best = std::move(mm);
        }
    }
    const int kGrid = 9;
    std::vector<double> grid(kGrid);
    for (int i = 0; i < kGrid; ++i)
        grid[static_cast<std::size_t>(i)] =
            w_lo + (Tb - w_lo) * static_cast<double>(i) / (kGrid - 1);
    int besti = kGrid - 1;
    for (int i = 0; i < kGrid; ++i) {
        auto [f, mm] = tot(grid[static_cast<std::size_t>(i)]);
        if (f < bestf) {
            bestf = f;
            bestT = grid[static_cast<std::size_t>(i)];
            best = std::move(mm);
            besti = i;
        }
    }
    double a = grid[static_cast<std::size_t>(std::max(besti - 1, 0))];
    double b = grid[static_cast<std::size_t>(std::min(besti + 1, kGrid - 1))];
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double c1 = b - gr * (b - a), d1 = a + gr * (b - a);
    auto [fc, mc] = tot(c1);
    auto [fd, md] = tot(d1);
    for (int it = 0; it < 16; ++it) {
        if (fc < fd) {
            b = d1;
            d1 = c1;
            fd = fc;
            md = std::move(mc);
            c1 = b - gr * (b - a);
            std::tie(fc, mc) = tot(c1);
        } else {
            a = c1;
            c1 = d1;
            fc = fd;
            mc = std::move(md);
            d1 = a + gr * (b - a);
            std::tie(fd, md) = tot(d1);
        }
    }
    if (fc < bestf) {
        bestf = fc;
        bestT = c1;
        best = std::move(mc);
    }
    if (fd < bestf) {
        bestf = fd;
        bestT = d1;
        best = std::move(md);
    }
    if (static_cast<int>(best.steps.size()) != p)
        throw numeric_error("derive_angles: no T with the requested step count");
    return finalize(inst, best, shape.with_time(bestT), cfg, MatchDirection::Forward);
}

MatchReport reverse_protocol(const ProblemInstance& inst, const std::vector<double>& gammas,
                             const std::vector<double>& betas, const MatcherConfig& cfg) {
    if (gammas.size() != betas.size() || gammas.empty())
        throw validation_error("reverse_protocol: angle lists must match and be nonempty");
    const int p = static_cast<int>(gammas.size());
    AlphaFunction af = matching_alpha(inst);

    MatchReport rep;
    rep.direction = MatchDirection::Reverse;
    rep.orders = cfg.orders;
    for (int q = 1; q < p; ++q) {
        if (std::abs(gammas[q] - gammas[q - 1]) > cfg.nonsmooth_jump ||
            std::abs(betas[q] - betas[q - 1]) > cfg.nonsmooth_jump)
            rep.nonsmooth_warning = true;
    }

    std::vector<double> taus(gammas.size()), lams(gammas.size()), svals(gammas.size()),
        mids(gammas.size());
    double T = 0.0;
    double prev_lam = 0.0;
    for (int q = 0; q < p; ++q) {
        double tau = gammas[q] + betas[q];
        if (tau <= 0)
            throw numeric_error("reverse_protocol: gamma_q + beta_q <= 0, degenerate step");
        double lam = gammas[q] / tau;
        double sbar = -gammas[q] * betas[q] / (2 * tau) -
                      ((lam - prev_lam) / tau) * af(std::clamp(lam, 0.0, 1.0));
        taus[q] = tau;
        lams[q] = lam;
        svals[q] = sbar;
        mids[q] = T + 0.5 * tau;
        prev_lam = lam;
        T += tau;
    }

    // monotone clamp on implied lambda averages
    std::vector<double> mono = lams;
    for (int q = 1; q < p; ++q)
        if (mono[q] < mono[q - 1]) {
            mono[q] = mono[q - 1];
            rep.monotone_clamped = true;
        }
    for (auto& v : mono) v = std::min(v, 1.0);

    // knots on unit time through the interval averages, then adjust knot
    // values so each interval's integral average reproduces lambda_bar
    std::vector<double> xs{0.0}, ys{0.0};
    for (int q = 0; q < p; ++q) {
        xs.push_back(mids[q] / T);
        ys.push_back(mono[q]);
    }
    xs.push_back(1.0);
    ys.push_back(1.0);
    MonotoneCubic lam_fit(xs, ys);
    for (int sweep = 0; sweep < 4; ++sweep) {
        std::vector<double> adj = ys;
        double tprev = 0.0;
        for (int q = 0; q < p; ++q) {
            double u0 = tprev / T, u1 = (tprev + taus[q]) / T;
            // 4-point average of the current fit over the interval
            double avg = 0;
            for (double u : {u0 + 0.125 * (u1 - u0), u0 + 0.375 * (u1 - u0),
                             u0 + 0.625 * (u1 - u0), u0 + 0.875 * (u1 - u0)})
                avg += 0.25 * lam_fit.value(u);
            adj[static_cast<std::size_t>(q + 1)] += mono[q] - avg;
            tprev += taus[q];
        }
        for (int q = 1; q <= p; ++q)
            adj[static_cast<std::size_t>(q)] =
                std::clamp(adj[static_cast<std::size_t>(q)],
                           adj[static_cast<std::size_t>(q - 1)], 1.0);
        ys = adj;
        lam_fit = MonotoneCubic(xs, ys);
    }

    // least-squares cubic s(u) = u(1-u)(a + b u) through the s averages
    double m00 = 0, m01 = 0, m11 = 0, r0 = 0, r1 = 0;
    for (int q = 0; q < p; ++q) {
        double u = mids[q] / T;
        double b0 = u * (1 - u), b1 = u * u * (1 - u);
        m00 += b0 * b0;
        m01 += b0 * b1;
        m11 += b1 * b1;
        r0 += b0 * svals[q];
        r1 += b1 * svals[q];
    }
    double det = m00 * m11 - m01 * m01;
    double sa = 0, sb = 0;
    if (std::abs(det) > 1e-14) {
        sa = (m11 * r0 - m01 * r1) / det;
        sb = (m00 * r1 - m01 * r0) / det;
    } else if (m00 > 1e-14) {
        sa = r0 / m00;
    }

    rep.schedule = Schedule::interpolated(T, lam_fit, sa, sb);
    rep.angles.p = p;
    rep.angles.gammas = gammas;
    rep.angles.betas = betas;
    rep.angles.taus = taus;
    rep.angles.equivalent_T = T;

    // residuals of the reverse fit, per step
    MatchContext ctx(inst.match_h_target, inst.match_h_simple,
                     [af](double l) { return af(l); });
    double t0 = 0.0;
    for (int q = 0; q < p; ++q) {
        auto cz = ctx.bch_coeffs(gammas[q], betas[q], cfg.orders.first);
        auto cw = ctx.magnus_coeffs(rep.schedule, t0, taus[q], cfg.orders.second);
        double e = ctx.diff_norm(cz, cw) / taus[q];
        rep.angles.step_errors.push_back(e);
        rep.total_error += e;
        double tmid = t0 + 0.5 * taus[q];
        rep.validity.push_back(validity_check(
            gammas[q], betas[q], rep.schedule.lambda(tmid), rep.schedule.lambda_dot(tmid),
            rep.schedule.s(tmid), af(std::clamp(rep.schedule.lambda(tmid), 0.0, 1.0)), inst));
        if (e > cfg.error_ceiling) rep.divergence_warning = true;
        t0 += taus[q];
    }
    return rep;
}

}  // namespace cdq
