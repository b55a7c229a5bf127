#include "cdq/expand.hpp"

#include <cmath>

#include "cdq/agp.hpp"

namespace cdq {

namespace {

// 8-point Gauss-Legendre on [0,1]
constexpr int kGL = 8;
constexpr double kNode[kGL] = {
    0.01985507175123186, 0.10166676129318664, 0.2372337950418355, 0.40828267875217505,
    0.59171732124782495, 0.7627662049581645,  0.89833323870681336, 0.98014492824876814};
constexpr double kWeight[kGL] = {
    0.05061426814518813, 0.11119051722668723, 0.15685332293894372, 0.18134189168918099,
    0.18134189168918099, 0.15685332293894372, 0.11119051722668723, 0.05061426814518813};

// BCH words for log(e^X e^Y), letters 0 -> X = i*beta*h_S, 1 -> Y = i*gamma*h_T.
struct BchWord {
    int order;
    double coeff;
    std::vector<int> word;  // right-nested [w0,[w1,...,[wk-1, wk]...]]
};

const std::vector<BchWord>& bch_table() {
    static const std::vector<BchWord> t = {
        {2, 0.5, {0, 1}},
        {3, 1.0 / 12, {0, 0, 1}},
        {3, 1.0 / 12, {1, 1, 0}},
        {4, -1.0 / 24, {1, 0, 0, 1}},
        {5, -1.0 / 720, {1, 1, 1, 1, 0}},
        {5, -1.0 / 720, {0, 0, 0, 0, 1}},
        {5, 1.0 / 360, {0, 1, 1, 1, 0}},
        {5, 1.0 / 360, {1, 0, 0, 0, 1}},
        {5, 1.0 / 120, {1, 0, 1, 0, 1}},
        {5, 1.0 / 120, {0, 1, 0, 1, 0}},
    };
    return t;
}

}  // namespace

MatchContext::MatchContext(const PauliSum& h_target, const PauliSum& h_simple, AlphaFn alpha)
    : alpha_(std::move(alpha)) {
    build(h_target, h_simple);
}

MatchContext::MatchContext(const ProblemInstance& inst) {
    AlphaFunction af = matching_alpha(inst);
    alpha_ = [af](double l) { return af(l); };
    build(inst.match_h_target, inst.match_h_simple);
}

void MatchContext::build(const PauliSum& h_target, const PauliSum& h_simple) {
    PauliSum hT = h_target.without_identity();
    PauliSum hS = h_simple.without_identity();
    ops_.clear();
    ops_.push_back(hT);                      // 0
    ops_.push_back(hS);                      // 1
    ops_.push_back(i_commutator(hT, hS));    // 2: K
    ops_.push_back(i_commutator(hT, ops_[2]));  // 3
    ops_.push_back(i_commutator(hS, ops_[2]));  // 4
    // depth 4: i[gen, ops_{3,4}]
    int d4[2][2];                            // [gen][src-3]
    for (int g = 0; g < 2; ++g)
        for (int s = 0; s < 2; ++s) {
            ops_.push_back(i_commutator(g == 0 ? hT : hS, ops_[static_cast<std::size_t>(3 + s)]));
            d4[g][s] = static_cast<int>(ops_.size()) - 1;
        }
    // depth 5: i[gen, each depth-4 op]
    int d5[2][4];
    for (int g = 0; g < 2; ++g)
        for (int m = 0; m < 4; ++m) {
            int src = 5 + m;
            ops_.push_back(i_commutator(g == 0 ? hT : hS, ops_[static_cast<std::size_t>(src)]));
            d5[g][m] = static_cast<int>(ops_.size()) - 1;
        }
    // Magnus-3 extras: i[K, ops_{3,4}]
    ops_.push_back(i_commutator(ops_[2], ops_[3]));  // 17
    ops_.push_back(i_commutator(ops_[2], ops_[4]));  // 18

    for (auto& op : ops_) op = op.without_identity();

    for (int g = 0; g < 2; ++g) {
        apply_[static_cast<std::size_t>(g)].fill(-1);
        apply_[static_cast<std::size_t>(g)][2] = 3 + g;
        apply_[static_cast<std::size_t>(g)][3] = d4[g][0];
        apply_[static_cast<std::size_t>(g)][4] = d4[g][1];
        for (int m = 0; m < 4; ++m)
            apply_[static_cast<std::size_t>(g)][static_cast<std::size_t>(5 + m)] = d5[g][m];
    }

    for (int i = 0; i < kBasis; ++i)
        for (int j = i; j < kBasis; ++j) {
            double v = trace_product(ops_[static_cast<std::size_t>(i)],
                                     ops_[static_cast<std::size_t>(j)]).real();
            gram_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
            gram_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
        }
    norm_t_ = std::sqrt(std::abs(gram_[0][0]));
    norm_s_ = std::sqrt(std::abs(gram_[1][1]));
    norm_k_ = std::sqrt(std::abs(gram_[2][2]));
}

MatchContext::Coeffs MatchContext::bch_coeffs(double gamma, double beta, int order) const {
    if (order < 1 || order > 5)
        throw validation_error("bch_coeffs: order must be in 1..5");
    Coeffs c{};
    c[0] += gamma;
    c[1] += beta;
    if (order < 2) return c;
    for (const auto& w : bch_table()) {
        if (w.order > order) continue;
        const auto& word = w.word;
        const std::size_t len = word.size();
        // innermost pair [w_{len-2}, w_{len-1}]
        int a = word[len - 2], b = word[len - 1];
        if (a == b) continue;
        // [X,Y] = -beta*gamma * (i K);  [Y,X] = +beta*gamma * (i K)
        cplx scal = (a == 0) ? cplx(0, -beta * gamma) : cplx(0, beta * gamma);
        int idx = 2;
        bool ok = true;
        for (std::size_t pos = len - 2; pos-- > 0;) {
            int letter = word[pos];
            double amp = (letter == 0) ? beta : gamma;
            // [i*amp*gen, scal*op] = amp*scal * i(-i) * (i[gen,op]) = amp*scal*(i[gen,op])
            scal *= amp;
            int gen = 1 - letter;  // letter 0 = X = h_S side
            idx = apply_[static_cast<std::size_t>(gen)][static_cast<std::size_t>(idx)];
            if (idx < 0) {
                ok = false;
                break;
            }
        }
        if (!ok) throw numeric_error("bch_coeffs: missing basis operator");
        cplx contrib = cplx(0, -1) * w.coeff * scal;  // Z = -i log(...)
        c[static_cast<std::size_t>(idx)] += contrib.real();
    }
    return c;
}

MatchContext::Coeffs MatchContext::magnus_coeffs(const Schedule& sched, double t0,
                                                 double tau, int order) const {
    if (order < 1 || order > 3)
        throw validation_error("magnus_coeffs: order must be in 1..3");
    if (!(tau > 0)) throw validation_error("magnus_coeffs: tau must be positive");
    Coeffs c{};

    auto fvec = [&](double t, double out[3]) {
        double lam = sched.lambda(t);
        double cd = sched.s(t) + sched.lambda_dot(t) * alpha_(std::clamp(lam, 0.0, 1.0));
        out[0] = lam;
        out[1] = 1.0 - lam;
        out[2] = cd;
    };

    // Omega1: quadrature on lambda and s; CD part via the exact integral
    // of s dt plus integral of alpha over dlambda.
    double t1n[kGL], f1[kGL][3];
    double lam_int = 0, s_int = 0;
    for (int a = 0; a < kGL; ++a) {
        t1n[a] = t0 + tau * kNode[a];
        fvec(t1n[a], f1[a]);
        lam_int += kWeight[a] * f1[a][0];
        s_int += kWeight[a] * sched.s(t1n[a]);
    }
    c[0] += tau * lam_int;
    c[1] += tau * (1.0 - lam_int);
    double l0 = sched.lambda(t0), l1 = sched.lambda(t0 + tau);
    double a_int = 0;
    for (int a = 0; a < kGL; ++a) {
        double l = std::clamp(l0 + (l1 - l0) * kNode[a], 0.0, 1.0);
        a_int += kWeight[a] * alpha_(l);
    }
    c[2] += tau * s_int + (l1 - l0) * a_int;
    if (order < 2) return c;

    // Omega2 = 1/2 sum_{i<j} I_ij * i[B_i,B_j];
    // i[B0,B1]=K(2), i[B0,B2]=op3, i[B1,B2]=op4
    double I[3][3] = {};
    double f2[kGL][kGL][3];
    for (int a = 0; a < kGL; ++a) {
        double span1 = t1n[a] - t0;
        double inner[3] = {};
        for (int b = 0; b < kGL; ++b) {
            double t2 = t0 + span1 * kNode[b];
            fvec(t2, f2[a][b]);
            for (int j = 0; j < 3; ++j) inner[j] += kWeight[b] * span1 * f2[a][b][j];
        }
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                I[i][j] += tau * kWeight[a] * f1[a][i] * inner[j];
    }
    c[2] += 0.5 * (I[0][1] - I[1][0]);
    c[3] += 0.5 * (I[0][2] - I[2][0]);
    c[4] += 0.5 * (I[1][2] - I[2][1]);
    if (order < 3) return c;

    // Omega3 = (1/6) sum over ordered pairs (j<k) of
    //   [J(i,j,k) + J(k,j,i) - J(i,k,j) - J(j,k,i)] * i[B_i, i[B_j,B_k]]
    double J[3][3][3] = {};
    for (int a = 0; a < kGL; ++a) {
        double span1 = t1n[a] - t0;
        for (int b = 0; b < kGL; ++b) {
            double t2 = t0 + span1 * kNode[b];
            double span2 = t2 - t0;
            double inner[3] = {};
            for (int cq = 0; cq < kGL; ++cq) {
                double t3 = t0 + span2 * kNode[cq];
                double f3[3];
                fvec(t3, f3);
                for (int j = 0; j < 3; ++j) inner[j] += kWeight[cq] * span2 * f3[j];
            }
            double w12 = tau * kWeight[a] * span1 * kWeight[b];
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    for (int k = 0; k < 3; ++k)
                        J[i][j][k] += w12 * f1[a][i] * f2[a][b][j] * inner[k];
        }
    }
    // D map: i[B_i, C_jk] with C indexed by the pair slot
    static constexpr int pair_c[3] = {2, 3, 4};   // (0,1), (0,2), (1,2)
    static constexpr int pair_j[3] = {0, 0, 1};
    static constexpr int pair_k[3] = {1, 2, 2};
    for (int s = 0; s < 3; ++s) {
        int j = pair_j[s], k = pair_k[s], cidx = pair_c[s];
        for (int i = 0; i < 3; ++i) {
            int d;
            if (i == 2)
                d = (cidx == 2) ? -1 : (cidx == 3 ? 17 : 18);
            else
                d = apply_[static_cast<std::size_t>(i)][static_cast<std::size_t>(cidx)];
            if (d < 0) continue;   // i[K,K] = 0
            double w = (J[i][j][k] + J[k][j][i]) - (J[i][k][j] + J[j][k][i]);
            c[static_cast<std::size_t>(d)] += w / 6.0;
        }
    }
    return c;
}

double MatchContext::gram_norm(const Coeffs& c) const {
    double v = 0;
    for (int i = 0; i < kBasis; ++i) {
        if (c[static_cast<std::size_t>(i)] == 0.0) continue;
        for (int j = 0; j < kBasis; ++j)
            v += c[static_cast<std::size_t>(i)] *
                 gram_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                 c[static_cast<std::size_t>(j)];
    }
    return std::sqrt(std::abs(v));
}

double MatchContext::diff_norm(const Coeffs& a, const Coeffs& b) const {
    Coeffs d;
    for (int i = 0; i < kBasis; ++i)
        d[static_cast<std::size_t>(i)] =
            a[static_cast<std::size_t>(i)] - b[static_cast<std::size_t>(i)];
    return gram_norm(d);
}

PauliSum MatchContext::materialize(const Coeffs& c) const {
    PauliSum out(ops_[0].n_qubits());
    for (int i = 0; i < kBasis; ++i) {
        double ci = c[static_cast<std::size_t>(i)];
        if (ci == 0.0) continue;
        PauliSum t = ops_[static_cast<std::size_t>(i)];
        t *= cplx(ci);
        out += t;
    }
    return out;
}

GeneratorSeries bch_generator(const ProblemInstance& inst, double gamma, double beta,
                              int order) {
    if (!std::isfinite(gamma) || !std::isfinite(beta))
        throw validation_error("bch_generator: non-finite angle");
    if (order < 1 || order > 5)
        throw validation_error("bch_generator: order must be in 1..5");
    MatchContext ctx(inst);
    GeneratorSeries out;
    out.order = order;
    MatchContext::Coeffs prev{};
    for (int o = 1; o <= order; ++o) {
        auto c = ctx.bch_coeffs(gamma, beta, o);
        MatchContext::Coeffs d;
        for (std::size_t i = 0; i < d.size(); ++i) d[i] = c[i] - prev[i];
        out.terms_by_order.push_back(ctx.materialize(d));
        prev = c;
    }
    out.total = ctx.materialize(prev);
    return out;
}

GeneratorSeries magnus_generator(const ProblemInstance& inst, const Schedule& sched,
                                 const AlphaFn& alpha, double t0, double tau, int order) {
    if (order < 1 || order > 3)
        throw validation_error("magnus_generator: order must be in 1..3");
    if (t0 < 0 || !(tau > 0))
        throw validation_error("magnus_generator: interval must satisfy t0 >= 0, tau > 0");
    if (t0 + tau > sched.T() * (1 + 1e-9))
        throw validation_error("magnus_generator: interval outside schedule domain");
    MatchContext ctx(inst.match_h_target, inst.match_h_simple,
                     alpha ? alpha : [af = matching_alpha(inst)](double l) { return af(l); });
    GeneratorSeries out;
    out.order = order;
    MatchContext::Coeffs prev{};
    for (int o = 1; o <= order; ++o) {
        auto c = ctx.magnus_coeffs(sched, t0, tau, o);
        MatchContext::Coeffs d;
        for (std::size_t i = 0; i < d.size(); ++i) d[i] = c[i] - prev[i];
        out.terms_by_order.push_back(ctx.materialize(d));
        prev = c;
    }
    out.total = ctx.materialize(prev);
    return out;
}

double step_error(const ProblemInstance& inst, double gamma, double beta,
                  const Schedule& sched, const AlphaFn& alpha, double t0, double tau,
                  std::pair<int, int> orders) {
    if (!(tau > 0)) throw validation_error("step_error: tau must be positive");
    MatchContext ctx(inst.match_h_target, inst.match_h_simple,
                     alpha ? alpha : [af = matching_alpha(inst)](double l) { return af(l); });
    auto cz = ctx.bch_coeffs(gamma, beta, orders.first);
    auto cw = ctx.magnus_coeffs(sched, t0, tau, orders.second);
    return ctx.diff_norm(cz, cw) / tau;
}

}  // namespace cdq
