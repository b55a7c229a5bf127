#include "cdq/schedule.hpp"

#include <algorithm>

namespace cdq {

MonotoneCubic::MonotoneCubic(std::vector<double> xs, std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
    if (xs_.size() != ys_.size() || xs_.size() < 2)
        throw validation_error("MonotoneCubic: need >= 2 matching knots");
    for (std::size_t i = 1; i < xs_.size(); ++i)
        if (!(xs_[i] > xs_[i - 1]))
            throw validation_error("MonotoneCubic: knot abscissae must increase");
    const std::size_t n = xs_.size();
    std::vector<double> h(n - 1), d(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = xs_[i + 1] - xs_[i];
        d[i] = (ys_[i + 1] - ys_[i]) / h[i];
    }
    ms_.assign(n, 0.0);
    ms_[0] = d[0];
    ms_[n - 1] = d[n - 2];
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (d[i - 1] * d[i] <= 0.0) {
            ms_[i] = 0.0;
        } else {
            double w1 = 2 * h[i] + h[i - 1];
            double w2 = h[i] + 2 * h[i - 1];
            ms_[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
        }
    }
}

int MonotoneCubic::segment(double x) const {
    auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
    long i = std::distance(xs_.begin(), it) - 1;
    i = std::clamp<long>(i, 0, static_cast<long>(xs_.size()) - 2);
    return static_cast<int>(i);
}

double MonotoneCubic::value(double x) const {
    x = std::clamp(x, xs_.front(), xs_.back());
    int i = segment(x);
    double h = xs_[i + 1] - xs_[i];
    double t = (x - xs_[i]) / h;
    double y0 = ys_[i], y1 = ys_[i + 1];
    double m0 = ms_[i] * h, m1 = ms_[i + 1] * h;
    double t2 = t * t, t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * y0 + (t3 - 2 * t2 + t) * m0 +
           (-2 * t3 + 3 * t2) * y1 + (t3 - t2) * m1;
}

double MonotoneCubic::derivative(double x) const {
    x = std::clamp(x, xs_.front(), xs_.back());
    int i = segment(x);
    double h = xs_[i + 1] - xs_[i];
    double t = (x - xs_[i]) / h;
    double y0 = ys_[i], y1 = ys_[i + 1];
    double m0 = ms_[i] * h, m1 = ms_[i + 1] * h;
    double t2 = t * t;
    double d = (6 * t2 - 6 * t) * y0 + (3 * t2 - 4 * t + 1) * m0 +
               (-6 * t2 + 6 * t) * y1 + (3 * t2 - 2 * t) * m1;
    return d / h;
}

Schedule::Schedule(double T, LambdaForm lf, double lparam, SForm sf, double s0_a, double s_b)
    : T_(T), lf_(lf), lparam_(lparam), sf_(sf), s_a_(s0_a), s_b_(s_b) {
    if (!(T > 0.0)) throw validation_error("Schedule: total time must be positive");
    if (lf == LambdaForm::Power && !(lparam > 0.0))
        throw validation_error("Schedule: power form needs positive exponent");
}

Schedule Schedule::interpolated(double T, MonotoneCubic lam, double s_a, double s_b) {
    return interpolated(T, std::move(lam), SForm::Cubic, s_a, s_b);
}

Schedule Schedule::interpolated(double T, MonotoneCubic lam, SForm sf, double s_a,
                                double s_b) {
    Schedule out(T, LambdaForm::Interp, 0.0, sf, s_a, s_b);
    out.lam_interp_ = std::move(lam);
    return out;
}

double Schedule::shape(double u) const {
    u = std::clamp(u, 0.0, 1.0);
    switch (lf_) {
        case LambdaForm::Linear: return u;
        case LambdaForm::Smoothstep: return u * u * (3 - 2 * u);
        case LambdaForm::Power: {
            double v = 2 * u - 1;
            double m = std::pow(std::abs(v), lparam_);
            return 0.5 * (1 + (v < 0 ? -m : m));
        }
        case LambdaForm::Interp: return lam_interp_.value(u);
    }
    return u;
}

double Schedule::dshape(double u) const {
    u = std::clamp(u, 0.0, 1.0);
    switch (lf_) {
        case LambdaForm::Linear: return 1.0;
        case LambdaForm::Smoothstep: return 6 * u - 6 * u * u;
        case LambdaForm::Power:
            return lparam_ * std::pow(std::abs(2 * u - 1), lparam_ - 1);
        case LambdaForm::Interp: return lam_interp_.derivative(u);
    }
    return 1.0;
}

double Schedule::s_shape(double u) const {
    u = std::clamp(u, 0.0, 1.0);
    switch (sf_) {
        case SForm::Zero: return 0.0;
        case SForm::Sin: return s_a_ * std::sin(M_PI * u);
        case SForm::Cubic: return u * (1 - u) * (s_a_ + s_b_ * u);
        case SForm::Interp: return s_interp_.value(u);
    }
    return 0.0;
}

}  // namespace cdq
