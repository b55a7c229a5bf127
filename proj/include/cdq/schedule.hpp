#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "cdq/errors.hpp"

namespace cdq {

// Fritsch-Carlson monotone piecewise-cubic interpolant on [x0, xN].
class MonotoneCubic {
  public:
    MonotoneCubic() = default;
    MonotoneCubic(std::vector<double> xs, std::vector<double> ys);
    double value(double x) const;
    double derivative(double x) const;
    const std::vector<double>& xs() const { return xs_; }
    const std::vector<double>& ys() const { return ys_; }

  private:
    int segment(double x) const;
    std::vector<double> xs_, ys_, ms_;
};

enum class LambdaForm { Linear, Smoothstep, Power, Interp };
enum class SForm { Zero, Sin, Cubic, Interp };

// Annealing schedule on [0, T]: lambda(t) = shape(t/T) with lambda(0)=0,
// lambda(T)=1 and s(t) with s(0)=s(T)=0. Evaluation beyond T freezes the
// protocol (lambda=1, lambdadot=0, s=0) so that an overshooting final
// matching step sees a constant target Hamiltonian.
class Schedule {
  public:
    Schedule() = default;
    Schedule(double T, LambdaForm lf, double lparam, SForm sf, double s0_a, double s_b = 0.0);

    static Schedule linear(double T) { return {T, LambdaForm::Linear, 0.0, SForm::Zero, 0.0}; }
    static Schedule linear_sin(double T, double s0) {
        return {T, LambdaForm::Linear, 0.0, SForm::Sin, s0};
    }
    static Schedule interpolated(double T, MonotoneCubic lam, double s_a, double s_b);
    static Schedule interpolated(double T, MonotoneCubic lam, SForm sf, double s_a, double s_b);

    double T() const { return T_; }
    // shape on unit time (u in [0,1]); clamped/frozen outside
    double shape(double u) const;
    double dshape(double u) const;
    double s_shape(double u) const;

    double lambda(double t) const { return shape(t / T_); }
    double lambda_dot(double t) const {
        double u = t / T_;
        return u > 1.0 ? 0.0 : dshape(u) / T_;
    }
    double s(double t) const {
        double u = t / T_;
        return u > 1.0 ? 0.0 : s_shape(u);
    }

    // same shape, different total time
    Schedule with_time(double T) const {
        Schedule out = *this;
        out.T_ = T;
        return out;
    }

    LambdaForm lambda_form() const { return lf_; }
    double lambda_param() const { return lparam_; }
    SForm s_form() const { return sf_; }
    double s_param_a() const { return s_a_; }
    double s_param_b() const { return s_b_; }
    const MonotoneCubic& lambda_interp() const { return lam_interp_; }
    const MonotoneCubic& s_interp() const { return s_interp_; }
    void set_s_interp(MonotoneCubic s) { sf_ = SForm::Interp; s_interp_ = std::move(s); }

  private:
    double T_ = 1.0;
    LambdaForm lf_ = LambdaForm::Linear;
    double lparam_ = 0.0;          // power-law exponent r
    SForm sf_ = SForm::Zero;
    double s_a_ = 0.0, s_b_ = 0.0; // sin amplitude, or cubic u(1-u)(a + b u)
    MonotoneCubic lam_interp_;
    MonotoneCubic s_interp_;
};

}  // namespace cdq
