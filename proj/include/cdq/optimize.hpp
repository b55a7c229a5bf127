#pragma once

#include <functional>
#include <vector>

namespace cdq {

struct SimplexResult {
    std::vector<double> x;
    double value = 0.0;
    int evaluations = 0;
};

struct SimplexOptions {
    int max_evaluations = 500;
    double diameter_tol = 1e-9;
};

// Derivative-free Nelder-Mead descent; deterministic for fixed inputs.
SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                          std::vector<double> x0, std::vector<double> step,
                          const SimplexOptions& opt = {});

struct GradientAscentOptions {
    double fd_step = 1e-3;          // central-difference step
    double grad_norm_tol = 1e-5;    // convergence threshold
    int max_iterations = 5000;
    double initial_rate = 0.05;
};

struct GradientAscentResult {
    std::vector<double> x;
    double value = 0.0;
    double grad_norm = 0.0;
    int iterations = 0;
};

// Maximize f by central-finite-difference gradient ascent with an adaptive
// step length (doubles on success, halves on failure).
GradientAscentResult gradient_ascent(
    const std::function<double(const std::vector<double>&)>& f,
    std::vector<double> x0, const GradientAscentOptions& opt = {});

}  // namespace cdq
