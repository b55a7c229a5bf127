#pragma once

// Dense-matrix oracles used by the generator tests: matrix exponentials and
// logs via eigendecomposition, and an RK4 time-ordered propagator. These stay
// independent of the coefficient-space implementation they check.

#include <Eigen/Dense>
#include <complex>
#include <functional>

namespace oracle {

using Mat = Eigen::MatrixXcd;
using cplx = std::complex<double>;

inline Mat expm_unitary(const Mat& h) {
    // exp(i h) for Hermitian h
    Eigen::SelfAdjointEigenSolver<Mat> es(h);
    Eigen::VectorXcd phases(es.eigenvalues().size());
    for (long i = 0; i < phases.size(); ++i)
        phases(i) = std::polar(1.0, es.eigenvalues()(i));
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

inline Mat logm_unitary(const Mat& u) {
    // -i log(u), principal branch, for unitary u near identity
    Eigen::ComplexEigenSolver<Mat> es(u);
    Eigen::VectorXcd logs(es.eigenvalues().size());
    for (long i = 0; i < logs.size(); ++i)
        logs(i) = std::arg(es.eigenvalues()(i));
    Mat v = es.eigenvectors();
    return v * logs.asDiagonal() * v.inverse();
}

// U = T exp(i int H dt) by RK4 on U' = i H(t) U
inline Mat time_ordered(const std::function<Mat(double)>& H, double t0, double tau,
                        int steps) {
    long dim = H(t0).rows();
    Mat U = Mat::Identity(dim, dim);
    double h = tau / steps;
    for (int m = 0; m < steps; ++m) {
        double t = t0 + m * h;
        Mat k1 = cplx(0, 1) * (H(t) * U);
        Mat k2 = cplx(0, 1) * (H(t + h / 2) * (U + h / 2 * k1));
        Mat k3 = cplx(0, 1) * (H(t + h / 2) * (U + h / 2 * k2));
        Mat k4 = cplx(0, 1) * (H(t + h) * (U + h * k3));
        U += h / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
    }
    return U;
}

// least-squares slope of log(y) against log(x)
inline double loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = static_cast<int>(xs.size());
    for (int i = 0; i < n; ++i) {
        double lx = std::log(xs[static_cast<std::size_t>(i)]);
        double ly = std::log(ys[static_cast<std::size_t>(i)]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace oracle
