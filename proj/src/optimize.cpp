#include "cdq/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cdq {

SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                          std::vector<double> x0, std::vector<double> step,
                          const SimplexOptions& opt) {
    const std::size_t n = x0.size();
    std::vector<std::vector<double>> pts;
    std::vector<double> vals;
    pts.push_back(x0);
    for (std::size_t i = 0; i < n; ++i) {
        auto p = x0;
        p[i] += step[i];
        pts.push_back(p);
    }
    int ne = 0;
    for (auto& p : pts) {
        vals.push_back(f(p));
        ++ne;
    }

    auto sort_simplex = [&] {
        std::vector<std::size_t> idx(pts.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return vals[a] < vals[b]; });
        std::vector<std::vector<double>> p2;
        std::vector<double> v2;
        for (auto i : idx) {
            p2.push_back(pts[i]);
            v2.push_back(vals[i]);
        }
        pts.swap(p2);
        vals.swap(v2);
    };
    auto diameter = [&] {
        double d = 0;
        for (std::size_t i = 1; i < pts.size(); ++i) {
            double s = 0;
            for (std::size_t j = 0; j < n; ++j) {
                double t = pts[i][j] - pts[0][j];
                s += t * t;
            }
            d = std::max(d, std::sqrt(s));
        }
        return d;
    };

    while (ne < opt.max_evaluations) {
        sort_simplex();
        if (diameter() < opt.diameter_tol) break;
        std::vector<double> cen(n, 0.0);
        for (std::size_t i = 0; i + 1 < pts.size(); ++i)
            for (std::size_t j = 0; j < n; ++j) cen[j] += pts[i][j];
        for (auto& c : cen) c /= static_cast<double>(n);

        auto blend = [&](const std::vector<double>& a, const std::vector<double>& b,
                         double w) {
            std::vector<double> out(n);
            for (std::size_t j = 0; j < n; ++j) out[j] = a[j] + w * (b[j] - a[j]);
            return out;
        };
        auto xr = blend(cen, pts.back(), -1.0);
        double fr = f(xr);
        ++ne;
        if (fr < vals[0]) {
            auto xe = blend(cen, pts.back(), -2.0);
            double fe = f(xe);
            ++ne;
            if (fe < fr) {
                pts.back() = xe;
                vals.back() = fe;
            } else {
                pts.back() = xr;
                vals.back() = fr;
            }
        } else if (fr < vals[vals.size() - 2]) {
            pts.back() = xr;
            vals.back() = fr;
        } else {
            auto xc = blend(cen, pts.back(), 0.5);
            double fc = f(xc);
            ++ne;
            if (fc < vals.back()) {
                pts.back() = xc;
                vals.back() = fc;
            } else {
                for (std::size_t i = 1; i < pts.size(); ++i) {
                    pts[i] = blend(pts[0], pts[i], 0.5);
                    vals[i] = f(pts[i]);
                    ++ne;
                }
            }
        }
    }
    sort_simplex();
    return {pts[0], vals[0], ne};
}

GradientAscentResult gradient_ascent(
    const std::function<double(const std::vector<double>&)>& f,
    std::vector<double> x0, const GradientAscentOptions& opt) {
    const std::size_t n = x0.size();
    std::vector<double> x = std::move(x0);
    double fx = f(x);
    double rate = opt.initial_rate;
    GradientAscentResult out;
    std::vector<double> g(n);
    int it = 0;
    int stalled = 0;
    for (; it < opt.max_iterations; ++it) {
        double gnorm = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            auto xp = x, xm = x;
            xp[i] += opt.fd_step;
            xm[i] -= opt.fd_step;
            g[i] = (f(xp) - f(xm)) / (2 * opt.fd_step);
            gnorm += g[i] * g[i];
        }
        gnorm = std::sqrt(gnorm);
        if (gnorm < opt.grad_norm_tol) break;
        bool moved = false;
        double f_before = fx;
        for (int tries = 0; tries < 30; ++tries) {
            auto xn = x;
            for (std::size_t i = 0; i < n; ++i) xn[i] += rate * g[i];
            double fn = f(xn);
            if (fn > fx) {
                x = xn;
                fx = fn;
                rate *= 2.0;
                moved = true;
                break;
            }
            rate *= 0.5;
        }
        if (!moved) break;  // step underflow: gradient estimate is noise-level
        // objective stall guard: FD gradients bottom out near the optimum
        stalled = (fx - f_before < 1e-12) ? stalled + 1 : 0;
        if (stalled >= 20) break;
    }
    out.x = x;
    out.value = fx;
    out.iterations = it;
    double gnorm = 0.0;
    for (double v : g) gnorm += v * v;
    out.grad_norm = std::sqrt(gnorm);
    return out;
}

}  // namespace cdq
