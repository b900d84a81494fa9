#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include "vortlab/core/error.hpp"

namespace vortlab {

// Integral of the local cubic through (x[j-1..j+2], f[j-1..j+2]) over
// [x[j], x[j+1]]; stencils clamp at the ends.  Nodes may be non-uniform.
namespace detail_quad {
inline double cell_integral_cubic(const std::vector<double>& x, const std::vector<double>& f,
                                  std::size_t j) {
    const std::size_t n = x.size();
    std::size_t i0 = (j == 0) ? 0 : j - 1;
    if (i0 + 3 >= n) i0 = n - 4;
    // integrate Lagrange basis exactly over the cell
    double a = x[j], b = x[j + 1], s = 0.0;
    for (std::size_t m = 0; m < 4; ++m) {
        const double xm = x[i0 + m];
        double num[4] = {1.0, 0.0, 0.0, 0.0};  // polynomial coefficients of basis m
        double den = 1.0;
        int deg = 0;
        for (std::size_t l = 0; l < 4; ++l) {
            if (l == m) continue;
            den *= (xm - x[i0 + l]);
            for (int d = deg; d >= 0; --d) {
                num[d + 1] += num[d];
                num[d] *= -x[i0 + l];
            }
            ++deg;
        }
        double integ = 0.0;
        for (int d = 0; d <= 3; ++d)
            integ += num[d] / double(d + 1) * (std::pow(b, d + 1) - std::pow(a, d + 1));
        s += f[i0 + m] * integ / den;
    }
    return s;
}
}  // namespace detail_quad

/// Composite integral of samples (4th order, piecewise cubic).
inline double integrate_samples(const std::vector<double>& x, const std::vector<double>& f) {
    require(x.size() == f.size() && x.size() >= 4, "integrate_samples: need >= 4 nodes");
    double s = 0.0;
    for (std::size_t j = 0; j + 1 < x.size(); ++j) s += detail_quad::cell_integral_cubic(x, f, j);
    return s;
}

/// Cumulative integral I[j] = int_{x[0]}^{x[j]} f.
inline std::vector<double> cumulative_from_left(const std::vector<double>& x,
                                                const std::vector<double>& f) {
    require(x.size() == f.size() && x.size() >= 4, "cumulative_from_left: need >= 4 nodes");
    std::vector<double> out(x.size(), 0.0);
    for (std::size_t j = 0; j + 1 < x.size(); ++j)
        out[j + 1] = out[j] + detail_quad::cell_integral_cubic(x, f, j);
    return out;
}

/// Cumulative integral I[j] = int_{x[j]}^{x[n-1]} f  (inward from the far end).
inline std::vector<double> cumulative_from_right(const std::vector<double>& x,
                                                 const std::vector<double>& f) {
    require(x.size() == f.size() && x.size() >= 4, "cumulative_from_right: need >= 4 nodes");
    std::vector<double> out(x.size(), 0.0);
    for (std::size_t j = x.size() - 1; j-- > 0;)
        out[j] = out[j + 1] + detail_quad::cell_integral_cubic(x, f, j);
    return out;
}

/// Adaptive Simpson to tolerance tol (used as independent quadrature oracle).
inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double tol, int depth = 48) {
    struct Rec {
        static double go(const std::function<double(double)>& f, double a, double b, double fa,
                         double fm, double fb, double whole, double tol, int depth) {
            double m = 0.5 * (a + b);
            double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
            double flm = f(lm), frm = f(rm);
            double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
            double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
            if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
                return left + right + (left + right - whole) / 15.0;
            return go(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
                   go(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
        }
    };
    double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return Rec::go(f, a, b, fa, fm, fb, whole, tol, depth);
}

/// 8-point Gauss-Legendre rule on [a, b].
inline double gauss8(const std::function<double(double)>& f, double a, double b) {
    static const std::array<double, 4> xs = {0.1834346424956498, 0.5255324099163290,
                                             0.7966664774136267, 0.9602898564975363};
    static const std::array<double, 4> ws = {0.3626837833783620, 0.3137066458778873,
                                             0.2223810344533745, 0.1012285362903763};
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < 4; ++i) s += ws[i] * (f(c - h * xs[i]) + f(c + h * xs[i]));
    return s * h;
}

/// Least-squares slope/intercept of y against x.
struct LinearFit {
    double slope = 0.0, intercept = 0.0;
};

inline LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
    require(x.size() == y.size() && x.size() >= 2, "linear_fit: need >= 2 points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = double(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    LinearFit out;
    out.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    out.intercept = (sy - out.slope * sx) / n;
    return out;
}

/// Trapezoid rule for uniformly sampled periodic integrands (spectrally
/// accurate on smooth periodic data).
inline double periodic_trapezoid(const std::vector<double>& f, double period) {
    double s = 0.0;
    for (double v : f) s += v;
    return s * period / double(f.size());
}

}  // namespace vortlab
