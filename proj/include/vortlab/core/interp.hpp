#pragma once

#include <cmath>
#include <cstddef>

#include "vortlab/core/array2d.hpp"

namespace vortlab {

namespace detail_interp {
// Catmull-Rom cubic through four equispaced samples, t in [0,1] between p1, p2.
inline double cr(double p0, double p1, double p2, double p3, double t) {
    return p1 + 0.5 * t *
                    (p2 - p0 +
                     t * (2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3 + t * (3.0 * (p1 - p2) + p3 - p0)));
}
}  // namespace detail_interp

/// Bicubic interpolation of a periodic field sampled at x_i = x0 + i dx,
/// y_j = y0 + j dy (period nx dx by ny dy).
class BicubicPeriodic {
  public:
    BicubicPeriodic(const Array2D& f, double x0, double y0, double dx, double dy)
        : f_(&f), x0_(x0), y0_(y0), dx_(dx), dy_(dy) {}

    double operator()(double x, double y) const {
        const Array2D& f = *f_;
        const std::ptrdiff_t nx = std::ptrdiff_t(f.cols()), ny = std::ptrdiff_t(f.rows());
        double u = (x - x0_) / dx_, v = (y - y0_) / dy_;
        std::ptrdiff_t i = std::ptrdiff_t(std::floor(u)), j = std::ptrdiff_t(std::floor(v));
        double tu = u - double(i), tv = v - double(j);
        auto wrap = [](std::ptrdiff_t a, std::ptrdiff_t n) {
            a %= n;
            return std::size_t(a < 0 ? a + n : a);
        };
        double col[4];
        for (int m = -1; m <= 2; ++m) {
            std::size_t jj = wrap(j + m, ny);
            col[m + 1] = detail_interp::cr(f(jj, wrap(i - 1, nx)), f(jj, wrap(i, nx)),
                                           f(jj, wrap(i + 1, nx)), f(jj, wrap(i + 2, nx)), tu);
        }
        return detail_interp::cr(col[0], col[1], col[2], col[3], tv);
    }

  private:
    const Array2D* f_;
    double x0_, y0_, dx_, dy_;
};

/// Bicubic interpolation on a bounded window (stencils clamp at edges).
class BicubicClamped {
  public:
    BicubicClamped(const Array2D& f, double x0, double y0, double dx, double dy)
        : f_(&f), x0_(x0), y0_(y0), dx_(dx), dy_(dy) {}

    double operator()(double x, double y) const {
        const Array2D& f = *f_;
        const std::ptrdiff_t nx = std::ptrdiff_t(f.cols()), ny = std::ptrdiff_t(f.rows());
        double u = (x - x0_) / dx_, v = (y - y0_) / dy_;
        std::ptrdiff_t i = std::ptrdiff_t(std::floor(u)), j = std::ptrdiff_t(std::floor(v));
        if (i < 0) i = 0;
        if (i > nx - 2) i = nx - 2;
        if (j < 0) j = 0;
        if (j > ny - 2) j = ny - 2;
        double tu = u - double(i), tv = v - double(j);
        auto clamp = [](std::ptrdiff_t a, std::ptrdiff_t n) {
            if (a < 0) a = 0;
            if (a >= n) a = n - 1;
            return std::size_t(a);
        };
        double col[4];
        for (int m = -1; m <= 2; ++m) {
            std::size_t jj = clamp(j + m, ny);
            col[m + 1] = detail_interp::cr(f(jj, clamp(i - 1, nx)), f(jj, clamp(i, nx)),
                                           f(jj, clamp(i + 1, nx)), f(jj, clamp(i + 2, nx)), tu);
        }
        return detail_interp::cr(col[0], col[1], col[2], col[3], tv);
    }

  private:
    const Array2D* f_;
    double x0_, y0_, dx_, dy_;
};

}  // namespace vortlab
