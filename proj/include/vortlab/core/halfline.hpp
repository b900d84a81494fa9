#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include "vortlab/core/error.hpp"
#include "vortlab/core/quadrature.hpp"

namespace vortlab {

/// Half-line grid under the algebraic map z = s/(1-s), s in [0,1) uniform.
/// Resolves O(1/z)-type tails with finitely many nodes, and turns improper
/// integrals over [0,inf) into finite sums.
class HalfLineGrid {
  public:
    explicit HalfLineGrid(std::size_t n) : n_(n) {
        require(n >= 16, "HalfLineGrid: need n >= 16");
        ds_ = 1.0 / double(n);
        s_.resize(n);
        z_.resize(n);
        for (std::size_t j = 0; j < n; ++j) {
            s_[j] = double(j) * ds_;
            z_[j] = s_[j] / (1.0 - s_[j]);
        }
    }

    std::size_t size() const { return n_; }
    double ds() const { return ds_; }
    const std::vector<double>& z() const { return z_; }
    double z(std::size_t j) const { return z_[j]; }
    double s(std::size_t j) const { return s_[j]; }
    double z_max() const { return z_.back(); }

    std::vector<double> sample(const std::function<double(double)>& f) const {
        std::vector<double> out(n_);
        for (std::size_t j = 0; j < n_; ++j) out[j] = f(z_[j]);
        return out;
    }

    // d/ds by 4th-order finite differences, one-sided at the ends.
    std::vector<double> deriv_s(const std::vector<double>& f) const {
        require(f.size() == n_, "deriv_s: size mismatch");
        std::vector<double> d(n_);
        const double h = ds_;
        auto at = [&](std::size_t j) { return f[j]; };
        for (std::size_t j = 0; j < n_; ++j) {
            if (j >= 2 && j + 2 < n_) {
                d[j] = (-at(j + 2) + 8.0 * at(j + 1) - 8.0 * at(j - 1) + at(j - 2)) / (12.0 * h);
            } else if (j < 2) {
                d[j] = (-25.0 * at(j) + 48.0 * at(j + 1) - 36.0 * at(j + 2) + 16.0 * at(j + 3) -
                        3.0 * at(j + 4)) /
                       (12.0 * h);
            } else {
                d[j] = (25.0 * at(j) - 48.0 * at(j - 1) + 36.0 * at(j - 2) - 16.0 * at(j - 3) +
                        3.0 * at(j - 4)) /
                       (12.0 * h);
            }
        }
        return d;
    }

    /// d/dz on the mapped grid: dz/ds = 1/(1-s)^2.
    std::vector<double> deriv_z(const std::vector<double>& f) const {
        std::vector<double> d = deriv_s(f);
        for (std::size_t j = 0; j < n_; ++j) {
            double oms = 1.0 - s_[j];
            d[j] *= oms * oms;
        }
        return d;
    }

    /// D = z d/dz = s(1-s) d/ds.
    std::vector<double> scaling_deriv(const std::vector<double>& f) const {
        std::vector<double> d = deriv_s(f);
        for (std::size_t j = 0; j < n_; ++j) d[j] *= s_[j] * (1.0 - s_[j]);
        return d;
    }

    /// int_0^zmax f dz, transformed to the s grid (4th order).
    double integrate(const std::vector<double>& f) const {
        std::vector<double> g(n_);
        for (std::size_t j = 0; j < n_; ++j) {
            double oms = 1.0 - s_[j];
            g[j] = f[j] / (oms * oms);
        }
        return integrate_samples(s_, g) ;
    }

    /// Cumulative integral from z=0: I[j] = int_0^{z_j} f dz.
    std::vector<double> cumulative_z_from_left(const std::vector<double>& f) const {
        std::vector<double> g(n_);
        for (std::size_t j = 0; j < n_; ++j) {
            double oms = 1.0 - s_[j];
            g[j] = f[j] / (oms * oms);
        }
        return cumulative_from_left(s_, g);
    }

    /// Cumulative inward integral: I[j] = int_{z_j}^{z_max} f dz.
    std::vector<double> cumulative_z_from_right(const std::vector<double>& f) const {
        std::vector<double> g(n_);
        for (std::size_t j = 0; j < n_; ++j) {
            double oms = 1.0 - s_[j];
            g[j] = f[j] / (oms * oms);
        }
        return cumulative_from_right(s_, g);
    }

    /// Extrapolate samples to s=0 by a cubic through nodes 1..4 (for limits
    /// of quotients whose node-0 value is 0/0).
    static double limit_at_zero(const std::vector<double>& q, double ds) {
        // Lagrange evaluation at s=0 of cubic through (ds,q1)...(4ds,q4)
        (void)ds;
        return 4.0 * q[1] - 6.0 * q[2] + 4.0 * q[3] - q[4];
    }

  private:
    std::size_t n_;
    double ds_;
    std::vector<double> s_, z_;
};

/// Tail model for integrals int_z^infty f/s ds truncated at z_max.
enum class TailModel { None, InverseR };

/// L(f)(z) = int_z^infty f(s)/s ds on the mapped grid.  With
/// TailModel::InverseR the tail beyond z_max is estimated assuming f ~ c/s
/// there (correction = f(z_max)), which is exact for 1/s tails.
inline std::vector<double> half_line_L(const HalfLineGrid& g, const std::vector<double>& f,
                                       TailModel tail = TailModel::None) {
    const std::size_t n = g.size();
    std::vector<double> integrand(n);
    integrand[0] = 0.0;  // f(0)/0 never used: cumulative starts from node 1 side
    for (std::size_t j = 1; j < n; ++j) integrand[j] = f[j] / g.z(j);
    // the first cell needs f/z at z=0; use the limit f'(0) via extrapolation
    {
        std::vector<double> q(5, 0.0);
        for (std::size_t j = 1; j <= 4; ++j) q[j] = f[j] / g.z(j);
        integrand[0] = HalfLineGrid::limit_at_zero(q, g.ds());
    }
    std::vector<double> out = g.cumulative_z_from_right(integrand);
    if (tail == TailModel::InverseR) {
        const double corr = f[n - 1];
        for (std::size_t j = 0; j < n; ++j) out[j] += corr;
    }
    return out;
}

}  // namespace vortlab
