#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "vortlab/core/error.hpp"

namespace vortlab {

/// Dense row-major array, ny rows by nx columns.
class Array2D {
  public:
    Array2D() = default;
    Array2D(std::size_t ny, std::size_t nx, double fill = 0.0)
        : ny_(ny), nx_(nx), v_(ny * nx, fill) {}

    double& operator()(std::size_t iy, std::size_t ix) { return v_[iy * nx_ + ix]; }
    double operator()(std::size_t iy, std::size_t ix) const { return v_[iy * nx_ + ix]; }

    std::size_t rows() const { return ny_; }
    std::size_t cols() const { return nx_; }
    std::size_t size() const { return v_.size(); }

    double* data() { return v_.data(); }
    const double* data() const { return v_.data(); }
    std::vector<double>& values() { return v_; }
    const std::vector<double>& values() const { return v_; }

    void fill(double x) { std::fill(v_.begin(), v_.end(), x); }

    double max_abs() const {
        double m = 0.0;
        for (double x : v_) m = std::max(m, std::abs(x));
        return m;
    }

    double mean() const {
        double s = 0.0;
        for (double x : v_) s += x;
        return v_.empty() ? 0.0 : s / double(v_.size());
    }

    bool all_finite() const {
        for (double x : v_)
            if (!std::isfinite(x)) return false;
        return true;
    }

  private:
    std::size_t ny_ = 0, nx_ = 0;
    std::vector<double> v_;
};

}  // namespace vortlab
