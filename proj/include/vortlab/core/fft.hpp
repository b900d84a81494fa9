#pragma once

#include <fftw3.h>

#include <complex>
#include <cstddef>
#include <vector>

#include "vortlab/core/array2d.hpp"
#include "vortlab/core/error.hpp"

namespace vortlab {

using cplx = std::complex<double>;

/// Real 1D FFT pair with Fourier-series normalization: forward returns
/// coefficients c_k with f(x) = sum_k c_k e^{ikx} (half spectrum, k=0..n/2).
/// Plans are per-instance; FFTW_ESTIMATE keeps planning deterministic.
class RealFft1D {
  public:
    explicit RealFft1D(std::size_t n) : n_(n) {
        require(n >= 4 && n % 2 == 0, "RealFft1D: n must be even and >= 4");
        in_ = fftw_alloc_real(n);
        out_ = fftw_alloc_complex(n / 2 + 1);
        fwd_ = fftw_plan_dft_r2c_1d(int(n), in_, out_, FFTW_ESTIMATE);
        bwd_ = fftw_plan_dft_c2r_1d(int(n), out_, in_, FFTW_ESTIMATE);
    }
    RealFft1D(const RealFft1D&) = delete;
    RealFft1D& operator=(const RealFft1D&) = delete;
    ~RealFft1D() {
        fftw_destroy_plan(fwd_);
        fftw_destroy_plan(bwd_);
        fftw_free(in_);
        fftw_free(out_);
    }

    std::size_t n() const { return n_; }
    std::size_t n_modes() const { return n_ / 2 + 1; }

    void forward(const std::vector<double>& f, std::vector<cplx>& c) {
        for (std::size_t i = 0; i < n_; ++i) in_[i] = f[i];
        fftw_execute(fwd_);
        c.resize(n_modes());
        const double s = 1.0 / double(n_);
        for (std::size_t k = 0; k < n_modes(); ++k) c[k] = cplx(out_[k][0], out_[k][1]) * s;
    }

    void inverse(const std::vector<cplx>& c, std::vector<double>& f) {
        require(c.size() == n_modes(), "RealFft1D::inverse: bad spectrum size");
        for (std::size_t k = 0; k < n_modes(); ++k) {
            out_[k][0] = c[k].real();
            out_[k][1] = c[k].imag();
        }
        fftw_execute(bwd_);
        f.resize(n_);
        for (std::size_t i = 0; i < n_; ++i) f[i] = in_[i];
    }

  private:
    std::size_t n_;
    double* in_;
    fftw_complex* out_;
    fftw_plan fwd_, bwd_;
};

/// Real 2D FFT pair (row-major ny x nx fields, spectrum ny x (nx/2+1)).
class RealFft2D {
  public:
    RealFft2D(std::size_t ny, std::size_t nx) : ny_(ny), nx_(nx) {
        require(nx >= 4 && ny >= 4 && nx % 2 == 0 && ny % 2 == 0,
                "RealFft2D: nx, ny must be even and >= 4");
        in_ = fftw_alloc_real(nx * ny);
        out_ = fftw_alloc_complex(ny * (nx / 2 + 1));
        fwd_ = fftw_plan_dft_r2c_2d(int(ny), int(nx), in_, out_, FFTW_ESTIMATE);
        bwd_ = fftw_plan_dft_c2r_2d(int(ny), int(nx), out_, in_, FFTW_ESTIMATE);
    }
    RealFft2D(const RealFft2D&) = delete;
    RealFft2D& operator=(const RealFft2D&) = delete;
    ~RealFft2D() {
        fftw_destroy_plan(fwd_);
        fftw_destroy_plan(bwd_);
        fftw_free(in_);
        fftw_free(out_);
    }

    std::size_t nx() const { return nx_; }
    std::size_t ny() const { return ny_; }
    std::size_t nkx() const { return nx_ / 2 + 1; }
    std::size_t n_modes() const { return ny_ * nkx(); }

    void forward(const Array2D& f, std::vector<cplx>& c) {
        require(f.rows() == ny_ && f.cols() == nx_, "RealFft2D::forward: shape mismatch");
        for (std::size_t i = 0; i < nx_ * ny_; ++i) in_[i] = f.data()[i];
        fftw_execute(fwd_);
        c.resize(n_modes());
        const double s = 1.0 / double(nx_ * ny_);
        for (std::size_t k = 0; k < n_modes(); ++k) c[k] = cplx(out_[k][0], out_[k][1]) * s;
    }

    void inverse(const std::vector<cplx>& c, Array2D& f) {
        require(c.size() == n_modes(), "RealFft2D::inverse: bad spectrum size");
        for (std::size_t k = 0; k < n_modes(); ++k) {
            out_[k][0] = c[k].real();
            out_[k][1] = c[k].imag();
        }
        fftw_execute(bwd_);
        f = Array2D(ny_, nx_);
        for (std::size_t i = 0; i < nx_ * ny_; ++i) f.data()[i] = in_[i];
    }

  private:
    std::size_t ny_, nx_;
    double* in_;
    fftw_complex* out_;
    fftw_plan fwd_, bwd_;
};

}  // namespace vortlab
