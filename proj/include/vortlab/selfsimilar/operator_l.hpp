#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "vortlab/core/error.hpp"
#include "vortlab/core/halfline.hpp"

namespace vortlab::selfsimilar {

/// Function on [0, inf) sampled on the mapped grid, with the boundary jet
/// (g(0), g'(0)) kept alongside (derivatives at z=0 via one-sided stencils).
struct HalfLineFn {
    std::vector<double> v;

    double value0() const { return v[0]; }
};

/// Boundary jet helpers on the mapped grid (z-derivatives at z = 0).
inline double deriv0(const HalfLineGrid& g, const std::vector<double>& f) {
    // f_z(0) = f_s(0) since dz/ds = 1 at s = 0
    const double h = g.ds();
    return (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]) / (12.0 * h);
}

inline double deriv0_second(const HalfLineGrid& g, const std::vector<double>& f) {
    // f_zz = (1-s)^4 f_ss - 2 (1-s)^3 f_s; at s = 0: f_ss(0) - 2 f_s(0)
    const double h = g.ds();
    double fs = deriv0(g, f);
    double fss = (45.0 * f[0] - 154.0 * f[1] + 214.0 * f[2] - 156.0 * f[3] + 61.0 * f[4] -
                  10.0 * f[5]) /
                 (12.0 * h * h);
    return fss - 2.0 * fs;
}

inline double deriv0_third(const HalfLineGrid& g, const std::vector<double>& f) {
    // f_zzz at 0 = f_sss - 6 f_ss + 6 f_s  (from z = s/(1-s) chain rule at s=0)
    const double h = g.ds();
    double fs = deriv0(g, f);
    double fss = (45.0 * f[0] - 154.0 * f[1] + 214.0 * f[2] - 156.0 * f[3] + 61.0 * f[4] -
                  10.0 * f[5]) /
                 (12.0 * h * h);
    double fsss = (-49.0 * f[0] + 232.0 * f[1] - 461.0 * f[2] + 496.0 * f[3] - 307.0 * f[4] +
                   104.0 * f[5] - 15.0 * f[6]) /
                  (8.0 * h * h * h);
    return fsss - 6.0 * fss + 6.0 * fs;
}

enum class LVariant { Toy, ExtendedRadial };

/// L(g) = g + z g' - 2 g / (1+z); the extended radial variant subtracts the
/// nonlocal term z/(1+z)^2 * int_z^inf g/s ds as well.
inline std::vector<double> apply_L(const HalfLineGrid& g, const std::vector<double>& f,
                                   LVariant variant = LVariant::Toy) {
    require(f.size() == g.size(), "apply_L: size mismatch");
    std::vector<double> dz = g.scaling_deriv(f);  // z f'
    std::vector<double> out(f.size());
    for (std::size_t j = 0; j < f.size(); ++j) {
        const double z = g.z(j);
        out[j] = f[j] + dz[j] - 2.0 * f[j] / (1.0 + z);
    }
    if (variant == LVariant::ExtendedRadial) {
        std::vector<double> lf = half_line_L(g, f, TailModel::None);
        for (std::size_t j = 0; j < f.size(); ++j) {
            const double z = g.z(j);
            out[j] -= z / ((1.0 + z) * (1.0 + z)) * lf[j];
        }
    }
    return out;
}

struct InvertResult {
    std::vector<double> g;
    double compatibility_defect = 0.0;  // f'(0) + 2 f(0)
};

/// Solve L(g) = f.  Solvable in C^1 iff f'(0) + 2 f(0) = 0; the returned
/// solution is normalized by g'(0) = 0 (the kernel z/(1+z)^2 carries the
/// remaining freedom).  The quadrature handles t -> 0 through the enforced
/// double zero of F(t) = f(t) + f(0)(t-1)/(t+1).
inline InvertResult invert_L(const HalfLineGrid& g, const std::vector<double>& f,
                             double tol = 1e-6) {
    require(f.size() == g.size(), "invert_L: size mismatch");
    const std::size_t n = g.size();
    InvertResult out;
    const double f0 = f[0];
    out.compatibility_defect = deriv0(g, f) + 2.0 * f0;
    require(std::abs(out.compatibility_defect) < tol,
            "invert_L: compatibility f'(0) + 2 f(0) = " +
                std::to_string(out.compatibility_defect) + " exceeds tolerance");

    // rho(t) = (t+1)^2 F(t) / t^2 with F(0) = F'(0) = 0; rho(0) = F''(0)/2
    std::vector<double> big_f(n), rho(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double t = g.z(j);
        big_f[j] = f[j] + f0 * (t - 1.0) / (t + 1.0);
        if (j > 0) {
            const double r = (t + 1.0) / t;
            rho[j] = big_f[j] * r * r;
        }
    }
    // phi'' at 0 of (t-1)/(t+1) is -4
    rho[0] = 0.5 * (deriv0_second(g, f) - 4.0 * f0);

    std::vector<double> integral = g.cumulative_z_from_left(rho);
    out.g.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double z = g.z(j);
        out.g[j] = -f0 + z / ((z + 1.0) * (z + 1.0)) * integral[j];
    }
    // pin g'(0) = 0 exactly by removing the kernel component (kernel'(0) = 1)
    const double gp0 = deriv0(g, out.g);
    for (std::size_t j = 0; j < n; ++j) {
        const double z = g.z(j);
        out.g[j] -= gp0 * z / ((1.0 + z) * (1.0 + z));
    }
    return out;
}

/// The stable unperturbed profile F0(z) = 1/(1+z) and the kernel element.
inline std::vector<double> profile_f0(const HalfLineGrid& g) {
    std::vector<double> f(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) f[j] = 1.0 / (1.0 + g.z(j));
    return f;
}

inline std::vector<double> kernel_element(const HalfLineGrid& g) {
    std::vector<double> k(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) {
        const double z = g.z(j);
        k[j] = z / ((1.0 + z) * (1.0 + z));
    }
    return k;
}

}  // namespace vortlab::selfsimilar
