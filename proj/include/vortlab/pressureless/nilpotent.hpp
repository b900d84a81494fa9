#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <functional>
#include <vector>

#include "vortlab/core/error.hpp"
#include "vortlab/core/rng.hpp"

namespace vortlab::pressureless {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Maximum absolute row sum (the norm used throughout this module).
inline double row_sum_norm(const Matrix& a) {
    double m = 0.0;
    for (Eigen::Index i = 0; i < a.rows(); ++i) m = std::max(m, a.row(i).lpNorm<1>());
    return m;
}

/// Velocity data with pointwise nilpotent gradient.  Either the chained
/// form u_i = u_i(x_{i+1}) (strictly upper-triangular Jacobian by
/// construction) or a general field with an analytic Jacobian callback.
class NilpotentFlow {
  public:
    using Component = std::function<double(double)>;

    /// Chain flow: u_i(x) = f_i(x_{i+1}) for i = 1..d-1, last component 0.
    static NilpotentFlow chain(int d, std::vector<Component> f, std::vector<Component> df) {
        require(d >= 2, "NilpotentFlow: need d >= 2");
        require(int(f.size()) == d - 1 && df.size() == f.size(),
                "NilpotentFlow: chain needs d-1 components with derivatives");
        NilpotentFlow out;
        out.d_ = d;
        out.chain_f_ = std::move(f);
        out.chain_df_ = std::move(df);
        out.is_chain_ = true;
        return out;
    }

    /// Default chain with u_i = -sin(x_{i+1}): |du| <= 1 with equality at 0.
    static NilpotentFlow sine_chain(int d) {
        std::vector<Component> f(d - 1, [](double x) { return -std::sin(x); });
        std::vector<Component> df(d - 1, [](double x) { return -std::cos(x); });
        return chain(d, std::move(f), std::move(df));
    }

    static NilpotentFlow general(int d, std::function<Vector(const Vector&)> u,
                                 std::function<Matrix(const Vector&)> grad) {
        NilpotentFlow out;
        out.d_ = d;
        out.u_ = std::move(u);
        out.grad_ = std::move(grad);
        out.is_chain_ = false;
        return out;
    }

    /// Orthogonal conjugation x -> Q u(Q^T x): nilpotency is basis-free.
    NilpotentFlow conjugated(const Matrix& q) const {
        NilpotentFlow base = *this;
        return general(
            d_, [base, q](const Vector& x) -> Vector { return q * base.velocity(q.transpose() * x); },
            [base, q](const Vector& x) -> Matrix {
                return q * base.jacobian(q.transpose() * x) * q.transpose();
            });
    }

    int dim() const { return d_; }
    bool is_chain() const { return is_chain_; }

    Vector velocity(const Vector& x) const {
        if (!is_chain_) return u_(x);
        Vector v = Vector::Zero(d_);
        for (int i = 0; i + 1 < d_; ++i) v(i) = chain_f_[std::size_t(i)](x(i + 1));
        return v;
    }

    Matrix jacobian(const Vector& x) const {
        if (!is_chain_) return grad_(x);
        Matrix a = Matrix::Zero(d_, d_);
        for (int i = 0; i + 1 < d_; ++i) a(i, i + 1) = chain_df_[std::size_t(i)](x(i + 1));
        return a;
    }

  private:
    int d_ = 0;
    bool is_chain_ = false;
    std::vector<Component> chain_f_, chain_df_;
    std::function<Vector(const Vector&)> u_;
    std::function<Matrix(const Vector&)> grad_;
};

struct NilpotencyReport {
    double max_power_norm = 0.0;   // max over samples of ||A0^d||
    double max_det_defect = 0.0;   // max over samples, t of |det(I + t A0) - 1|
    bool nilpotent = false;
};

/// Deterministic low-discrepancy sample of [-pi, pi]^d plus the origin.
inline std::vector<Vector> sample_points(int d, std::size_t count) {
    static const std::uint64_t primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31,
                                           37, 41, 43, 47, 53, 59, 61, 67, 71};
    std::vector<Vector> pts;
    pts.reserve(count + 1);
    pts.push_back(Vector::Zero(d));
    for (std::size_t k = 1; k <= count; ++k) {
        Vector x(d);
        for (int i = 0; i < d; ++i)
            x(i) = (halton(k, primes[std::size_t(i) % 20]) - 0.5) * 2.0 * M_PI;
        pts.push_back(x);
    }
    return pts;
}

inline NilpotencyReport check_nilpotent(const NilpotentFlow& flow,
                                        const std::vector<Vector>& points,
                                        const std::vector<double>& t_grid = {-2.0, -1.0, -0.5, 0.5,
                                                                             1.0, 2.0, 5.0}) {
    NilpotencyReport rep;
    for (const Vector& x : points) {
        Matrix a0 = flow.jacobian(x);
        Matrix p = a0;
        for (int m = 1; m < flow.dim(); ++m) p = p * a0;
        rep.max_power_norm = std::max(rep.max_power_norm, row_sum_norm(p));
        const int d = flow.dim();
        Matrix eye = Matrix::Identity(d, d);
        for (double t : t_grid)
            rep.max_det_defect =
                std::max(rep.max_det_defect, std::abs((eye + t * a0).determinant() - 1.0));
    }
    rep.nilpotent = rep.max_power_norm < 1e-10 && rep.max_det_defect < 1e-8;
    return rep;
}

/// Gradient along a trajectory: A(t) = grad u(Phi_t(x), t), by the finite
/// Neumann sum, by solving (I + t A0), and by integrating dA/dt = -A^2.
struct GradientTrajectory {
    Vector x;
    std::vector<double> times;
    std::vector<Matrix> neumann;     // sum_{m=0}^{d-2} (-t)^m A0^{m+1}
    std::vector<Matrix> resolvent;   // A0 (I + t A0)^{-1}
    std::vector<Matrix> ode;         // RK4 on dA/dt = -A^2
    double max_route_diff = 0.0;     // neumann vs resolvent
    double max_ode_diff = 0.0;       // neumann vs ode
};

inline Matrix neumann_gradient(const Matrix& a0, double t) {
    const int d = int(a0.rows());
    Matrix term = a0;
    Matrix sum = a0;
    for (int m = 1; m <= d - 2; ++m) {
        term = -t * (term * a0);
        sum += term;
    }
    return sum;
}

inline GradientTrajectory evolve_gradient(const NilpotentFlow& flow, const Vector& x,
                                          const std::vector<double>& t_grid) {
    GradientTrajectory out;
    out.x = x;
    out.times = t_grid;
    const Matrix a0 = flow.jacobian(x);
    const int d = flow.dim();
    const Matrix eye = Matrix::Identity(d, d);

    for (double t : t_grid) {
        out.neumann.push_back(neumann_gradient(a0, t));
        Matrix m = eye + t * a0;
        Eigen::PartialPivLU<Matrix> lu(m);
        require(std::abs(lu.determinant()) > 1e-8,
                "evolve_gradient: (I + t A0) singular; data is not nilpotent");
        out.resolvent.push_back(a0 * lu.inverse());
    }

    // RK4 on the matrix Riccati ODE, sampled onto t_grid
    Matrix a = a0;
    double t = 0.0;
    auto rhs = [](const Matrix& m) -> Matrix { return -(m * m); };
    for (double tk : t_grid) {
        require(tk >= t - 1e-12, "evolve_gradient: t_grid must be nondecreasing from 0");
        while (t < tk - 1e-14) {
            double dt = std::min(1e-3, tk - t);
            Matrix k1 = rhs(a);
            Matrix k2 = rhs(a + 0.5 * dt * k1);
            Matrix k3 = rhs(a + 0.5 * dt * k2);
            Matrix k4 = rhs(a + dt * k3);
            a += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            t += dt;
        }
        out.ode.push_back(a);
    }

    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        out.max_route_diff =
            std::max(out.max_route_diff, row_sum_norm(out.neumann[i] - out.resolvent[i]));
        out.max_ode_diff = std::max(out.max_ode_diff, row_sum_norm(out.neumann[i] - out.ode[i]));
    }
    return out;
}

struct BlowupRow {
    int d;
    double t;
    double norm_at_origin;
    double norm_global;
    double closed_form;  // (1 - t^{d-1}) / (1 - t)
    double bound;        // ||A0|| / (1 - t ||A0||)
};

/// Norm table for the sine-chain family across dimensions.
inline std::vector<BlowupRow> blowup_family_curve(const std::vector<int>& d_list,
                                                  const std::vector<double>& t_grid,
                                                  std::size_t samples = 2000) {
    std::vector<BlowupRow> table;
    for (int d : d_list) {
        NilpotentFlow flow = NilpotentFlow::sine_chain(d);
        auto pts = sample_points(d, samples);
        const Matrix a0_origin = flow.jacobian(pts[0]);
        const double a0_norm = 1.0;  // |d/dx sin| <= 1 with equality at 0
        for (double t : t_grid) {
            BlowupRow row;
            row.d = d;
            row.t = t;
            row.norm_at_origin = row_sum_norm(neumann_gradient(a0_origin, t));
            row.norm_global = 0.0;
            for (const Vector& x : pts)
                row.norm_global =
                    std::max(row.norm_global, row_sum_norm(neumann_gradient(flow.jacobian(x), t)));
            row.closed_form = (t == 1.0) ? double(d - 1) : (1.0 - std::pow(t, d - 1)) / (1.0 - t);
            row.bound = a0_norm / (1.0 - t * a0_norm);
            table.push_back(row);
        }
    }
    return table;
}

struct LagrangianMapResult {
    std::vector<Vector> mapped;
    double max_volume_defect = 0.0;  // |det grad Phi_t - 1| by 4th-order FD
};

/// Phi_t(x) = x + t u0(x); straight-line trajectories.
inline LagrangianMapResult lagrangian_map(const NilpotentFlow& flow,
                                          const std::vector<Vector>& points, double t,
                                          double fd_step = 1e-2) {
    LagrangianMapResult out;
    const int d = flow.dim();
    auto phi = [&](const Vector& x) -> Vector { return x + t * flow.velocity(x); };
    for (const Vector& x : points) {
        out.mapped.push_back(phi(x));
        Matrix jac(d, d);
        for (int k = 0; k < d; ++k) {
            Vector e = Vector::Zero(d);
            e(k) = fd_step;
            Vector f1 = phi(x + e), f_1 = phi(x - e), f2 = phi(x + 2.0 * e), f_2 = phi(x - 2.0 * e);
            jac.col(k) = (8.0 * (f1 - f_1) - (f2 - f_2)) / (12.0 * fd_step);
        }
        out.max_volume_defect = std::max(out.max_volume_defect, std::abs(jac.determinant() - 1.0));
    }
    return out;
}

/// Deterministic random orthogonal matrix (QR of a seeded Gaussian matrix).
inline Matrix random_orthogonal(int d, CounterRng& rng) {
    Matrix g(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) g(i, j) = rng.normal();
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    return q;
}

}  // namespace vortlab::pressureless
