#include "tricycle/backlund.hpp"

#include <algorithm>
#include <cmath>

#include "tricycle/ode.hpp"

namespace tricycle {

double beta_rhs(double kappa, double beta, double L, int sign) {
    if (!(L > 0.0)) throw std::invalid_argument("beta_rhs: L must be positive");
    return -kappa + sign * 2.0 * std::sin(beta) / L;
}

namespace {

// Local cubic Lagrange interpolation of uniform samples.
class CubicInterp {
  public:
    CubicInterp(const std::vector<double>& f, double dt) : f_(f), dt_(dt) {}

    double operator()(double t) const {
        const auto n = static_cast<long>(f_.size());
        double u = t / dt_;
        long i = static_cast<long>(std::floor(u));
        i = std::clamp(i, 1L, n - 3);
        const double s = u - static_cast<double>(i);
        const double fm1 = f_[i - 1], f0 = f_[i], f1 = f_[i + 1], f2 = f_[i + 2];
        return fm1 * (-s * (s - 1) * (s - 2) / 6.0) + f0 * ((s + 1) * (s - 1) * (s - 2) / 2.0) +
               f1 * (-(s + 1) * s * (s - 2) / 2.0) + f2 * ((s + 1) * s * (s - 1) / 6.0);
    }

  private:
    const std::vector<double>& f_;
    double dt_;
};

std::vector<double> integrate_beta(const std::vector<double>& kappa, double dt, double L,
                                   double beta0, int sign) {
    CubicInterp kap(kappa, dt);
    OdeField f = [&](double t, const StateVec& y, StateVec& d) {
        d = {beta_rhs(kap(t), y[0], L, sign)};
    };
    IntegratorSpec spec;
    spec.rel_tol = spec.abs_tol = 1e-12;
    spec.max_step = dt;
    std::vector<double> beta(kappa.size());
    beta[0] = beta0;
    StateVec y = {beta0};
    for (std::size_t i = 1; i < kappa.size(); ++i) {
        integrate_to(f, y, dt * static_cast<double>(i - 1), dt * static_cast<double>(i), spec);
        beta[i] = y[0];
    }
    return beta;
}

double unit_speed_dev(const PlanarCurve& c) {
    const std::size_t n = c.pts.size();
    double worst = 0.0;
    for (std::size_t i = 2; i + 2 < n; ++i) {
        const Vec2 d = (c.pts[i - 2] - 8.0 * c.pts[i - 1] + 8.0 * c.pts[i + 1] - c.pts[i + 2]) *
                       (1.0 / (12.0 * c.dt));
        worst = std::max(worst, std::abs(d.norm() - 1.0));
    }
    return worst;
}

}  // namespace

BacklundResult backlund_transform(const PlanarCurve& c, double L, double beta0, int sign,
                                  const FrenetData* frenet) {
    if (!(L > 0.0)) throw std::invalid_argument("backlund_transform: L must be positive");
    FrenetData local;
    if (frenet == nullptr) {
        local = frenet_fd(c);
        frenet = &local;
    }
    const std::size_t n = c.pts.size();
    const bool auto_sign = (sign == 0);

    auto attempt = [&](int sg) {
        BacklundResult r;
        r.L = L;
        r.sign = sg;
        r.beta = integrate_beta(frenet->kappa, c.dt, L, beta0, sg);
        r.curve_out.dt = c.dt;
        r.curve_out.unit_speed = true;
        r.curve_out.pts.resize(n);
        r.kappa_closed.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double cb = std::cos(r.beta[i]), sb = std::sin(r.beta[i]);
            r.curve_out.pts[i] = c.pts[i] + L * (cb * frenet->T[i] + sb * frenet->N[i]);
            r.kappa_closed[i] = sg * 4.0 * sb / L - frenet->kappa[i];
        }
        r.max_unit_speed_dev = unit_speed_dev(r.curve_out);
        return r;
    };

    BacklundResult r = attempt(auto_sign ? +1 : sign);
    constexpr double kSpeedTol = 1e-6;
    if (r.max_unit_speed_dev > kSpeedTol) {
        if (!auto_sign) {
            throw NonUnitEnergyError(
                "backlund_transform: output not unit speed; the other sign convention applies");
        }
        r = attempt(-1);
        if (r.max_unit_speed_dev > kSpeedTol) {
            throw NonUnitEnergyError("backlund_transform: no sign convention gives unit speed");
        }
    }

    const FrenetData out_fr = frenet_fd(r.curve_out);
    r.kappa_fd = out_fr.kappa;
    r.kappa_agreement = 0.0;
    for (std::size_t i = 5; i + 5 < n; ++i) {
        r.kappa_agreement =
            std::max(r.kappa_agreement, std::abs(r.kappa_fd[i] - r.kappa_closed[i]));
    }
    if (r.kappa_agreement > 1e-6) {
        throw std::runtime_error(
            "backlund_transform: closed-form and FD curvature disagree beyond 1e-6");
    }
    std::vector<double> t(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = c.dt * static_cast<double>(i);
    r.kappa_out = curvature_series_from_samples(t, r.kappa_closed);
    return r;
}

std::pair<double, double> soliton_constants_from_elastica(double A, double B, double L) {
    if (!(L > 0.0)) throw std::invalid_argument("soliton constants: L must be positive");
    return {-0.5 * B - 4.0 * A / (L * L), -A + 4.0 / (L * L)};
}

}  // namespace tricycle
