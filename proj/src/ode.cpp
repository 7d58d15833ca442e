#include "tricycle/ode.hpp"

#include <algorithm>
#include <cmath>

namespace tricycle {

namespace {

// Dormand-Prince 5(4) coefficients.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
// Error weights: 5th-order solution minus embedded 4th-order solution.
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

struct StepResult {
    bool accepted{false};
    double error{0.0};
    StateVec ynew;
    StateVec fnew;  // FSAL derivative at the new point
};

class Dopri5 {
  public:
    Dopri5(const OdeField& f, std::size_t n) : f_(f) {
        for (auto* k : {&k2_, &k3_, &k4_, &k5_, &k6_, &k7_, &ytmp_}) k->assign(n, 0.0);
    }

    StepResult step(double t, const StateVec& y, const StateVec& k1, double h,
                    double rel_tol, double abs_tol) {
        const std::size_t n = y.size();
        using P = std::pair<double, const StateVec&>;
        auto stage = [&](auto&&... terms) {
            for (std::size_t i = 0; i < n; ++i) {
                ytmp_[i] = y[i] + h * (... + (terms.first * terms.second[i]));
            }
        };
        stage(P{a21, k1});
        f_(t + c2 * h, ytmp_, k2_);
        stage(P{a31, k1}, P{a32, k2_});
        f_(t + c3 * h, ytmp_, k3_);
        stage(P{a41, k1}, P{a42, k2_}, P{a43, k3_});
        f_(t + c4 * h, ytmp_, k4_);
        stage(P{a51, k1}, P{a52, k2_}, P{a53, k3_}, P{a54, k4_});
        f_(t + c5 * h, ytmp_, k5_);
        stage(P{a61, k1}, P{a62, k2_}, P{a63, k3_}, P{a64, k4_}, P{a65, k5_});
        f_(t + h, ytmp_, k6_);

        StepResult r;
        r.ynew.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            r.ynew[i] = y[i] + h * (b1 * k1[i] + b3 * k3_[i] + b4 * k4_[i] + b5 * k5_[i] +
                                    b6 * k6_[i]);
        }
        r.fnew.resize(n);
        f_(t + h, r.ynew, r.fnew);

        double err = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double ei = h * (e1 * k1[i] + e3 * k3_[i] + e4 * k4_[i] + e5 * k5_[i] +
                                   e6 * k6_[i] + e7 * r.fnew[i]);
            const double sc = abs_tol + rel_tol * std::max(std::abs(y[i]), std::abs(r.ynew[i]));
            err += (ei / sc) * (ei / sc);
        }
        r.error = std::sqrt(err / static_cast<double>(n));
        r.accepted = r.error <= 1.0;
        return r;
    }

  private:
    const OdeField& f_;
    StateVec k2_, k3_, k4_, k5_, k6_, k7_, ytmp_;
};

// Cubic Hermite interpolation between accepted step endpoints.
StateVec hermite(double t, double t0, double t1, const StateVec& y0, const StateVec& f0,
                 const StateVec& y1, const StateVec& f1) {
    const double h = t1 - t0;
    const double s = (t - t0) / h;
    const double s2 = s * s, s3 = s2 * s;
    const double h00 = 2 * s3 - 3 * s2 + 1, h10 = s3 - 2 * s2 + s;
    const double h01 = -2 * s3 + 3 * s2, h11 = s3 - s2;
    StateVec out(y0.size());
    for (std::size_t i = 0; i < y0.size(); ++i) {
        out[i] = h00 * y0[i] + h * h10 * f0[i] + h01 * y1[i] + h * h11 * f1[i];
    }
    return out;
}

double initial_step(const OdeField& f, double t0, const StateVec& y0, const StateVec& f0,
                    double rel_tol, double abs_tol, double max_step) {
    double dy = 0.0, df = 0.0;
    for (std::size_t i = 0; i < y0.size(); ++i) {
        const double sc = abs_tol + rel_tol * std::abs(y0[i]);
        dy = std::max(dy, std::abs(y0[i]) / sc);
        df = std::max(df, std::abs(f0[i]) / sc);
    }
    double h = (df > 1e-10) ? 0.01 * dy / df : 1e-6;
    h = std::clamp(h, 1e-8, max_step);
    StateVec y1(y0.size()), f1(y0.size());
    for (std::size_t i = 0; i < y0.size(); ++i) y1[i] = y0[i] + h * f0[i];
    f(t0 + h, y1, f1);
    double ddf = 0.0;
    for (std::size_t i = 0; i < y0.size(); ++i) {
        const double sc = abs_tol + rel_tol * std::abs(y0[i]);
        ddf = std::max(ddf, std::abs(f1[i] - f0[i]) / sc / h);
    }
    const double bound = std::max(df, ddf);
    const double h1 = (bound > 1e-15) ? std::pow(0.01 / bound, 0.2) : 1e-3;
    return std::min({100.0 * h, h1, max_step});
}

}  // namespace

Trajectory integrate(const OdeField& field, StateVec y0, double t0, double t1,
                     const IntegratorSpec& spec, double sample_dt,
                     const std::string& field_name, const Params& params) {
    if (!(t1 > t0)) throw std::invalid_argument("integrate: t1 must exceed t0");
    if (!(sample_dt > 0.0)) throw std::invalid_argument("integrate: sample_dt must be positive");

    Trajectory traj;
    traj.meta = {field_name, params, spec};
    traj.times.push_back(t0);
    traj.states.push_back(y0);

    const std::size_t n = y0.size();
    long sample_idx = 1;
    auto next_sample = [&]() { return t0 + sample_dt * static_cast<double>(sample_idx); };

    // Emit every pending sample that falls inside (ta, tb]; exact step
    // endpoints are recorded as computed, interior points by interpolation.
    auto emit_through = [&](double ta, double tb, const StateVec& ya, const StateVec& fa,
                            const StateVec& yb, const StateVec& fb) {
        while (next_sample() <= tb + 1e-13) {
            const double ts = next_sample();
            if (std::abs(ts - tb) <= 1e-13) {
                traj.times.push_back(ts);
                traj.states.push_back(yb);
            } else {
                traj.times.push_back(ts);
                traj.states.push_back(hermite(ts, ta, tb, ya, fa, yb, fb));
            }
            ++sample_idx;
        }
    };

    if (spec.method == IntegratorSpec::Method::rk4_fixed) {
        if (!(spec.step > 0.0)) throw std::invalid_argument("integrate: step must be positive");
        StateVec k1(n), k2(n), k3(n), k4(n), ytmp(n), fnew(n);
        double t = t0;
        StateVec y = y0;
        long steps = 0;
        while (t < t1 - 1e-13) {
            const double h = std::min(spec.step, t1 - t);
            if (++steps > spec.max_steps) throw IntegrationError("integrate: max_steps exceeded");
            field(t, y, k1);
            for (std::size_t i = 0; i < n; ++i) ytmp[i] = y[i] + 0.5 * h * k1[i];
            field(t + 0.5 * h, ytmp, k2);
            for (std::size_t i = 0; i < n; ++i) ytmp[i] = y[i] + 0.5 * h * k2[i];
            field(t + 0.5 * h, ytmp, k3);
            for (std::size_t i = 0; i < n; ++i) ytmp[i] = y[i] + h * k3[i];
            field(t + h, ytmp, k4);
            StateVec ynew(n);
            for (std::size_t i = 0; i < n; ++i) {
                ynew[i] = y[i] + h / 6.0 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
            }
            field(t + h, ynew, fnew);
            emit_through(t, t + h, y, k1, ynew, fnew);
            y = std::move(ynew);
            t += h;
        }
        if (traj.times.back() < t1 - 1e-13) {
            traj.times.push_back(t1);
            traj.states.push_back(y);
        }
        return traj;
    }

    Dopri5 stepper(field, n);
    double t = t0;
    StateVec y = y0;
    StateVec f0(n);
    field(t0, y, f0);
    double h = initial_step(field, t0, y, f0, spec.rel_tol, spec.abs_tol, spec.max_step);
    long steps = 0;
    constexpr double kSafety = 0.9, kMinScale = 0.2, kMaxScale = 5.0;

    while (t < t1 - 1e-13) {
        h = std::min({h, spec.max_step, t1 - t});
        if (++steps > spec.max_steps) throw IntegrationError("integrate: max_steps exceeded");
        StepResult r = stepper.step(t, y, f0, h, spec.rel_tol, spec.abs_tol);
        if (r.accepted) {
            emit_through(t, t + h, y, f0, r.ynew, r.fnew);
            t += h;
            y = std::move(r.ynew);
            f0 = std::move(r.fnew);
            const double scale =
                (r.error > 1e-30) ? kSafety * std::pow(r.error, -0.2) : kMaxScale;
            h *= std::clamp(scale, kMinScale, kMaxScale);
        } else {
            h *= std::max(kMinScale, kSafety * std::pow(r.error, -0.2));
            if (h < 1e-14) throw IntegrationError("integrate: step size underflow");
        }
    }
    if (traj.times.back() < t1 - 1e-13) {
        traj.times.push_back(t1);
        traj.states.push_back(y);
    }
    return traj;
}

void integrate_to(const OdeField& field, StateVec& y, double t0, double t1,
                  const IntegratorSpec& spec) {
    if (t1 <= t0) return;
    Trajectory tr = integrate(field, y, t0, t1, spec, t1 - t0);
    y = tr.states.back();
}

OdeField unit_speed_wrap(OdeField field, std::function<double(const StateVec&)> speed) {
    return [field = std::move(field), speed = std::move(speed)](double t, const StateVec& y,
                                                                StateVec& dydt) {
        const double s = speed(y);
        if (s <= 1e-12) {
            throw DegenerateConfigError("unit_speed_wrap: speed below 1e-12");
        }
        field(t, y, dydt);
        for (auto& v : dydt) v /= s;
    };
}

}  // namespace tricycle
