#pragma once

#include <functional>
#include <string>
#include <vector>

#include "tricycle/types.hpp"

namespace tricycle {

using StateVec = std::vector<double>;
using OdeField = std::function<void(double t, const StateVec& y, StateVec& dydt)>;

struct IntegratorSpec {
    enum class Method { rk4_fixed, dopri45 };

    Method method = Method::dopri45;
    double step = 1e-3;       // fixed-step size (rk4_fixed)
    double rel_tol = 1e-10;   // adaptive tolerances
    double abs_tol = 1e-10;
    double max_step = 0.05;
    long max_steps = 5'000'000;
};

struct TrajectoryMeta {
    std::string field_name;
    Params params;
    IntegratorSpec spec;
};

struct Trajectory {
    std::vector<double> times;
    std::vector<StateVec> states;
    TrajectoryMeta meta;

    std::size_t size() const { return times.size(); }
};

/// Integrate y' = f(t, y) over [t0, t1], sampling at multiples of
/// sample_dt plus both endpoints. Dense samples between accepted adaptive
/// steps come from cubic Hermite interpolation of the step endpoints.
Trajectory integrate(const OdeField& field, StateVec y0, double t0, double t1,
                     const IntegratorSpec& spec, double sample_dt,
                     const std::string& field_name = "", const Params& params = {});

/// Advance a state from t0 to t1 without recording intermediate samples.
void integrate_to(const OdeField& field, StateVec& y, double t0, double t1,
                  const IntegratorSpec& spec);

/// Divide a field pointwise by a speed function of the state, turning the
/// x-projection into an arc-length parameterization.
OdeField unit_speed_wrap(OdeField field, std::function<double(const StateVec&)> speed);

}  // namespace tricycle
