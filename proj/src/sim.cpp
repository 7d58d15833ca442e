#include "tricycle/sim.hpp"

#include <cmath>
#include <limits>

namespace tricycle {

OdeField geodesic_ode_field(const Params& P) {
    return [P](double, const StateVec& y, StateVec& d) {
        PhaseState s = PhaseState::from_array(
            {y[0], y[1], y[2], y[3], y[4], y[5], y[6], y[7]});
        const PhaseState ds = geodesic_field(s, P);
        const auto a = ds.to_array();
        d.assign(a.begin(), a.end());
    };
}

OdeField singular_ode_field(const Params& P) {
    return [P](double, const StateVec& y, StateVec& d) {
        const ConfigPoint q{y[0], y[1], y[2], y[3]};
        const SingularVelocity v = singular_field(q, P);
        d = {v.dq.x1, v.dq.x2, v.dq.alpha1, v.dq.alpha2};
    };
}

OdeField singular_equal_ode_field() {
    return [](double, const StateVec& y, StateVec& d) {
        const ConfigPoint q{y[0], y[1], y[2], y[3]};
        const ConfigPoint v = singular_field_equal(q);
        d = {v.x1, v.x2, v.alpha1, v.alpha2};
    };
}

OdeField reduced_ode_field(double p1, double p2) {
    // state: (x1, x2, alpha1, alpha2, gamma)
    return [p1, p2](double, const StateVec& y, StateVec& d) {
        const ReducedState r{y[2], y[3], y[4]};
        const ReducedState dr = reduced_field(r, p1, p2);
        d = {std::cos(y[4]), std::sin(y[4]), dr.alpha1, dr.alpha2, dr.gamma};
    };
}

PhaseState circle_example_ic() {
    // gamma(0) = 0, rear point m2 at the circle center
    PhaseState s;
    s.q = {0.0, 0.0, 0.0, -M_PI / 2.0};
    s.p1 = 0.0;
    s.p2 = 0.0;
    s.eta1 = 0.0;
    s.eta2 = 1.0;
    return s;
}

namespace {

constexpr double kEnterReduced = 0.2;  // dist(alpha2 - alpha1, 0 mod 2pi)
constexpr double kExitReduced = 0.3;

double collision_dist(double alpha1, double alpha2) {
    return angle_dist(alpha2, alpha1);
}

}  // namespace

GeodesicRun run_geodesic(const PhaseState& s0, const Params& P, double t0, double t1,
                         const IntegratorSpec& spec, double sample_dt) {
    if (!(t1 > t0)) throw std::invalid_argument("run_geodesic: t1 must exceed t0");
    GeodesicRun run;
    run.params = P;
    const bool switching = P.equal_lengths();
    const OdeField full = geodesic_ode_field(P);
    const OdeField reduced = reduced_ode_field(s0.p1, s0.p2);

    enum class Chart { full, reduced };
    Chart chart = Chart::full;
    auto a0 = s0.to_array();
    StateVec y(a0.begin(), a0.end());

    auto record = [&](double t) {
        PhaseState s;
        double kap;
        if (chart == Chart::full) {
            s = PhaseState::from_array({y[0], y[1], y[2], y[3], y[4], y[5], y[6], y[7]});
            kap = s.eta1 / (P.l1 * P.l1) + s.eta2 / (P.l2 * P.l2);
        } else {
            const ReducedState r{y[2], y[3], y[4]};
            kap = reduced_kappa(r, s0.p1, s0.p2);
            s.q = {y[0], y[1], y[2], y[3]};
            s.p1 = s0.p1;
            s.p2 = s0.p2;
            if (std::abs(std::sin(y[3] - y[2])) > 1e-14) {
                auto [e1, e2] = eta_from_gamma(y[4], y[2], y[3], s0.p1, s0.p2);
                s.eta1 = e1;
                s.eta2 = e2;
            } else {
                s.eta1 = std::numeric_limits<double>::quiet_NaN();
                s.eta2 = std::numeric_limits<double>::quiet_NaN();
            }
        }
        run.times.push_back(t);
        run.states.push_back(s);
        run.kappa.push_back(kap);
    };

    auto maybe_switch = [&]() {
        if (!switching) return;
        const double d0 = collision_dist(y[2], y[3]);
        if (chart == Chart::full && d0 < kEnterReduced) {
            const PhaseState s =
                PhaseState::from_array({y[0], y[1], y[2], y[3], y[4], y[5], y[6], y[7]});
            const double g = gamma_of(s, P);
            y = {s.q.x1, s.q.x2, s.q.alpha1, s.q.alpha2, g};
            chart = Chart::reduced;
            ++run.chart_switches;
        } else if (chart == Chart::reduced && d0 > kExitReduced) {
            auto [e1, e2] = eta_from_gamma(y[4], y[2], y[3], s0.p1, s0.p2);
            y = {y[0], y[1], y[2], y[3], s0.p1, s0.p2, e1, e2};
            chart = Chart::full;
            ++run.chart_switches;
        }
    };

    record(t0);
    maybe_switch();
    double t = t0;
    while (t < t1 - 1e-12) {
        const double tn = std::min(t + sample_dt, t1);
        const OdeField& f = (chart == Chart::full) ? full : reduced;
        integrate_to(f, y, t, tn, spec);
        t = tn;
        record(t);
        maybe_switch();
    }
    return run;
}

}  // namespace tricycle
