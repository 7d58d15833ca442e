#pragma once

#include <vector>

#include "tricycle/linkage.hpp"
#include "tricycle/ode.hpp"
#include "tricycle/types.hpp"

namespace tricycle {

/// A sampled geodesic with its curvature series.
///
/// Equal-length runs switch between the full cotangent chart and the
/// reduced (alpha1, alpha2, gamma) chart near the collision locus
/// alpha1 = alpha2, where eta1, eta2 diverge while the x-track stays
/// smooth. Inside reduced windows eta values are recovered by
/// elimination and may be large; kappa is always evaluated in the
/// chart that is regular there.
struct GeodesicRun {
    std::vector<double> times;
    std::vector<PhaseState> states;
    std::vector<double> kappa;
    int chart_switches{0};
    Params params;
};

GeodesicRun run_geodesic(const PhaseState& s0, const Params& P, double t0, double t1,
                         const IntegratorSpec& spec, double sample_dt);

/// OdeField adapters for the linkage fields.
OdeField geodesic_ode_field(const Params& P);
OdeField singular_ode_field(const Params& P);
OdeField singular_equal_ode_field();
OdeField reduced_ode_field(double p1, double p2);

/// Unit-energy state whose x-track is the unit circle (equal lengths).
PhaseState circle_example_ic();

}  // namespace tricycle
