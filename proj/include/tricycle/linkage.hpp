#pragma once

#include <array>
#include <functional>
#include <utility>

#include "tricycle/types.hpp"

namespace tricycle {

/// Horizontal frame vectors at a configuration, components ordered
/// (x1, x2, alpha1, alpha2).
struct HorizontalFrame {
    std::array<double, 4> v1;
    std::array<double, 4> v2;
};

HorizontalFrame horizontal_frame(const ConfigPoint& q, const Params& P);

/// Ranks of the iterated bracket spans at q, computed as numerical
/// matrix ranks with singular-value threshold tol.
std::array<int, 3> growth_vector(const ConfigPoint& q, const Params& P, double tol = 1e-9);

double hamiltonian(const PhaseState& s, const Params& P);

/// The two momentum functions whose squares sum to 2H.
std::pair<double, double> momentum_pair(const PhaseState& s, const Params& P);

/// Tangent angle gamma = atan2(L2, L1).
double gamma_of(const PhaseState& s, const Params& P);

/// Right-hand side of the geodesic equations (all eight components).
PhaseState geodesic_field(const PhaseState& s, const Params& P);

struct SingularVelocity {
    ConfigPoint dq;   // time derivatives of (x1, x2, alpha1, alpha2)
    double speed{0.0};
};

/// Singular-curve field for general lengths, plus its x-projection speed.
SingularVelocity singular_field(const ConfigPoint& q, const Params& P);

/// Normalized equal-length singular field (unit x-speed by construction).
ConfigPoint singular_field_equal(const ConfigPoint& q);

/// Closed-form curvature of the x-projection of a singular curve.
double singular_curvature(const ConfigPoint& q, const Params& P);

/// Constant A for which the singular x-track solves the elastica equation.
double singular_elastica_A(const Params& P);

ReducedState reduced_field(const ReducedState& r, double p1, double p2);

/// Curvature of the x-track expressed in reduced coordinates (the gamma
/// equation's right-hand side).
double reduced_kappa(const ReducedState& r, double p1, double p2);

std::pair<double, double> eta_from_gamma(double gamma, double alpha1, double alpha2,
                                         double p1, double p2);

struct CurvatureJet {
    double kappa{0.0};
    double dkappa{0.0};
    double ddkappa{0.0};
    double gamma{0.0};
};

/// Pointwise curvature jet of the x-track at a unit-energy state.
CurvatureJet curvature_jet(const PhaseState& s, const Params& P,
                           double energy_tol = kUnitEnergyTol);

ConservedSet conserved_set(const PhaseState& s, const Params& P);

struct FilamentProjection {
    double u{0.0};
    double v{0.0};
    Vec2 xi;  // plane projection of the G- (or b-) Hamiltonian field
    Vec2 T;
    Vec2 N;
};

FilamentProjection filament_projection(const PhaseState& s, const Params& P,
                                       double energy_tol = kUnitEnergyTol);

using StateFunction = std::function<double(const PhaseState&)>;

/// Canonical Poisson bracket by central differences of step h over the
/// pairs (x1,p1), (x2,p2), (alpha1,eta1), (alpha2,eta2).
double poisson_bracket(const StateFunction& f, const StateFunction& g, const PhaseState& s,
                       double h = 1e-5);

struct TrackPoints {
    Vec2 x;
    Vec2 m1;
    Vec2 m2;
    Vec2 y1;
    Vec2 y2;
};

TrackPoints tracks(const ConfigPoint& q, const Params& P);

/// Standard-frame curvature of the y1 (which_y=1) or y2 (which_y=2) track
/// at a unit-energy state: 2 sin(gamma - alpha_i)/l_i - kappa.
double y_track_curvature(const PhaseState& s, const Params& P, int which_y,
                         double energy_tol = kUnitEnergyTol);

}  // namespace tricycle
