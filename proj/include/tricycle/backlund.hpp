#pragma once

#include <utility>
#include <vector>

#include "tricycle/curves.hpp"
#include "tricycle/types.hpp"

namespace tricycle {

/// Right-hand side of the steering-angle ODE:
///   beta' = -kappa + sign * 2 sin(beta) / L
double beta_rhs(double kappa, double beta, double L, int sign);

struct BacklundResult {
    std::vector<double> beta;
    PlanarCurve curve_out;
    std::vector<double> kappa_closed;  // standard-frame closed form: sign*4 sin(beta)/L - kappa
    std::vector<double> kappa_fd;
    CurvatureSeries kappa_out;
    double L{0.0};
    int sign{+1};                   // convention that passed the unit-speed check
    double kappa_agreement{0.0};    // sup |closed - fd| over the interior
    double max_unit_speed_dev{0.0};
};

/// Constant-length correspondence gamma~ = gamma + L (cos(beta) T + sin(beta) N)
/// with beta integrated along the curve. sign = 0 resolves the steering
/// convention at runtime via the unit-speed check; an explicit sign that
/// fails the check throws, signalling the other convention.
///
/// The closed-form curvature is reported in the standard Frenet frame of
/// the output curve, where it equals sign*4 sin(beta)/L - kappa (the
/// flipped-frame variant differs by overall sign).
BacklundResult backlund_transform(const PlanarCurve& c, double L, double beta0, int sign = 0,
                                  const FrenetData* frenet = nullptr);

/// (c1, c2) = (-B/2 - 4A/L^2, -A + 4/L^2).
std::pair<double, double> soliton_constants_from_elastica(double A, double B, double L);

}  // namespace tricycle
