#pragma once

#include <string>
#include <vector>

#include "tricycle/types.hpp"

namespace tricycle {

/// Uniformly sampled planar curve.
struct PlanarCurve {
    std::vector<Vec2> pts;
    double dt{0.01};
    bool unit_speed{true};
};

struct FrenetData {
    std::vector<Vec2> T;
    std::vector<Vec2> N;
    std::vector<double> kappa;
};

/// Frenet frame and curvature by 4th-order finite differences.
/// Requires a unit-speed curve with at least 7 samples.
FrenetData frenet_fd(const PlanarCurve& c, double speed_tol = 1e-6);

/// Curvature samples with derivatives up to 4th order. Derivative
/// columns are valid on [lo, hi); the ends lack stencil support.
struct CurvatureSeries {
    std::vector<double> t;
    std::vector<double> k;
    std::vector<double> k1;
    std::vector<double> k2;
    std::vector<double> k3;
    std::vector<double> k4;
    std::size_t lo{0};
    std::size_t hi{0};
};

/// Build the series from raw curvature samples by direct central
/// stencils (all O(dt^4)).
CurvatureSeries curvature_series_from_samples(const std::vector<double>& t,
                                              const std::vector<double>& kappa);

/// Build the series with exact kappa, kappa', kappa'' columns and
/// finite differences only for the 3rd/4th derivatives.
CurvatureSeries curvature_series_analytic(const std::vector<double>& t,
                                          const std::vector<double>& kappa,
                                          const std::vector<double>& dkappa,
                                          const std::vector<double>& ddkappa);

CurvatureSeries curvature_series_fd(const PlanarCurve& c, double speed_tol = 1e-6);

struct ElasticaResidual {
    std::vector<double> residual;
    double sup{0.0};
    double best_B{0.0};       // mean of the first-integral constant
    double B_variation{0.0};  // max deviation from best_B
};

/// residual = kappa'' + kappa^3/2 + A*kappa, plus the first-integral
/// constant B = -(kappa'^2 + kappa^4/4 + A*kappa^2) per sample.
ElasticaResidual elastica_residual(const CurvatureSeries& cs, double A);

struct Soliton2Residual {
    std::vector<double> residual;
    double sup{0.0};
};

/// residual = a*k + b*(-k'' - k^3/2) + (5/2)k^2 k'' + (5/2)k k'^2
///            + (3/8)k^5 + k''''
Soliton2Residual soliton2_residual(const CurvatureSeries& cs, double a, double b);

struct SolitonFit {
    double a{0.0};
    double b{0.0};
    double residual{0.0};
};

class UnfittableError : public std::runtime_error {
  public:
    explicit UnfittableError(const std::string& what) : std::runtime_error(what) {}
};

/// Least-squares (a, b) for the 2-soliton equation over all valid samples.
SolitonFit fit_soliton_ab(const CurvatureSeries& cs);

/// Jacobi elliptic cn via the descending Landen (AGM) transformation.
double jacobi_cn(double t, double k);

/// Initial phase state whose x-track curvature is 2k cn(t, k)
/// (equal unit lengths, inflectional elastica family).
PhaseState inflectional_ic(double k);

enum class ElasticaShape { non_inflectional, inflectional, borderline };

struct MuClass {
    double mu{0.0};
    ElasticaShape tag{ElasticaShape::borderline};
};

MuClass mu_classify(double A, double B);

std::string to_string(ElasticaShape s);

}  // namespace tricycle
