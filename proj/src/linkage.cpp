#include "tricycle/linkage.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>

namespace tricycle {

HorizontalFrame horizontal_frame(const ConfigPoint& q, const Params& P) {
    return {{1.0, 0.0, -std::sin(q.alpha1) / P.l1, -std::sin(q.alpha2) / P.l2},
            {0.0, 1.0, std::cos(q.alpha1) / P.l1, std::cos(q.alpha2) / P.l2}};
}

namespace {

int svd_rank(const Eigen::MatrixXd& M, double tol) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
    const auto& sv = svd.singularValues();
    int r = 0;
    for (int i = 0; i < sv.size(); ++i) {
        if (sv[i] > tol) ++r;
    }
    return r;
}

}  // namespace

std::array<int, 3> growth_vector(const ConfigPoint& q, const Params& P, double tol) {
    const double l1 = P.l1, l2 = P.l2;
    const double c1 = std::cos(q.alpha1), s1 = std::sin(q.alpha1);
    const double c2 = std::cos(q.alpha2), s2 = std::sin(q.alpha2);

    Eigen::MatrixXd M(4, 5);
    // v1, v2, [v1,v2], [[v1,v2],v1], [[v1,v2],v2]
    M.col(0) << 1.0, 0.0, -s1 / l1, -s2 / l2;
    M.col(1) << 0.0, 1.0, c1 / l1, c2 / l2;
    M.col(2) << 0.0, 0.0, 1.0 / (l1 * l1), 1.0 / (l2 * l2);
    M.col(3) << 0.0, 0.0, -c1 / (l1 * l1 * l1), -c2 / (l2 * l2 * l2);
    M.col(4) << 0.0, 0.0, -s1 / (l1 * l1 * l1), -s2 / (l2 * l2 * l2);

    return {svd_rank(M.leftCols(2), tol), svd_rank(M.leftCols(3), tol), svd_rank(M, tol)};
}

std::pair<double, double> momentum_pair(const PhaseState& s, const Params& P) {
    const double sa1 = std::sin(s.q.alpha1), ca1 = std::cos(s.q.alpha1);
    const double sa2 = std::sin(s.q.alpha2), ca2 = std::cos(s.q.alpha2);
    const double L1 = s.p1 - s.eta1 * sa1 / P.l1 - s.eta2 * sa2 / P.l2;
    const double L2 = s.p2 + s.eta1 * ca1 / P.l1 + s.eta2 * ca2 / P.l2;
    return {L1, L2};
}

double hamiltonian(const PhaseState& s, const Params& P) {
    auto [L1, L2] = momentum_pair(s, P);
    return 0.5 * (L1 * L1 + L2 * L2);
}

double gamma_of(const PhaseState& s, const Params& P) {
    auto [L1, L2] = momentum_pair(s, P);
    return std::atan2(L2, L1);
}

PhaseState geodesic_field(const PhaseState& s, const Params& P) {
    const double l1 = P.l1, l2 = P.l2;
    const double ca1 = std::cos(s.q.alpha1), sa1 = std::sin(s.q.alpha1);
    const double ca2 = std::cos(s.q.alpha2), sa2 = std::sin(s.q.alpha2);
    const double e1 = s.eta1, e2 = s.eta2, p1 = s.p1, p2 = s.p2;
    const double cc = ca1 * ca2 + sa1 * sa2;  // cos(alpha1 - alpha2)
    const double sc = sa1 * ca2 - ca1 * sa2;  // sin(alpha1 - alpha2)

    PhaseState d;
    d.q.x1 = -sa1 * e1 / l1 - sa2 * e2 / l2 + p1;
    d.q.x2 = e1 * ca1 / l1 + e2 * ca2 / l2 + p2;
    d.q.alpha1 = ca1 * p2 / l1 - p1 * sa1 / l1 + e2 * cc / (l1 * l2) + e1 / (l1 * l1);
    d.q.alpha2 = ca2 * p2 / l2 - p1 * sa2 / l2 + e1 * cc / (l1 * l2) + e2 / (l2 * l2);
    d.p1 = 0.0;
    d.p2 = 0.0;
    d.eta1 = e1 * sa1 * p2 / l1 + p1 * ca1 * e1 / l1 + e1 * e2 * sc / (l1 * l2);
    d.eta2 = e2 * sa2 * p2 / l2 + p1 * ca2 * e2 / l2 - e1 * e2 * sc / (l1 * l2);
    return d;
}

SingularVelocity singular_field(const ConfigPoint& q, const Params& P) {
    const double l1 = P.l1, l2 = P.l2;
    const double d = q.alpha1 - q.alpha2;
    if (P.equal_lengths() && std::abs(std::sin(0.5 * d)) <= kDegenerateTol) {
        throw DegenerateConfigError("singular_field: equal lengths with alpha1 = alpha2");
    }
    SingularVelocity out;
    out.dq.x1 = std::sin(q.alpha1) / l1 - std::sin(q.alpha2) / l2;
    out.dq.x2 = -(std::cos(q.alpha1) / l1 - std::cos(q.alpha2) / l2);
    out.dq.alpha1 = (l1 * std::cos(d) - l2) / (l1 * l1 * l2);
    out.dq.alpha2 = -(l2 * std::cos(d) - l1) / (l1 * l2 * l2);
    out.speed = std::sqrt(-(2.0 * l1 * l2 * std::cos(d) - l1 * l1 - l2 * l2) / (l1 * l1 * l2 * l2));
    return out;
}

ConfigPoint singular_field_equal(const ConfigPoint& q) {
    const double half_sum = 0.5 * (q.alpha1 + q.alpha2);
    const double half_diff = 0.5 * (q.alpha1 - q.alpha2);
    if (std::abs(std::sin(half_diff)) <= kDegenerateTol) {
        throw DegenerateConfigError("singular_field_equal: alpha1 = alpha2");
    }
    ConfigPoint d;
    d.x1 = std::cos(half_sum);
    d.x2 = std::sin(half_sum);
    d.alpha1 = -std::sin(half_diff);
    d.alpha2 = std::sin(half_diff);
    return d;
}

double singular_curvature(const ConfigPoint& q, const Params& P) {
    const double l1 = P.l1, l2 = P.l2;
    const double c = std::cos(q.alpha1 - q.alpha2);
    return (l1 * l1 - l2 * l2) / (l1 * l2 * std::sqrt(-2.0 * l1 * l2 * c + l1 * l1 + l2 * l2));
}

double singular_elastica_A(const Params& P) {
    return -(P.l1 * P.l1 + P.l2 * P.l2) / (2.0 * P.l1 * P.l1 * P.l2 * P.l2);
}

double reduced_kappa(const ReducedState& r, double p1, double p2) {
    const double mid = 0.5 * (r.alpha1 + r.alpha2);
    const double den = std::cos(0.5 * (r.alpha2 - r.alpha1));
    if (std::abs(den) <= kDegenerateTol) {
        throw DegenerateConfigError("reduced system: cos((alpha2 - alpha1)/2) vanishes");
    }
    return (std::sin(r.gamma - mid) + p1 * std::sin(mid) - p2 * std::cos(mid)) / den;
}

ReducedState reduced_field(const ReducedState& r, double p1, double p2) {
    ReducedState d;
    d.alpha1 = std::sin(r.gamma - r.alpha1);
    d.alpha2 = std::sin(r.gamma - r.alpha2);
    d.gamma = reduced_kappa(r, p1, p2);
    return d;
}

std::pair<double, double> eta_from_gamma(double gamma, double alpha1, double alpha2,
                                         double p1, double p2) {
    const double sd = std::sin(alpha2 - alpha1);
    if (std::abs(sd) <= kDegenerateTol) {
        throw DegenerateConfigError("eta_from_gamma: sin(alpha2 - alpha1) vanishes");
    }
    const double eta1 =
        (std::cos(gamma - alpha2) - p1 * std::cos(alpha2) - p2 * std::sin(alpha2)) / sd;
    const double eta2 =
        (std::cos(gamma - alpha1) - p1 * std::cos(alpha1) - p2 * std::sin(alpha1)) / (-sd);
    return {eta1, eta2};
}

CurvatureJet curvature_jet(const PhaseState& s, const Params& P, double energy_tol) {
    const double H = hamiltonian(s, P);
    if (std::abs(H - 0.5) > energy_tol) {
        throw NonUnitEnergyError("curvature_jet: state not on the unit-energy level");
    }
    const double l1 = P.l1, l2 = P.l2;
    CurvatureJet j;
    j.gamma = gamma_of(s, P);
    j.kappa = s.eta1 / (l1 * l1) + s.eta2 / (l2 * l2);
    const double c1 = std::cos(j.gamma - s.q.alpha1), c2 = std::cos(j.gamma - s.q.alpha2);
    const double s1 = std::sin(j.gamma - s.q.alpha1), s2 = std::sin(j.gamma - s.q.alpha2);
    j.dkappa = s.eta1 * c1 / (l1 * l1 * l1) + s.eta2 * c2 / (l2 * l2 * l2);
    j.ddkappa = s.eta1 / (l1 * l1 * l1 * l1) + s.eta2 / (l2 * l2 * l2 * l2) -
                j.kappa * (s.eta1 * s1 / (l1 * l1 * l1) + s.eta2 * s2 / (l2 * l2 * l2));
    return j;
}

namespace {

double b_integral(const PhaseState& s, const Params& P) {
    const double l1 = P.l1, l2 = P.l2;
    const double ca1 = std::cos(s.q.alpha1), sa1 = std::sin(s.q.alpha1);
    const double ca2 = std::cos(s.q.alpha2), sa2 = std::sin(s.q.alpha2);
    const double e1 = s.eta1, e2 = s.eta2, p1 = s.p1, p2 = s.p2;
    const double l1sq = l1 * l1, l2sq = l2 * l2;
    return ca1 * p2 * e1 / (l1 * l2sq) + ca2 * e2 * p2 / (l1sq * l2) -
           e2 * p1 * sa2 / (l1sq * l2) + p1 * p1 / (2.0 * l2sq) + p2 * p2 / (2.0 * l2sq) -
           p1 * sa1 * e1 / (l1 * l2sq) + p1 * p1 / (2.0 * l1sq) + p2 * p2 / (2.0 * l1sq) +
           e2 * e2 / (2.0 * l1sq * l2sq) + e1 * e2 / (l1sq * l2sq) + 0.5 / l2sq + 0.5 / l1sq +
           e1 * e1 / (2.0 * l1sq * l2sq);
}

}  // namespace

ConservedSet conserved_set(const PhaseState& s, const Params& P) {
    ConservedSet out;
    out.H = hamiltonian(s, P);
    out.p1 = s.p1;
    out.p2 = s.p2;
    if (P.unit_equal()) {
        auto [L1, L2] = momentum_pair(s, P);
        const double k = s.eta1 + s.eta2;
        out.G = s.p1 * L1 + s.p2 * L2 + 0.5 * k * k;
    }
    out.b = b_integral(s, P);
    const double l1sq = P.l1 * P.l1, l2sq = P.l2 * P.l2;
    const double psq = s.p1 * s.p1 + s.p2 * s.p2;
    out.a = psq / (2.0 * l1sq * l2sq) - 0.5 * out.b * out.b + out.b / l2sq + out.b / l1sq -
            0.5 / (l2sq * l2sq) - 0.5 / (l1sq * l2sq) - 0.5 / (l1sq * l1sq);
    return out;
}

FilamentProjection filament_projection(const PhaseState& s, const Params& P, double energy_tol) {
    const CurvatureJet j = curvature_jet(s, P, energy_tol);
    FilamentProjection f;
    f.T = {std::cos(j.gamma), std::sin(j.gamma)};
    f.N = {-std::sin(j.gamma), std::cos(j.gamma)};
    f.v = -j.dkappa;
    if (P.unit_equal()) {
        const ConservedSet c = conserved_set(s, P);
        f.u = 1.0 + *c.G - 0.5 * j.kappa * j.kappa;
        f.xi = {s.p1 + f.T.x, s.p2 + f.T.y};
    } else {
        const double l1 = P.l1, l2 = P.l2;
        const double l1sq = l1 * l1, l2sq = l2 * l2;
        const ConservedSet c = conserved_set(s, P);
        f.u = c.b - 0.5 * j.kappa * j.kappa;
        const double sa1 = std::sin(s.q.alpha1), ca1 = std::cos(s.q.alpha1);
        const double sa2 = std::sin(s.q.alpha2), ca2 = std::cos(s.q.alpha2);
        // gradient of the b integral with respect to (p1, p2)
        f.xi = {-s.eta2 * sa2 / (l1sq * l2) - sa1 * s.eta1 / (l1 * l2sq) +
                    s.p1 * (1.0 / l1sq + 1.0 / l2sq),
                ca1 * s.eta1 / (l1 * l2sq) + ca2 * s.eta2 / (l1sq * l2) +
                    s.p2 * (1.0 / l1sq + 1.0 / l2sq)};
    }
    return f;
}

double poisson_bracket(const StateFunction& f, const StateFunction& g, const PhaseState& s,
                       double h) {
    if (h <= 0.0) throw std::invalid_argument("poisson_bracket: h must be positive");
    auto a = s.to_array();
    auto partial = [&](const StateFunction& fn, int idx) {
        auto ap = a, am = a;
        ap[idx] += h;
        am[idx] -= h;
        return (fn(PhaseState::from_array(ap)) - fn(PhaseState::from_array(am))) / (2.0 * h);
    };
    // canonical pairs: (x1,p1)=(0,4), (x2,p2)=(1,5), (alpha1,eta1)=(2,6), (alpha2,eta2)=(3,7)
    double sum = 0.0;
    constexpr int qi[4] = {0, 1, 2, 3};
    constexpr int pi[4] = {4, 5, 6, 7};
    for (int k = 0; k < 4; ++k) {
        sum += partial(f, qi[k]) * partial(g, pi[k]) - partial(f, pi[k]) * partial(g, qi[k]);
    }
    return sum;
}

TrackPoints tracks(const ConfigPoint& q, const Params& P) {
    TrackPoints t;
    t.x = {q.x1, q.x2};
    t.m1 = {q.x1 - P.l1 * std::cos(q.alpha1), q.x2 - P.l1 * std::sin(q.alpha1)};
    t.m2 = {q.x1 - P.l2 * std::cos(q.alpha2), q.x2 - P.l2 * std::sin(q.alpha2)};
    t.y1 = 2.0 * t.m1 - t.x;
    t.y2 = 2.0 * t.m2 - t.x;
    return t;
}

double y_track_curvature(const PhaseState& s, const Params& P, int which_y, double energy_tol) {
    const double H = hamiltonian(s, P);
    if (std::abs(H - 0.5) > energy_tol) {
        throw NonUnitEnergyError("y_track_curvature: state not on the unit-energy level");
    }
    const double g = gamma_of(s, P);
    const double kappa = s.eta1 / (P.l1 * P.l1) + s.eta2 / (P.l2 * P.l2);
    if (which_y == 1) return 2.0 * std::sin(g - s.q.alpha1) / P.l1 - kappa;
    if (which_y == 2) return 2.0 * std::sin(g - s.q.alpha2) / P.l2 - kappa;
    throw std::invalid_argument("y_track_curvature: which_y must be 1 or 2");
}

}  // namespace tricycle
