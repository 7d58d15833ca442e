#include "tricycle/curves.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

#include "tricycle/linkage.hpp"

namespace tricycle {

namespace {

// 4th-order first derivative, one-sided stencils at the ends.
std::vector<double> diff1(const std::vector<double>& f, double h) {
    const std::size_t n = f.size();
    std::vector<double> d(n, 0.0);
    for (std::size_t i = 2; i + 2 < n; ++i) {
        d[i] = (f[i - 2] - 8 * f[i - 1] + 8 * f[i + 1] - f[i + 2]) / (12 * h);
    }
    auto fwd = [&](std::size_t i) {
        return (-25 * f[i] + 48 * f[i + 1] - 36 * f[i + 2] + 16 * f[i + 3] - 3 * f[i + 4]) /
               (12 * h);
    };
    auto fwd1 = [&](std::size_t i) {
        return (-3 * f[i - 1] - 10 * f[i] + 18 * f[i + 1] - 6 * f[i + 2] + f[i + 3]) / (12 * h);
    };
    d[0] = fwd(0);
    d[1] = fwd1(1);
    d[n - 1] = -(-25 * f[n - 1] + 48 * f[n - 2] - 36 * f[n - 3] + 16 * f[n - 4] - 3 * f[n - 5]) /
               (12 * h);
    d[n - 2] =
        -(-3 * f[n - 1] - 10 * f[n - 2] + 18 * f[n - 3] - 6 * f[n - 4] + f[n - 5]) / (12 * h);
    return d;
}

// Direct central stencils for the higher derivatives, interior only.
void diff2_central(const std::vector<double>& f, double h, std::vector<double>& d) {
    for (std::size_t i = 2; i + 2 < f.size(); ++i) {
        d[i] = (-f[i - 2] + 16 * f[i - 1] - 30 * f[i] + 16 * f[i + 1] - f[i + 2]) /
               (12 * h * h);
    }
}

void diff3_central(const std::vector<double>& f, double h, std::vector<double>& d) {
    const double h3 = h * h * h;
    for (std::size_t i = 3; i + 3 < f.size(); ++i) {
        d[i] = (f[i - 3] - 8 * f[i - 2] + 13 * f[i - 1] - 13 * f[i + 1] + 8 * f[i + 2] -
                f[i + 3]) /
               (8 * h3);
    }
}

void diff4_central(const std::vector<double>& f, double h, std::vector<double>& d) {
    const double h4 = h * h * h * h;
    for (std::size_t i = 3; i + 3 < f.size(); ++i) {
        d[i] = (-f[i - 3] + 12 * f[i - 2] - 39 * f[i - 1] + 56 * f[i] - 39 * f[i + 1] +
                12 * f[i + 2] - f[i + 3]) /
               (6 * h4);
    }
}

void check_unit_speed(const PlanarCurve& c, double tol) {
    if (!c.unit_speed) throw NonUnitEnergyError("curve is not flagged unit speed");
    const std::size_t n = c.pts.size();
    std::vector<double> xs(n), ys(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = c.pts[i].x;
        ys[i] = c.pts[i].y;
    }
    const auto dx = diff1(xs, c.dt);
    const auto dy = diff1(ys, c.dt);
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(std::hypot(dx[i], dy[i]) - 1.0) > tol) {
            throw NonUnitEnergyError("curve is not unit speed within tolerance");
        }
    }
}

}  // namespace

FrenetData frenet_fd(const PlanarCurve& c, double speed_tol) {
    const std::size_t n = c.pts.size();
    if (n < 7) throw std::invalid_argument("frenet_fd: need at least 7 samples");
    check_unit_speed(c, speed_tol);

    std::vector<double> xs(n), ys(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = c.pts[i].x;
        ys[i] = c.pts[i].y;
    }
    FrenetData fr;
    fr.T.resize(n);
    fr.N.resize(n);
    fr.kappa.resize(n);
    const auto dx = diff1(xs, c.dt);
    const auto dy = diff1(ys, c.dt);
    const auto dTx = diff1(dx, c.dt);
    const auto dTy = diff1(dy, c.dt);
    for (std::size_t i = 0; i < n; ++i) {
        fr.T[i] = {dx[i], dy[i]};
        fr.N[i] = {-dy[i], dx[i]};
        fr.kappa[i] = dTx[i] * fr.N[i].x + dTy[i] * fr.N[i].y;
    }
    return fr;
}

CurvatureSeries curvature_series_from_samples(const std::vector<double>& t,
                                              const std::vector<double>& kappa) {
    if (t.size() != kappa.size() || t.size() < 8) {
        throw std::invalid_argument("curvature series: need >= 8 matching samples");
    }
    const double h = t[1] - t[0];
    const std::size_t n = t.size();
    CurvatureSeries cs;
    cs.t = t;
    cs.k = kappa;
    cs.k1.assign(n, 0.0);
    cs.k2.assign(n, 0.0);
    cs.k3.assign(n, 0.0);
    cs.k4.assign(n, 0.0);
    const auto d1 = diff1(kappa, h);
    cs.k1 = d1;
    diff2_central(kappa, h, cs.k2);
    diff3_central(kappa, h, cs.k3);
    diff4_central(kappa, h, cs.k4);
    cs.lo = 3;
    cs.hi = n - 3;
    return cs;
}

CurvatureSeries curvature_series_analytic(const std::vector<double>& t,
                                          const std::vector<double>& kappa,
                                          const std::vector<double>& dkappa,
                                          const std::vector<double>& ddkappa) {
    if (t.size() != kappa.size() || t.size() != dkappa.size() || t.size() != ddkappa.size() ||
        t.size() < 8) {
        throw std::invalid_argument("curvature series: need >= 8 matching samples");
    }
    const double h = t[1] - t[0];
    const std::size_t n = t.size();
    CurvatureSeries cs;
    cs.t = t;
    cs.k = kappa;
    cs.k1 = dkappa;
    cs.k2 = ddkappa;
    cs.k3 = diff1(ddkappa, h);
    cs.k4.assign(n, 0.0);
    diff2_central(ddkappa, h, cs.k4);
    cs.lo = 2;
    cs.hi = n - 2;
    return cs;
}

CurvatureSeries curvature_series_fd(const PlanarCurve& c, double speed_tol) {
    const FrenetData fr = frenet_fd(c, speed_tol);
    std::vector<double> t(c.pts.size());
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = c.dt * static_cast<double>(i);
    // trim the one-sided boundary region where the kappa samples are
    // least accurate before differentiating again
    CurvatureSeries cs = curvature_series_from_samples(t, fr.kappa);
    cs.lo = std::max<std::size_t>(cs.lo, 5);
    cs.hi = std::min(cs.hi, t.size() - 5);
    return cs;
}

ElasticaResidual elastica_residual(const CurvatureSeries& cs, double A) {
    ElasticaResidual out;
    out.residual.assign(cs.t.size(), 0.0);
    double bsum = 0.0;
    double bmin = 0.0, bmax = 0.0;
    bool first = true;
    for (std::size_t i = cs.lo; i < cs.hi; ++i) {
        const double k = cs.k[i];
        out.residual[i] = cs.k2[i] + 0.5 * k * k * k + A * k;
        out.sup = std::max(out.sup, std::abs(out.residual[i]));
        const double B = -(cs.k1[i] * cs.k1[i] + 0.25 * k * k * k * k + A * k * k);
        bsum += B;
        bmin = first ? B : std::min(bmin, B);
        bmax = first ? B : std::max(bmax, B);
        first = false;
    }
    const auto m = static_cast<double>(cs.hi - cs.lo);
    out.best_B = (m > 0) ? bsum / m : 0.0;
    out.B_variation = first ? 0.0 : std::max(bmax - out.best_B, out.best_B - bmin);
    return out;
}

Soliton2Residual soliton2_residual(const CurvatureSeries& cs, double a, double b) {
    Soliton2Residual out;
    out.residual.assign(cs.t.size(), 0.0);
    for (std::size_t i = cs.lo; i < cs.hi; ++i) {
        const double k = cs.k[i], k1 = cs.k1[i], k2 = cs.k2[i], k4 = cs.k4[i];
        out.residual[i] = a * k + b * (-k2 - 0.5 * k * k * k) + 2.5 * k * k * k2 +
                          2.5 * k * k1 * k1 + 0.375 * k * k * k * k * k + k4;
        out.sup = std::max(out.sup, std::abs(out.residual[i]));
    }
    return out;
}

SolitonFit fit_soliton_ab(const CurvatureSeries& cs) {
    const std::size_t m = (cs.hi > cs.lo) ? cs.hi - cs.lo : 0;
    if (m < 10) throw UnfittableError("fit_soliton_ab: need at least 10 valid samples");
    Eigen::MatrixXd M(m, 2);
    Eigen::VectorXd rhs(m);
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t j = cs.lo + i;
        const double k = cs.k[j], k1 = cs.k1[j], k2 = cs.k2[j], k4 = cs.k4[j];
        M(i, 0) = k;
        M(i, 1) = -(k2 + 0.5 * k * k * k);
        rhs(i) = -(2.5 * k * k * k2 + 2.5 * k * k1 * k1 + 0.375 * k * k * k * k * k + k4);
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    if (sv(0) <= 0.0 || sv(1) / sv(0) < 1e-10) {
        throw UnfittableError("fit_soliton_ab: rank-deficient design matrix");
    }
    const Eigen::Vector2d ab = svd.solve(rhs);
    SolitonFit fit;
    fit.a = ab(0);
    fit.b = ab(1);
    fit.residual = (M * ab - rhs).cwiseAbs().maxCoeff();
    return fit;
}

double jacobi_cn(double t, double k) {
    if (k < 0.0 || k > 1.0) throw std::invalid_argument("jacobi_cn: modulus outside [0, 1]");
    if (k < 1e-14) return std::cos(t);
    if (k > 1.0 - 1e-14) return 1.0 / std::cosh(t);

    constexpr int kMaxIter = 12;
    double a[kMaxIter + 1], b[kMaxIter + 1], c[kMaxIter + 1];
    a[0] = 1.0;
    b[0] = std::sqrt(1.0 - k * k);
    c[0] = k;
    int n = 0;
    while (std::abs(c[n]) > 1e-17 && n < kMaxIter) {
        a[n + 1] = 0.5 * (a[n] + b[n]);
        b[n + 1] = std::sqrt(a[n] * b[n]);
        c[n + 1] = 0.5 * (a[n] - b[n]);
        ++n;
    }
    double phi = std::ldexp(a[n] * t, n);
    for (int i = n; i > 0; --i) {
        const double s = std::clamp(c[i] / a[i] * std::sin(phi), -1.0, 1.0);
        phi = 0.5 * (phi + std::asin(s));
    }
    return std::cos(phi);
}

PhaseState inflectional_ic(double k) {
    if (!(k > 0.0 && k < 1.0)) {
        throw std::invalid_argument("inflectional_ic: modulus must lie in (0, 1)");
    }
    if (std::abs(5.0 * k - 4.0) < 1e-9) {
        throw std::invalid_argument("inflectional_ic: pole at k = 4/5");
    }
    const Params P{1.0, 1.0};
    PhaseState s;
    s.q.x1 = 0.0;
    s.q.x2 = 0.0;
    s.q.alpha1 = std::atan2(4.0, 3.0);
    const double num = 4.0 * k * k - 10.0 * k + 4.0;
    const double den = 3.0 * k * k - 3.0;
    s.q.alpha2 = std::atan2(num, den);
    s.p1 = 1.0;
    s.p2 = 0.0;
    s.eta1 = (5.0 * k * k - 5.0) / (5.0 * k - 4.0);
    s.eta2 = (5.0 * k * k - 8.0 * k + 5.0) / (5.0 * k - 4.0);

    auto ok = [&](const PhaseState& st) {
        const double H = hamiltonian(st, P);
        const double kap0 = st.eta1 + st.eta2;
        // kappa'(0) with p = (1, 0) reduces to eta1 cos a1 + eta2 cos a2
        const double kdot0 = st.eta1 * std::cos(st.q.alpha1) + st.eta2 * std::cos(st.q.alpha2);
        return std::abs(H - 0.5) <= 1e-9 && std::abs(kap0 - 2.0 * k) <= 1e-9 &&
               std::abs(kdot0) <= 1e-9;
    };
    if (!ok(s)) {
        s.q.alpha2 += M_PI;  // the single-argument arctan branch was wrong
        if (!ok(s)) {
            throw std::runtime_error("inflectional_ic: branch selection failed");
        }
    }
    return s;
}

MuClass mu_classify(double A, double B) {
    if (A == 0.0) throw std::invalid_argument("mu_classify: A must be nonzero");
    MuClass out;
    out.mu = B / (A * A);
    if (std::abs(out.mu) <= 1e-12) {
        out.tag = ElasticaShape::borderline;
    } else {
        out.tag = out.mu > 0.0 ? ElasticaShape::non_inflectional : ElasticaShape::inflectional;
    }
    return out;
}

std::string to_string(ElasticaShape s) {
    switch (s) {
        case ElasticaShape::non_inflectional: return "non-inflectional";
        case ElasticaShape::inflectional: return "inflectional";
        case ElasticaShape::borderline: return "borderline";
    }
    return "unknown";
}

}  // namespace tricycle
