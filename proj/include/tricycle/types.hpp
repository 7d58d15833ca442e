#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace tricycle {

struct Vec2 {
    double x{0.0};
    double y{0.0};

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    double cross(const Vec2& o) const { return x * o.y - y * o.x; }
    double norm() const { return std::hypot(x, y); }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }

/// Segment lengths of the two links.
struct Params {
    double l1{1.0};
    double l2{1.0};

    bool valid() const { return l1 > 0.0 && l2 > 0.0; }
    bool equal_lengths(double tol = 1e-12) const { return std::abs(l1 - l2) <= tol; }
    bool unit_equal(double tol = 1e-12) const {
        return std::abs(l1 - 1.0) <= tol && std::abs(l2 - 1.0) <= tol;
    }
};

/// Configuration of the linkage: front vertex position and the two
/// segment direction angles (unwrapped, not reduced mod 2pi).
struct ConfigPoint {
    double x1{0.0};
    double x2{0.0};
    double alpha1{0.0};
    double alpha2{0.0};
};

/// Point of the cotangent bundle over configuration space.
struct PhaseState {
    ConfigPoint q;
    double p1{0.0};
    double p2{0.0};
    double eta1{0.0};
    double eta2{0.0};

    std::array<double, 8> to_array() const {
        return {q.x1, q.x2, q.alpha1, q.alpha2, p1, p2, eta1, eta2};
    }
    static PhaseState from_array(const std::array<double, 8>& a) {
        return {{a[0], a[1], a[2], a[3]}, a[4], a[5], a[6], a[7]};
    }
};

/// Reduced equal-length coordinates (alpha1, alpha2, tangent angle gamma).
struct ReducedState {
    double alpha1{0.0};
    double alpha2{0.0};
    double gamma{0.0};
};

/// Values of the integrals of motion at a state. G is present only for
/// unit equal lengths; b and a are defined for every length pair.
struct ConservedSet {
    double H{0.0};
    double p1{0.0};
    double p2{0.0};
    std::optional<double> G;
    double b{0.0};
    double a{0.0};
};

class DegenerateConfigError : public std::runtime_error {
  public:
    explicit DegenerateConfigError(const std::string& what) : std::runtime_error(what) {}
};

class NonUnitEnergyError : public std::runtime_error {
  public:
    explicit NonUnitEnergyError(const std::string& what) : std::runtime_error(what) {}
};

class IntegrationError : public std::runtime_error {
  public:
    explicit IntegrationError(const std::string& what) : std::runtime_error(what) {}
};

constexpr double kDegenerateTol = 1e-12;
constexpr double kUnitEnergyTol = 1e-9;

/// Distance between two angles modulo 2pi.
inline double angle_dist(double a, double b) {
    double d = std::remainder(a - b, 2.0 * M_PI);
    return std::abs(d);
}

}  // namespace tricycle
