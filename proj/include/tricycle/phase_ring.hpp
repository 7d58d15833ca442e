#pragma once

#include "tricycle/groebner.hpp"
#include "tricycle/multipoly.hpp"

namespace tricycle {

/// Polynomial model of the cotangent phase space: variables
/// (eta1, eta2, p1, p2, ca1, ca2, sa1, sa2 [, lam]) over exact rationals,
/// with the segment lengths substituted as rational constants. ca/sa
/// stand for the cosines and sines of the two segment angles.
struct PhaseRing {
    VariableSetPtr vars;
    MonomialOrder order{MonomialOrder::grevlex};
    Rational l1{1};
    Rational l2{1};
    bool with_lambda{false};

    enum Var : std::size_t { eta1 = 0, eta2, p1, p2, ca1, ca2, sa1, sa2, lam };

    MultiPoly v(Var x) const { return MultiPoly::variable(vars, order, x); }
    MultiPoly c(const Rational& r) const { return MultiPoly::constant(vars, order, r); }
    MultiPoly zero() const { return MultiPoly::zero(vars, order); }

    MultiPoly hpoly() const;
    MultiPoly pyth1() const;
    MultiPoly pyth2() const;
    /// {H - 1/2, ca1^2 + sa1^2 - 1, ca2^2 + sa2^2 - 1}
    std::vector<MultiPoly> unit_energy_ideal() const;

    MultiPoly xdot1() const;  // L1
    MultiPoly xdot2() const;  // L2
    MultiPoly kappa_x() const;

    MultiPoly alpha1dot() const;
    MultiPoly alpha2dot() const;
    MultiPoly eta1dot() const;
    MultiPoly eta2dot() const;
    Derivation derivation() const;

    /// Elastica constant for equal lengths (negative of the G integral).
    MultiPoly apoly() const;
    /// Equal-length integral G.
    MultiPoly gpoly() const;
    /// General-length fourth integral b.
    MultiPoly bpoly() const;
    /// The quadratic expression giving a in terms of a chosen b-polynomial.
    MultiPoly a_of(const MultiPoly& b) const;
    /// Same quadratic with the lambda variable standing in for b.
    MultiPoly a_of_lambda() const;

    /// y1-track curvature reduced form (standard Frenet frame), equal
    /// lengths; y2 via swap_tracks. Also the verbatim variant with the
    /// eta coefficients transposed, which the reduction refutes.
    MultiPoly y1_curvature_expected() const;
    MultiPoly y1_curvature_transposed() const;

    /// First-principles curvature numerator of the y-track (i = 1 or 2):
    /// ydot x yddot, built from the track definition and the derivation.
    MultiPoly y_curvature_numerator(int i) const;
    MultiPoly y_speed_squared(int i) const;
};

PhaseRing make_phase_ring(const Rational& l1, const Rational& l2, bool with_lambda = false);

}  // namespace tricycle
