#include "tricycle/phase_ring.hpp"

namespace tricycle {

PhaseRing make_phase_ring(const Rational& l1, const Rational& l2, bool with_lambda) {
    if (l1 <= 0 || l2 <= 0) throw std::invalid_argument("lengths must be positive");
    PhaseRing r;
    std::vector<std::string> names = {"eta1", "eta2", "p1", "p2", "ca1", "ca2", "sa1", "sa2"};
    if (with_lambda) names.push_back("lam");
    r.vars = std::make_shared<VariableSet>(VariableSet{std::move(names)});
    r.l1 = l1;
    r.l2 = l2;
    r.with_lambda = with_lambda;
    return r;
}

MultiPoly PhaseRing::hpoly() const {
    const Rational i1 = 1 / l1, i2 = 1 / l2;
    return v(sa1) * v(eta1) * v(p1) * c(-i1) + v(sa2) * v(eta2) * v(p1) * c(-i2) +
           v(eta1) * v(ca1) * v(p2) * c(i1) + v(eta2) * v(ca2) * v(p2) * c(i2) +
           v(p1) * v(p1) * c(Rational(1, 2)) + v(p2) * v(p2) * c(Rational(1, 2)) +
           v(eta1) * v(ca1) * v(eta2) * v(ca2) * c(i1 * i2) +
           v(sa1) * v(eta1) * v(sa2) * v(eta2) * c(i1 * i2) +
           v(eta2) * v(eta2) * c(i2 * i2 / 2) + v(eta1) * v(eta1) * c(i1 * i1 / 2);
}

MultiPoly PhaseRing::pyth1() const { return v(ca1) * v(ca1) + v(sa1) * v(sa1) - c(1); }
MultiPoly PhaseRing::pyth2() const { return v(ca2) * v(ca2) + v(sa2) * v(sa2) - c(1); }

std::vector<MultiPoly> PhaseRing::unit_energy_ideal() const {
    return {hpoly() - c(Rational(1, 2)), pyth1(), pyth2()};
}

MultiPoly PhaseRing::xdot1() const {
    return v(sa1) * v(eta1) * c(-1 / l1) + v(sa2) * v(eta2) * c(-1 / l2) + v(p1);
}

MultiPoly PhaseRing::xdot2() const {
    return v(eta1) * v(ca1) * c(1 / l1) + v(eta2) * v(ca2) * c(1 / l2) + v(p2);
}

MultiPoly PhaseRing::kappa_x() const {
    return v(eta1) * c(1 / (l1 * l1)) + v(eta2) * c(1 / (l2 * l2));
}

MultiPoly PhaseRing::alpha1dot() const {
    const Rational i1 = 1 / l1, i12 = 1 / (l1 * l2);
    return v(ca1) * v(p2) * c(i1) - v(p1) * v(sa1) * c(i1) + v(eta2) * v(ca1) * v(ca2) * c(i12) +
           v(eta2) * v(sa1) * v(sa2) * c(i12) + v(eta1) * c(i1 * i1);
}

MultiPoly PhaseRing::alpha2dot() const {
    const Rational i2 = 1 / l2, i12 = 1 / (l1 * l2);
    return v(ca2) * v(p2) * c(i2) - v(p1) * v(sa2) * c(i2) + v(eta1) * v(ca1) * v(ca2) * c(i12) +
           v(eta1) * v(sa1) * v(sa2) * c(i12) + v(eta2) * c(i2 * i2);
}

MultiPoly PhaseRing::eta1dot() const {
    const Rational i1 = 1 / l1, i12 = 1 / (l1 * l2);
    return v(eta1) * v(sa1) * v(p2) * c(i1) + v(p1) * v(ca1) * v(eta1) * c(i1) +
           v(eta1) * v(eta2) * v(sa1) * v(ca2) * c(i12) -
           v(eta1) * v(eta2) * v(ca1) * v(sa2) * c(i12);
}

MultiPoly PhaseRing::eta2dot() const {
    const Rational i2 = 1 / l2, i12 = 1 / (l1 * l2);
    return v(eta2) * v(sa2) * v(p2) * c(i2) + v(p1) * v(ca2) * v(eta2) * c(i2) -
           v(eta1) * v(eta2) * v(sa1) * v(ca2) * c(i12) +
           v(eta1) * v(eta2) * v(ca1) * v(sa2) * c(i12);
}

Derivation PhaseRing::derivation() const {
    Derivation D;
    D.ddt.resize(vars->size(), zero());
    D.ddt[eta1] = eta1dot();
    D.ddt[eta2] = eta2dot();
    D.ddt[p1] = zero();
    D.ddt[p2] = zero();
    D.ddt[ca1] = -v(sa1) * alpha1dot();
    D.ddt[sa1] = v(ca1) * alpha1dot();
    D.ddt[ca2] = -v(sa2) * alpha2dot();
    D.ddt[sa2] = v(ca2) * alpha2dot();
    if (with_lambda) D.ddt[lam] = zero();
    return D;
}

MultiPoly PhaseRing::apoly() const {
    const Rational i2 = 1 / (l1 * l1), i3 = 1 / (l1 * l1 * l1), i4 = i2 * i2;
    return v(ca1) * v(p2) * v(eta1) * c(-i3) + v(ca2) * v(eta2) * v(p2) * c(-i3) +
           v(eta2) * v(p1) * v(sa2) * c(i3) + v(p1) * v(p1) * c(-i2) + v(p2) * v(p2) * c(-i2) +
           v(p1) * v(sa1) * v(eta1) * c(i3) + v(eta2) * v(eta2) * c(-i4 / 2) +
           v(eta2) * v(eta1) * c(-i4) + v(eta1) * v(eta1) * c(-i4 / 2);
}

MultiPoly PhaseRing::gpoly() const {
    // p1*L1 + p2*L2 + (eta1 + eta2)^2 / 2 at unit equal lengths
    const MultiPoly k = v(eta1) + v(eta2);
    return v(p1) * xdot1() + v(p2) * xdot2() + k * k * c(Rational(1, 2));
}

MultiPoly PhaseRing::bpoly() const {
    const Rational q12 = 1 / (l1 * l2 * l2), q21 = 1 / (l1 * l1 * l2);
    const Rational i1 = 1 / (l1 * l1), i2 = 1 / (l2 * l2), i12 = i1 * i2;
    return v(ca1) * v(p2) * v(eta1) * c(q12) + v(ca2) * v(eta2) * v(p2) * c(q21) -
           v(eta2) * v(p1) * v(sa2) * c(q21) + v(p1) * v(p1) * c(i2 / 2) +
           v(p2) * v(p2) * c(i2 / 2) - v(p1) * v(sa1) * v(eta1) * c(q12) +
           v(p1) * v(p1) * c(i1 / 2) + v(p2) * v(p2) * c(i1 / 2) +
           v(eta2) * v(eta2) * c(i12 / 2) + v(eta1) * v(eta2) * c(i12) + c(i2 / 2) + c(i1 / 2) +
           v(eta1) * v(eta1) * c(i12 / 2);
}

MultiPoly PhaseRing::a_of(const MultiPoly& b) const {
    const Rational i1 = 1 / (l1 * l1), i2 = 1 / (l2 * l2), i12 = i1 * i2;
    return (v(p1) * v(p1) + v(p2) * v(p2)) * c(i12 / 2) - b * b * c(Rational(1, 2)) +
           b * c(i2) + b * c(i1) - c(i2 * i2 / 2) - c(i12 / 2) - c(i1 * i1 / 2);
}

MultiPoly PhaseRing::a_of_lambda() const {
    if (!with_lambda) throw std::logic_error("a_of_lambda requires the lambda variable");
    return a_of(v(lam));
}

MultiPoly PhaseRing::y1_curvature_expected() const {
    const Rational i1 = 1 / l1, i2 = 1 / (l1 * l1);
    return v(p2) * v(ca1) * c(2 * i1) - v(p1) * v(sa1) * c(2 * i1) + v(eta1) * c(i2) +
           v(eta2) * (v(ca1) * v(ca2) * c(2 * i2) + v(sa1) * v(sa2) * c(2 * i2) - c(i2));
}

MultiPoly PhaseRing::y1_curvature_transposed() const {
    const Rational i1 = 1 / l1, i2 = 1 / (l1 * l1);
    return v(p2) * v(ca1) * c(2 * i1) - v(p1) * v(sa1) * c(2 * i1) + v(eta2) * c(i2) +
           v(eta1) * (v(ca1) * v(ca2) * c(2 * i2) + v(sa1) * v(sa2) * c(2 * i2) - c(i2));
}

MultiPoly PhaseRing::y_curvature_numerator(int i) const {
    const Derivation D = derivation();
    // y_i = x - 2 l_i (ca_i, sa_i)
    const Rational li = (i == 1) ? l1 : l2;
    const Var cai = (i == 1) ? ca1 : ca2;
    const Var sai = (i == 1) ? sa1 : sa2;
    const MultiPoly ydx = xdot1() - D.ddt[cai].scaled(2 * li);
    const MultiPoly ydy = xdot2() - D.ddt[sai].scaled(2 * li);
    return ydx * derive(ydy, D) - derive(ydx, D) * ydy;
}

MultiPoly PhaseRing::y_speed_squared(int i) const {
    const Derivation D = derivation();
    const Rational li = (i == 1) ? l1 : l2;
    const Var cai = (i == 1) ? ca1 : ca2;
    const Var sai = (i == 1) ? sa1 : sa2;
    const MultiPoly ydx = xdot1() - D.ddt[cai].scaled(2 * li);
    const MultiPoly ydy = xdot2() - D.ddt[sai].scaled(2 * li);
    return ydx * ydx + ydy * ydy;
}

}  // namespace tricycle
