#include "tricycle/proofs.hpp"

#include <chrono>

namespace tricycle {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// rational point on the unit circle from the tangent half-angle t
std::pair<Rational, Rational> circle_point(const Rational& t) {
    const Rational den = 1 + t * t;
    return {(1 - t * t) / den, 2 * t / den};
}

MultiPoly swap_tracks(const MultiPoly& p) {
    // exchange (eta1, ca1, sa1) with (eta2, ca2, sa2)
    std::vector<Term> terms;
    for (const auto& t : p.terms()) {
        Exponents m = t.m;
        std::swap(m[PhaseRing::eta1], m[PhaseRing::eta2]);
        std::swap(m[PhaseRing::ca1], m[PhaseRing::ca2]);
        std::swap(m[PhaseRing::sa1], m[PhaseRing::sa2]);
        terms.push_back({std::move(m), t.c});
    }
    return MultiPoly::from_terms(p.vars(), p.order(), std::move(terms));
}

bool vanishes_on_samples(const MultiPoly& p, const std::vector<std::vector<Rational>>& states) {
    for (const auto& s : states) {
        if (p.eval(s) != 0) return false;
    }
    return true;
}

struct KappaChain {
    MultiPoly k0, k1, k2, k3, k4, k5;
};

KappaChain kappa_chain(const PhaseRing& ring, const GroebnerBasis& gb, const Derivation& D) {
    KappaChain ch{ring.kappa_x(), ring.zero(), ring.zero(),
                  ring.zero(),    ring.zero(), ring.zero()};
    ch.k1 = normal_form(derive(ch.k0, D), gb);
    ch.k2 = normal_form(derive(ch.k1, D), gb);
    ch.k3 = normal_form(derive(ch.k2, D), gb);
    ch.k4 = normal_form(derive(ch.k3, D), gb);
    ch.k5 = normal_form(derive(ch.k4, D), gb);
    return ch;
}

}  // namespace

std::vector<std::vector<Rational>> rational_unit_energy_states(const PhaseRing& ring,
                                                               std::size_t count) {
    std::vector<std::vector<Rational>> out;
    out.reserve(count);
    for (std::size_t s = 0; out.size() < count; ++s) {
        const long k = static_cast<long>(s);
        const Rational t1(2 * k + 1, k + 4);
        const Rational t2(k + 2, 2 * k + 5);
        const Rational tL(3 * k + 2, k + 7);
        const Rational e1(k % 5 - 2, 1 + k % 3);
        const Rational e2((k + 1) % 7 - 3, 2 + k % 2);
        auto [c1, s1] = circle_point(t1);
        auto [c2, s2] = circle_point(t2);
        auto [L1, L2] = circle_point(tL);
        if (s1 == s2 && c1 == c2) continue;  // avoid the collision locus
        const Rational p1 = L1 + e1 * s1 / ring.l1 + e2 * s2 / ring.l2;
        const Rational p2 = L2 - e1 * c1 / ring.l1 - e2 * c2 / ring.l2;
        std::vector<Rational> st = {e1, e2, p1, p2, c1, c2, s1, s2};
        if (ring.with_lambda) {
            PhaseRing base = make_phase_ring(ring.l1, ring.l2, false);
            st.push_back(base.bpoly().eval(st));
        }
        out.push_back(std::move(st));
    }
    return out;
}

SolitonConstantsProof derive_soliton_constants(const Rational& l1, const Rational& l2) {
    const auto t0 = std::chrono::steady_clock::now();
    SolitonConstantsProof proof;

    const PhaseRing ring = make_phase_ring(l1, l2);
    const GroebnerBasis gb = buchberger(ring.unit_energy_ideal());
    const Derivation D = ring.derivation();
    auto nf = [&](const MultiPoly& p) { return normal_form(p, gb); };

    const KappaChain ch = kappa_chain(ring, gb, D);
    const Rational half(1, 2);
    const MultiPoly P = nf(-ch.k2 - ch.k0.pow(3).scaled(half));
    const MultiPoly Q = nf(ch.k0 * ch.k0 * ch.k2.scaled(Rational(5, 2)) +
                           ch.k0 * ch.k1 * ch.k1.scaled(Rational(5, 2)) +
                           ch.k0.pow(5).scaled(Rational(3, 8)) + ch.k4);
    const MultiPoly Pp = nf(-ch.k3 - ch.k0 * ch.k0 * ch.k1.scaled(Rational(3, 2)));
    const MultiPoly Qp = nf(ch.k0 * ch.k0 * ch.k3.scaled(Rational(5, 2)) +
                            ch.k0 * ch.k1 * ch.k2.scaled(Rational(10)) +
                            ch.k1.pow(3).scaled(Rational(5, 2)) +
                            ch.k0.pow(4) * ch.k1.scaled(Rational(15, 8)) + ch.k5);

    const MultiPoly detM = nf(ch.k0 * Pp - ch.k1 * P);
    if (detM.is_zero()) {
        proof.degenerate = true;  // equal lengths: fall back to the elastica constant
        proof.elapsed_s = seconds_since(t0);
        return proof;
    }
    const MultiPoly bnum = nf(Q * ch.k1 - Qp * ch.k0);
    const MultiPoly anum = nf(P * Qp - Pp * Q);

    proof.b_recovered = quotient_divide(bnum, detM, gb, 4);
    const MultiPoly b_display = ring.bpoly();
    proof.b_matches_display = (proof.b_recovered == nf(b_display));
    proof.b_is_constant = verify_constant(b_display, gb, D);
    proof.a_identity = nf(anum - detM * ring.a_of(b_display)).is_zero();

    // quadratic-in-lambda reduction over the ideal extended with b - lambda
    const PhaseRing ringL = make_phase_ring(l1, l2, true);
    std::vector<MultiPoly> gens2 = ringL.unit_energy_ideal();
    gens2.push_back(ringL.bpoly() - ringL.v(PhaseRing::lam));
    const GroebnerBasis gb2 = buchberger(gens2);
    const MultiPoly anum_l = anum.lifted(ringL.vars);
    const MultiPoly detM_l = detM.lifted(ringL.vars);
    proof.a_lambda_quadratic =
        normal_form(anum_l - detM_l * ringL.a_of_lambda(), gb2).is_zero();

    const auto states = rational_unit_energy_states(ring, 50);
    const auto statesL = rational_unit_energy_states(ringL, 50);
    proof.sample_confirmed =
        vanishes_on_samples(bnum - detM * b_display, states) &&
        vanishes_on_samples(anum - detM * ring.a_of(b_display), states) &&
        vanishes_on_samples(anum_l - detM_l * ringL.a_of_lambda(), statesL);

    proof.elapsed_s = seconds_since(t0);
    return proof;
}

Y1CurvatureProof verify_y1_curvature(const Rational& l) {
    const auto t0 = std::chrono::steady_clock::now();
    Y1CurvatureProof proof;

    const PhaseRing ring = make_phase_ring(l, l);
    const GroebnerBasis gb = buchberger(ring.unit_energy_ideal());

    const MultiPoly num1 = ring.y_curvature_numerator(1);
    const MultiPoly expected = ring.y1_curvature_expected();
    proof.reduction_matches_expected = normal_form(num1 - expected, gb).is_zero();
    proof.transposed_variant_fails =
        !normal_form(num1 - ring.y1_curvature_transposed(), gb).is_zero();

    const MultiPoly num2 = ring.y_curvature_numerator(2);
    proof.y2_swap_matches = normal_form(num2 - swap_tracks(expected), gb).is_zero();

    proof.unit_speed =
        normal_form(ring.y_speed_squared(1) - ring.c(Rational(1)), gb).is_zero();

    const auto states = rational_unit_energy_states(ring, 50);
    proof.sample_confirmed = vanishes_on_samples(num1 - expected, states) &&
                             vanishes_on_samples(num2 - swap_tracks(expected), states);

    proof.elapsed_s = seconds_since(t0);
    return proof;
}

std::vector<ProofResult> run_proof_suite(const Rational& l1, const Rational& l2) {
    std::vector<ProofResult> out;
    const std::string params =
        "l1=" + l1.str() + ", l2=" + l2.str();

    const PhaseRing ring = make_phase_ring(l1, l2);
    const GroebnerBasis gb = buchberger(ring.unit_energy_ideal());
    const Derivation D = ring.derivation();
    const auto states = rational_unit_energy_states(ring, 50);

    auto record = [&](const std::string& claim, auto&& body) {
        const auto t0 = std::chrono::steady_clock::now();
        ProofResult r;
        r.claim = claim;
        r.parameters = params;
        MultiPoly remainder = body();
        r.proved = remainder.is_zero();
        r.remainder_terms = static_cast<int>(remainder.term_count());
        r.elapsed_s = seconds_since(t0);
        out.push_back(std::move(r));
    };

    record("unit speed: |xdot|^2 reduces to 1", [&] {
        const MultiPoly sq = ring.xdot1() * ring.xdot1() + ring.xdot2() * ring.xdot2();
        MultiPoly rem = normal_form(sq - ring.c(Rational(1)), gb);
        if (rem.is_zero() && !vanishes_on_samples(sq - ring.c(Rational(1)), states)) {
            rem = ring.c(Rational(1));  // evaluation disagrees: flag as unproved
        }
        return rem;
    });

    record("curvature numerator reduces to eta1/l1^2 + eta2/l2^2", [&] {
        const MultiPoly num =
            ring.xdot1() * derive(ring.xdot2(), D) - derive(ring.xdot1(), D) * ring.xdot2();
        MultiPoly rem = normal_form(num - ring.kappa_x(), gb);
        if (rem.is_zero() && !vanishes_on_samples(num - ring.kappa_x(), states)) {
            rem = ring.c(Rational(1));
        }
        return rem;
    });

    record("energy H is a constant of motion", [&] {
        const MultiPoly dH = derive(ring.hpoly(), D);
        MultiPoly rem = normal_form(dH, gb);
        if (rem.is_zero() && !vanishes_on_samples(dH, states)) rem = ring.c(Rational(1));
        return rem;
    });

    record("momenta p1, p2 are constants of motion", [&] {
        const MultiPoly dp = derive(ring.v(PhaseRing::p1), D) + derive(ring.v(PhaseRing::p2), D);
        return normal_form(dp, gb);
    });

    const bool equal = (l1 == l2);
    if (equal) {
        record("elastica constant A is a constant of motion", [&] {
            const MultiPoly dA = derive(ring.apoly(), D);
            MultiPoly rem = normal_form(dA, gb);
            if (rem.is_zero() && !vanishes_on_samples(dA, states)) rem = ring.c(Rational(1));
            return rem;
        });
        record("curvature satisfies k'' + k^3/2 + A k = 0", [&] {
            const MultiPoly k0 = ring.kappa_x();
            const MultiPoly k1 = normal_form(derive(k0, D), gb);
            const MultiPoly k2 = normal_form(derive(k1, D), gb);
            const MultiPoly expr = k2 + k0.pow(3).scaled(Rational(1, 2)) + ring.apoly() * k0;
            return normal_form(expr, gb);
        });
        if (l1 == 1) {
            record("integral G is a constant of motion", [&] {
                const MultiPoly dG = derive(ring.gpoly(), D);
                MultiPoly rem = normal_form(dG, gb);
                if (rem.is_zero() && !vanishes_on_samples(dG, states)) rem = ring.c(Rational(1));
                return rem;
            });
            record("b - G reduces to 1/l^2", [&] {
                return normal_form(ring.bpoly() - ring.gpoly() - ring.c(Rational(1)), gb);
            });
        }
        record("y1 track curvature reduction", [&] {
            const Y1CurvatureProof y = verify_y1_curvature(l1);
            const bool ok = y.reduction_matches_expected && y.transposed_variant_fails &&
                            y.y2_swap_matches && y.unit_speed && y.sample_confirmed;
            return ok ? ring.zero() : ring.c(Rational(1));
        });
    } else {
        record("integral b is a constant of motion", [&] {
            const MultiPoly db = derive(ring.bpoly(), D);
            MultiPoly rem = normal_form(db, gb);
            if (rem.is_zero() && !vanishes_on_samples(db, states)) rem = ring.c(Rational(1));
            return rem;
        });
        record("2-soliton constants recovered and verified", [&] {
            const SolitonConstantsProof sp = derive_soliton_constants(l1, l2);
            const bool ok = !sp.degenerate && sp.b_matches_display && sp.b_is_constant &&
                            sp.a_identity && sp.a_lambda_quadratic && sp.sample_confirmed;
            return ok ? ring.zero() : ring.c(Rational(1));
        });
    }
    return out;
}

}  // namespace tricycle
