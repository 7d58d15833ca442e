#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tricycle/phase_ring.hpp"

namespace tricycle {

struct ProofResult {
    std::string claim;
    std::string parameters;
    bool proved{false};
    int remainder_terms{0};  // terms left by a failed zero-reduction
    double elapsed_s{0.0};
};

/// Deterministic exact points on the unit-energy variety: rational circle
/// points for (ca_i, sa_i) and (L1, L2), momenta solved exactly.
/// Each entry is an assignment in ring variable order (lambda, when
/// present, is set to the value of the b integral).
std::vector<std::vector<Rational>> rational_unit_energy_states(const PhaseRing& ring,
                                                               std::size_t count);

struct SolitonConstantsProof {
    bool degenerate{false};  // elimination determinant vanishes (equal lengths)
    MultiPoly b_recovered;
    bool b_matches_display{false};
    bool b_is_constant{false};
    bool a_identity{false};
    bool a_lambda_quadratic{false};
    bool sample_confirmed{false};
    double elapsed_s{0.0};
};

/// Recover the 2-soliton constants (a, b) from the curvature jet chain by
/// exact elimination in the quotient ring, and verify them against the
/// closed-form expressions.
SolitonConstantsProof derive_soliton_constants(const Rational& l1, const Rational& l2);

struct Y1CurvatureProof {
    bool reduction_matches_expected{false};
    bool transposed_variant_fails{false};
    bool y2_swap_matches{false};
    bool unit_speed{false};
    bool sample_confirmed{false};
    double elapsed_s{0.0};
};

/// First-principles reduction of the y1-track curvature at equal lengths.
Y1CurvatureProof verify_y1_curvature(const Rational& l);

/// Full verification suite for one length pair (equal or unequal route).
std::vector<ProofResult> run_proof_suite(const Rational& l1, const Rational& l2);

}  // namespace tricycle
