#pragma once

#include <vector>

#include "tricycle/multipoly.hpp"

namespace tricycle {

/// Reduced Groebner basis: auto-reduced, monic generators sorted by
/// leading monomial. Every S-polynomial of basis pairs reduces to zero.
struct GroebnerBasis {
    std::vector<MultiPoly> gens;
    MonomialOrder order{MonomialOrder::grevlex};
};

/// Remainder of multivariate division of p by the basis (zero iff p lies
/// in the ideal when the basis is a Groebner basis).
MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& basis);
MultiPoly normal_form(const MultiPoly& p, const GroebnerBasis& gb);

/// Buchberger's algorithm with the product and chain criteria.
GroebnerBasis buchberger(std::vector<MultiPoly> gens);

/// Formal time-derivation: an assignment of each variable to its
/// derivative polynomial, extended to the ring by the Leibniz rule.
struct Derivation {
    std::vector<MultiPoly> ddt;  // indexed by variable position
};

MultiPoly derive(const MultiPoly& p, const Derivation& D);

/// True iff the formal derivative of p reduces to zero modulo the basis.
bool verify_constant(const MultiPoly& p, const GroebnerBasis& gb, const Derivation& D);

/// Solve q * divisor == rhs in the quotient ring by expanding q over the
/// normal-form monomials of total degree <= max_degree and solving the
/// resulting exact linear system. Returns the unique solution, or throws
/// if the system is inconsistent or underdetermined at every degree up
/// to max_degree.
MultiPoly quotient_divide(const MultiPoly& rhs, const MultiPoly& divisor,
                          const GroebnerBasis& gb, unsigned max_degree);

}  // namespace tricycle
