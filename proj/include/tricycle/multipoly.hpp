#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace tricycle {

using Rational = boost::multiprecision::cpp_rational;

/// Ordered list of polynomial variable names; the order fixes the
/// monomial order's variable significance (first = most significant).
struct VariableSet {
    std::vector<std::string> names;

    std::size_t size() const { return names.size(); }
    int index_of(const std::string& name) const;
    bool operator==(const VariableSet& o) const { return names == o.names; }
};

using VariableSetPtr = std::shared_ptr<const VariableSet>;

enum class MonomialOrder { grevlex, lex };

using Exponents = std::vector<unsigned>;

/// Three-way comparison: positive if a > b in the order.
int compare_monomials(const Exponents& a, const Exponents& b, MonomialOrder ord);

bool monomial_divides(const Exponents& a, const Exponents& b);  // a | b
Exponents monomial_mul(const Exponents& a, const Exponents& b);
Exponents monomial_div(const Exponents& a, const Exponents& b);
Exponents monomial_lcm(const Exponents& a, const Exponents& b);
unsigned monomial_degree(const Exponents& a);

struct Term {
    Exponents m;
    Rational c;
};

class VariableSetMismatch : public std::runtime_error {
  public:
    VariableSetMismatch() : std::runtime_error("operands use different variable sets") {}
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Terms are kept sorted descending in the monomial order; no zero
/// coefficients are stored. Immutable value semantics.
class MultiPoly {
  public:
    MultiPoly() = default;
    MultiPoly(VariableSetPtr vars, MonomialOrder ord) : vars_(std::move(vars)), order_(ord) {}

    static MultiPoly zero(VariableSetPtr vars, MonomialOrder ord);
    static MultiPoly constant(VariableSetPtr vars, MonomialOrder ord, Rational c);
    static MultiPoly variable(VariableSetPtr vars, MonomialOrder ord, std::size_t index);
    static MultiPoly from_terms(VariableSetPtr vars, MonomialOrder ord, std::vector<Term> terms);

    const VariableSetPtr& vars() const { return vars_; }
    MonomialOrder order() const { return order_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }
    const Term& leading() const;
    unsigned total_degree() const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly scaled(const Rational& c) const;
    MultiPoly mono_scaled(const Exponents& m, const Rational& c) const;
    MultiPoly pow(unsigned e) const;

    bool operator==(const MultiPoly& o) const;

    Rational eval(const std::vector<Rational>& point) const;
    double eval_double(const std::vector<double>& point) const;

    /// Re-express over a superset variable list (match by name).
    MultiPoly lifted(const VariableSetPtr& bigger) const;

    std::string str() const;

  private:
    void check_compatible(const MultiPoly& o) const;

    VariableSetPtr vars_;
    MonomialOrder order_{MonomialOrder::grevlex};
    std::vector<Term> terms_;
};

}  // namespace tricycle
