#include "tricycle/multipoly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace tricycle {

int VariableSet::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == name) return static_cast<int>(i);
    }
    return -1;
}

unsigned monomial_degree(const Exponents& a) {
    unsigned d = 0;
    for (unsigned e : a) d += e;
    return d;
}

int compare_monomials(const Exponents& a, const Exponents& b, MonomialOrder ord) {
    if (ord == MonomialOrder::lex) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        }
        return 0;
    }
    // graded reverse lexicographic
    const unsigned da = monomial_degree(a), db = monomial_degree(b);
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

bool monomial_divides(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

Exponents monomial_mul(const Exponents& a, const Exponents& b) {
    Exponents out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Exponents monomial_div(const Exponents& a, const Exponents& b) {
    Exponents out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

Exponents monomial_lcm(const Exponents& a, const Exponents& b) {
    Exponents out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
    return out;
}

MultiPoly MultiPoly::zero(VariableSetPtr vars, MonomialOrder ord) {
    return MultiPoly(std::move(vars), ord);
}

MultiPoly MultiPoly::constant(VariableSetPtr vars, MonomialOrder ord, Rational c) {
    MultiPoly p(std::move(vars), ord);
    if (c != 0) p.terms_.push_back({Exponents(p.vars_->size(), 0), std::move(c)});
    return p;
}

MultiPoly MultiPoly::variable(VariableSetPtr vars, MonomialOrder ord, std::size_t index) {
    MultiPoly p(std::move(vars), ord);
    Exponents m(p.vars_->size(), 0);
    m.at(index) = 1;
    p.terms_.push_back({std::move(m), Rational(1)});
    return p;
}

MultiPoly MultiPoly::from_terms(VariableSetPtr vars, MonomialOrder ord,
                                std::vector<Term> terms) {
    MultiPoly p(std::move(vars), ord);
    std::map<Exponents, Rational, std::function<bool(const Exponents&, const Exponents&)>> acc(
        [ord](const Exponents& a, const Exponents& b) {
            return compare_monomials(a, b, ord) > 0;
        });
    for (auto& t : terms) acc[t.m] += t.c;
    for (auto& [m, c] : acc) {
        if (c != 0) p.terms_.push_back({m, c});
    }
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && monomial_degree(terms_[0].m) == 0);
}

const Term& MultiPoly::leading() const {
    if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
    return terms_.front();
}

unsigned MultiPoly::total_degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, monomial_degree(t.m));
    return d;
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
    if (vars_ == o.vars_) return;
    if (vars_ && o.vars_ && *vars_ == *o.vars_ && order_ == o.order_) return;
    throw VariableSetMismatch();
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_compatible(o);
    MultiPoly out(vars_, order_);
    out.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        const int cmp = compare_monomials(terms_[i].m, o.terms_[j].m, order_);
        if (cmp > 0) {
            out.terms_.push_back(terms_[i++]);
        } else if (cmp < 0) {
            out.terms_.push_back(o.terms_[j++]);
        } else {
            Rational c = terms_[i].c + o.terms_[j].c;
            if (c != 0) out.terms_.push_back({terms_[i].m, std::move(c)});
            ++i;
            ++j;
        }
    }
    while (i < terms_.size()) out.terms_.push_back(terms_[i++]);
    while (j < o.terms_.size()) out.terms_.push_back(o.terms_[j++]);
    return out;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(vars_, order_);
    out.terms_ = terms_;
    for (auto& t : out.terms_) t.c = -t.c;
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::scaled(const Rational& c) const {
    if (c == 0) return MultiPoly(vars_, order_);
    MultiPoly out(vars_, order_);
    out.terms_ = terms_;
    for (auto& t : out.terms_) t.c *= c;
    return out;
}

MultiPoly MultiPoly::mono_scaled(const Exponents& m, const Rational& c) const {
    if (c == 0) return MultiPoly(vars_, order_);
    MultiPoly out(vars_, order_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        out.terms_.push_back({monomial_mul(t.m, m), t.c * c});
    }
    return out;  // multiplying by a fixed monomial preserves the ordering
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_compatible(o);
    if (is_zero() || o.is_zero()) return MultiPoly(vars_, order_);
    std::map<Exponents, Rational, std::function<bool(const Exponents&, const Exponents&)>> acc(
        [ord = order_](const Exponents& a, const Exponents& b) {
            return compare_monomials(a, b, ord) > 0;
        });
    for (const auto& ta : terms_) {
        for (const auto& tb : o.terms_) {
            acc[monomial_mul(ta.m, tb.m)] += ta.c * tb.c;
        }
    }
    MultiPoly out(vars_, order_);
    for (auto& [m, c] : acc) {
        if (c != 0) out.terms_.push_back({m, c});
    }
    return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly out = constant(vars_, order_, 1);
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1u) out = out * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return out;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c) return false;
    }
    return true;
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
    if (point.size() != vars_->size()) {
        throw std::invalid_argument("eval: point dimension mismatch");
    }
    Rational sum = 0;
    for (const auto& t : terms_) {
        Rational prod = t.c;
        for (std::size_t i = 0; i < t.m.size(); ++i) {
            for (unsigned e = 0; e < t.m[i]; ++e) prod *= point[i];
        }
        sum += prod;
    }
    return sum;
}

double MultiPoly::eval_double(const std::vector<double>& point) const {
    if (point.size() != vars_->size()) {
        throw std::invalid_argument("eval_double: point dimension mismatch");
    }
    double sum = 0.0;
    for (const auto& t : terms_) {
        double prod = static_cast<double>(t.c);
        for (std::size_t i = 0; i < t.m.size(); ++i) {
            for (unsigned e = 0; e < t.m[i]; ++e) prod *= point[i];
        }
        sum += prod;
    }
    return sum;
}

MultiPoly MultiPoly::lifted(const VariableSetPtr& bigger) const {
    std::vector<int> map(vars_->size());
    for (std::size_t i = 0; i < vars_->size(); ++i) {
        map[i] = bigger->index_of(vars_->names[i]);
        if (map[i] < 0) throw VariableSetMismatch();
    }
    std::vector<Term> terms;
    terms.reserve(terms_.size());
    for (const auto& t : terms_) {
        Exponents m(bigger->size(), 0);
        for (std::size_t i = 0; i < t.m.size(); ++i) m[static_cast<std::size_t>(map[i])] = t.m[i];
        terms.push_back({std::move(m), t.c});
    }
    return from_terms(bigger, order_, std::move(terms));
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) os << " + ";
        first = false;
        os << t.c;
        for (std::size_t i = 0; i < t.m.size(); ++i) {
            if (t.m[i] > 0) {
                os << "*" << vars_->names[i];
                if (t.m[i] > 1) os << "^" << t.m[i];
            }
        }
    }
    return os.str();
}

}  // namespace tricycle
