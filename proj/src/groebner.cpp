#include "tricycle/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tricycle {

namespace {

// p - (t / LT(g)) * g  where t is the leading term of p
MultiPoly reduce_leading_once(const MultiPoly& p, const MultiPoly& g) {
    const Term& t = p.leading();
    const Term& lg = g.leading();
    return p - g.mono_scaled(monomial_div(t.m, lg.m), t.c / lg.c);
}

}  // namespace

MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& basis) {
    MultiPoly h = p;
    MultiPoly rem(p.vars(), p.order());
    std::vector<Term> rem_terms;
    while (!h.is_zero()) {
        const Term& lt = h.leading();
        const MultiPoly* reducer = nullptr;
        for (const auto& g : basis) {
            if (!g.is_zero() && monomial_divides(g.leading().m, lt.m)) {
                reducer = &g;
                break;
            }
        }
        if (reducer != nullptr) {
            h = reduce_leading_once(h, *reducer);
        } else {
            rem_terms.push_back(lt);
            h = h - MultiPoly::from_terms(p.vars(), p.order(), {lt});
        }
    }
    return MultiPoly::from_terms(p.vars(), p.order(), std::move(rem_terms));
}

MultiPoly normal_form(const MultiPoly& p, const GroebnerBasis& gb) {
    return normal_form(p, gb.gens);
}

GroebnerBasis buchberger(std::vector<MultiPoly> gens) {
    std::vector<MultiPoly> G;
    for (auto& g : gens) {
        if (!g.is_zero()) G.push_back(std::move(g));
    }
    if (G.empty()) throw std::invalid_argument("buchberger: no nonzero generators");
    const MonomialOrder ord = G.front().order();

    using Pair = std::pair<std::size_t, std::size_t>;
    std::set<Pair> pending;
    std::set<Pair> done;
    for (std::size_t i = 0; i < G.size(); ++i) {
        for (std::size_t j = i + 1; j < G.size(); ++j) pending.insert({i, j});
    }

    auto coprime = [&](std::size_t i, std::size_t j) {
        const auto& a = G[i].leading().m;
        const auto& b = G[j].leading().m;
        for (std::size_t k = 0; k < a.size(); ++k) {
            if (a[k] > 0 && b[k] > 0) return false;
        }
        return true;
    };

    auto chain_skippable = [&](std::size_t i, std::size_t j) {
        const Exponents l = monomial_lcm(G[i].leading().m, G[j].leading().m);
        for (std::size_t k = 0; k < G.size(); ++k) {
            if (k == i || k == j) continue;
            if (!monomial_divides(G[k].leading().m, l)) continue;
            const Pair pik{std::min(i, k), std::max(i, k)};
            const Pair pjk{std::min(j, k), std::max(j, k)};
            if (done.count(pik) && done.count(pjk)) return true;
        }
        return false;
    };

    while (!pending.empty()) {
        // normal selection: smallest lcm in the monomial order
        auto best = pending.begin();
        Exponents best_lcm =
            monomial_lcm(G[best->first].leading().m, G[best->second].leading().m);
        for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
            Exponents l = monomial_lcm(G[it->first].leading().m, G[it->second].leading().m);
            if (compare_monomials(l, best_lcm, ord) < 0) {
                best = it;
                best_lcm = std::move(l);
            }
        }
        const auto [i, j] = *best;
        pending.erase(best);
        done.insert({i, j});

        if (coprime(i, j) || chain_skippable(i, j)) continue;

        const Term& li = G[i].leading();
        const Term& lj = G[j].leading();
        const Exponents l = monomial_lcm(li.m, lj.m);
        const MultiPoly spoly = G[i].mono_scaled(monomial_div(l, li.m), Rational(1) / li.c) -
                                G[j].mono_scaled(monomial_div(l, lj.m), Rational(1) / lj.c);
        MultiPoly r = normal_form(spoly, G);
        if (!r.is_zero()) {
            G.push_back(std::move(r));
            const std::size_t k = G.size() - 1;
            for (std::size_t m = 0; m < k; ++m) pending.insert({m, k});
        }
    }

    // minimalize: drop generators whose leading term another one divides
    std::vector<MultiPoly> minimal;
    for (std::size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < G.size(); ++j) {
            if (i == j) continue;
            if (monomial_divides(G[j].leading().m, G[i].leading().m)) {
                if (G[j].leading().m != G[i].leading().m || j < i) {
                    redundant = true;
                    break;
                }
            }
        }
        if (!redundant) minimal.push_back(G[i]);
    }

    // reduce each generator against the others and normalize to monic
    GroebnerBasis out;
    out.order = ord;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MultiPoly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j) {
            if (j != i) others.push_back(minimal[j]);
        }
        MultiPoly r = normal_form(minimal[i], others);
        if (!r.is_zero()) out.gens.push_back(r.scaled(Rational(1) / r.leading().c));
    }
    std::sort(out.gens.begin(), out.gens.end(), [ord](const MultiPoly& a, const MultiPoly& b) {
        return compare_monomials(a.leading().m, b.leading().m, ord) > 0;
    });
    return out;
}

MultiPoly derive(const MultiPoly& p, const Derivation& D) {
    MultiPoly out(p.vars(), p.order());
    for (const auto& t : p.terms()) {
        for (std::size_t i = 0; i < t.m.size(); ++i) {
            if (t.m[i] == 0) continue;
            Exponents m = t.m;
            m[i] -= 1;
            out = out + D.ddt[i].mono_scaled(m, t.c * t.m[i]);
        }
    }
    return out;
}

bool verify_constant(const MultiPoly& p, const GroebnerBasis& gb, const Derivation& D) {
    return normal_form(derive(p, D), gb).is_zero();
}

namespace {

void enumerate_reduced_monomials(const GroebnerBasis& gb, std::size_t nvars, unsigned max_degree,
                                 Exponents& cur, std::size_t pos, unsigned used,
                                 std::vector<Exponents>& out) {
    if (pos == nvars) {
        for (const auto& g : gb.gens) {
            if (monomial_divides(g.leading().m, cur)) return;
        }
        out.push_back(cur);
        return;
    }
    for (unsigned e = 0; e + used <= max_degree; ++e) {
        cur[pos] = e;
        enumerate_reduced_monomials(gb, nvars, max_degree, cur, pos + 1, used + e, out);
    }
    cur[pos] = 0;
}

}  // namespace

MultiPoly quotient_divide(const MultiPoly& rhs, const MultiPoly& divisor,
                          const GroebnerBasis& gb, unsigned max_degree) {
    const auto vars = rhs.vars();
    const MonomialOrder ord = rhs.order();
    const std::size_t nvars = vars->size();

    const MultiPoly rhs_nf = normal_form(rhs, gb);

    for (unsigned deg = 2; deg <= max_degree; ++deg) {
        std::vector<Exponents> basis;
        Exponents cur(nvars, 0);
        enumerate_reduced_monomials(gb, nvars, deg, cur, 0, 0, basis);

        // columns: NF(monomial * divisor); rows: every monomial appearing
        std::map<Exponents, std::size_t> row_of;
        std::vector<MultiPoly> cols;
        cols.reserve(basis.size());
        for (const auto& m : basis) {
            cols.push_back(normal_form(divisor.mono_scaled(m, Rational(1)), gb));
            for (const auto& t : cols.back().terms()) row_of.emplace(t.m, 0);
        }
        for (const auto& t : rhs_nf.terms()) row_of.emplace(t.m, 0);
        std::size_t nrows = 0;
        for (auto& [m, idx] : row_of) idx = nrows++;

        const std::size_t ncols = basis.size();
        std::vector<std::vector<Rational>> A(nrows, std::vector<Rational>(ncols + 1, Rational(0)));
        for (std::size_t jc = 0; jc < ncols; ++jc) {
            for (const auto& t : cols[jc].terms()) A[row_of[t.m]][jc] = t.c;
        }
        for (const auto& t : rhs_nf.terms()) A[row_of[t.m]][ncols] = t.c;

        // exact Gaussian elimination
        std::vector<std::size_t> pivot_col;
        std::size_t row = 0;
        for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
            std::size_t sel = row;
            while (sel < nrows && A[sel][col] == 0) ++sel;
            if (sel == nrows) continue;
            std::swap(A[sel], A[row]);
            const Rational inv = Rational(1) / A[row][col];
            for (auto& v : A[row]) v *= inv;
            for (std::size_t r = 0; r < nrows; ++r) {
                if (r == row || A[r][col] == 0) continue;
                const Rational f = A[r][col];
                for (std::size_t cc = col; cc <= ncols; ++cc) A[r][cc] -= f * A[row][cc];
            }
            pivot_col.push_back(col);
            ++row;
        }
        bool consistent = true;
        for (std::size_t r = row; r < nrows; ++r) {
            if (A[r][ncols] != 0) {
                consistent = false;
                break;
            }
        }
        if (!consistent) continue;  // degree bound too small
        if (pivot_col.size() != ncols) {
            // underdetermined: a larger degree will not improve uniqueness
            throw std::runtime_error("quotient_divide: solution not unique");
        }
        std::vector<Term> terms;
        for (std::size_t r = 0; r < pivot_col.size(); ++r) {
            if (A[r][ncols] != 0) terms.push_back({basis[pivot_col[r]], A[r][ncols]});
        }
        return MultiPoly::from_terms(vars, ord, std::move(terms));
    }
    throw std::runtime_error("quotient_divide: no polynomial quotient up to the degree bound");
}

}  // namespace tricycle
