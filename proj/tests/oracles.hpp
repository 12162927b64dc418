#pragma once

// Independent reference computations used only by the tests.

#include <random>
#include <string>
#include <vector>

#include "dval/algorithms/algorithms.hpp"
#include "dval/io/document.hpp"

namespace oracle {

using namespace dval;

inline std::string golden(const std::string& name)
{
    return std::string(DVAL_DATA_DIR) + "/" + name + ".json";
}

// Dense truncated series: c[e] for e < size.
using Dense = std::vector<FieldElem>;

inline Dense dense(const LazySeries& s, std::size_t size)
{
    Dense d;
    for (std::size_t e = 0; e < size; ++e) d.push_back(s.coefficient(static_cast<long>(e)));
    return d;
}

inline Dense convolve(const Dense& a, const Dense& b)
{
    Dense c(std::min(a.size(), b.size()));
    for (std::size_t e = 0; e < c.size(); ++e)
        for (std::size_t i = 0; i <= e; ++i) c[e] = c[e] + a[i] * b[e - i];
    return c;
}

// Rank over Q of a dense rational matrix by plain elimination.
inline std::size_t rational_rank(std::vector<std::vector<Rational>> m)
{
    std::size_t rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t p = rank;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][c] == 0) continue;
            Rational f = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

// True when some nonzero polynomial of total degree <= max_degree vanishes on
// the tuple: the images of all such monomials, over a common denominator,
// are linearly dependent over Q.
inline bool has_relation(const std::vector<FieldElem>& gens, unsigned max_degree)
{
    std::vector<std::vector<unsigned>> exps{{}};
    for (std::size_t k = 0; k < gens.size(); ++k) {
        std::vector<std::vector<unsigned>> next;
        for (const auto& e : exps)
            for (unsigned d = 0; d <= max_degree; ++d) {
                unsigned total = d;
                for (unsigned x : e) total += x;
                if (total > max_degree) break;
                auto f = e;
                f.push_back(d);
                next.push_back(f);
            }
        exps = next;
    }
    Poly common(1);
    for (const auto& g : gens) common = common * g.denominator().pow(max_degree);
    std::vector<Poly> rows;
    for (const auto& e : exps) {
        Poly num(1), den(1);
        for (std::size_t k = 0; k < gens.size(); ++k) {
            num = num * gens[k].numerator().pow(e[k]);
            den = den * gens[k].denominator().pow(e[k]);
        }
        rows.push_back(num * *common.exact_divide(den));
    }
    std::map<Monomial, std::size_t, MonomialGreater> column;
    for (const auto& r : rows)
        for (const auto& t : r.terms()) column.emplace(t.monomial, 0);
    std::size_t c = 0;
    for (auto& [m, idx] : column) idx = c++;
    std::vector<std::vector<Rational>> mat(rows.size(), std::vector<Rational>(column.size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& t : rows[r].terms()) mat[r][column[t.monomial]] = t.coeff;
    return rational_rank(mat) < rows.size();
}

// p(var := replacement) for a polynomial in which only `var` may remain symbolic.
inline Poly compose(const Poly& p, VarIndex var, const Poly& replacement)
{
    Poly out;
    for (const auto& [e, c] : p.coefficients_in(var)) out += c * replacement.pow(e);
    return out;
}

// lim_{h->0} (f(x + h e_var) - f(x)) / h at a rational point, computed exactly
// with a fresh indeterminate h.
inline Rational difference_quotient_limit(const RatFunc& f, VarIndex var, std::map<VarIndex, Rational> point,
                                          VarIndex fresh)
{
    Rational at = point.at(var);
    point.erase(var);
    Poly shifted = Poly(at) + Poly::variable(fresh);
    RatFunc g(f.numerator().substitute(point), f.denominator().substitute(point));
    RatFunc moved(compose(g.numerator(), var, shifted), compose(g.denominator(), var, shifted));
    RatFunc base = g.substitute({{var, at}});
    RatFunc quotient = (moved - base) / RatFunc::variable(fresh);
    RatFunc limit = quotient.substitute({{fresh, Rational(0)}});
    return limit.numerator().constant_value() / limit.denominator().constant_value();
}

// Small random polynomial in the internal indices [first, first + count).
inline Poly random_poly(std::mt19937_64& rng, VarIndex first, std::size_t count, int max_terms, int max_degree,
                        bool allow_constant = true)
{
    std::uniform_int_distribution<int> coeff(-7, 7), terms(1, max_terms), deg(allow_constant ? 0 : 1, max_degree);
    std::uniform_int_distribution<std::size_t> var(0, count - 1);
    for (;;) {
        std::vector<Term> ts;
        for (int t = terms(rng); t > 0; --t) {
            std::vector<Monomial::Factor> fs;
            for (int d = deg(rng); d > 0; --d) fs.emplace_back(static_cast<VarIndex>(first + var(rng)), 1);
            int c = coeff(rng);
            ts.push_back({Monomial::from_factors(fs), Rational(c == 0 ? 1 : c)});
        }
        Poly p = Poly::from_terms(std::move(ts));
        if (!p.is_zero()) return p;
    }
}

// Random finite series with coefficients in Q(s_0, s_1), order >= lowest.
// Coefficients are symbolic with probability symbolic_percent, else rational.
inline LazySeries random_series(std::mt19937_64& rng, long lowest, long highest, int density_percent = 60,
                                int symbolic_percent = 100)
{
    std::uniform_int_distribution<int> pick(0, 99), c(-5, 5);
    std::map<long, FieldElem> terms;
    for (long e = lowest; e <= highest; ++e) {
        if (pick(rng) >= density_percent && e != lowest) continue;
        if (pick(rng) >= symbolic_percent) {
            int v = c(rng);
            Rational r(v == 0 ? 1 : v, 1 + pick(rng) % 4);
            r.canonicalize();
            terms.emplace(e, FieldElem(r));
            continue;
        }
        Poly num = random_poly(rng, 0, 2, 2, 1);
        Poly den = pick(rng) < 25 ? random_poly(rng, 0, 2, 2, 1) : Poly(1);
        terms.emplace(e, RatFunc(num, den));
    }
    return LazySeries::from_parts(std::move(terms));
}

// Embedding X_k -> t^values[k] over an empty field.
inline Embedding monomial_embedding(const std::vector<std::int64_t>& values)
{
    std::vector<std::string> names;
    std::vector<LazySeries> images;
    for (std::size_t k = 0; k < values.size(); ++k) {
        names.push_back("X" + std::to_string(k + 1));
        images.push_back(LazySeries::monomial(FieldElem(1), values[k]));
    }
    return Embedding(FieldPresentation{}, names, images);
}

} // namespace oracle
