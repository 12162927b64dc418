#include "dval/field/jacobian.hpp"

#include <omp.h>

#include <map>

#include "dval/error.hpp"

namespace dval {

FieldElem partial_derivative(const FieldElem& a, std::size_t symbol, const FieldPresentation& field)
{
    if (symbol >= field.size())
        throw InputError("unknown symbol index " + std::to_string(symbol) + " in partial derivative");
    return a.derivative(static_cast<VarIndex>(symbol));
}

namespace {

Poly lcm(const Poly& a, const Poly& b)
{
    Poly g = gcd(a, b);
    return make_monic(*(a * b).exact_divide(g));
}

std::size_t rational_rank(std::vector<std::vector<Rational>> m)
{
    std::size_t rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t p = rank;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t r = rank + 1; r < m.size(); ++r) {
            if (m[r][c] == 0) continue;
            Rational f = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

// Rank of the cleared Jacobian at a fixed rational point: a lower bound for
// the rank over Q(s).
std::size_t rank_at_point(const std::vector<std::vector<Poly>>& m, std::size_t symbols)
{
    std::map<VarIndex, Rational> point;
    for (std::size_t j = 0; j < symbols; ++j) point[static_cast<VarIndex>(j)] = Rational(3 + 7 * static_cast<long>(j), 2 + static_cast<long>(j) % 3);
    for (auto& [v, x] : point) x.canonicalize();
    std::vector<std::vector<Rational>> at(m.size(), std::vector<Rational>(symbols));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < symbols; ++j)
            if (!m[i][j].is_zero()) at[i][j] = m[i][j].substitute(point).constant_value();
    return rational_rank(std::move(at));
}

} // namespace

std::vector<std::vector<Poly>> cleared_jacobian(std::span<const FieldElem> elems, std::size_t symbols)
{
    const long rows = static_cast<long>(elems.size());
    const long cols = static_cast<long>(symbols);
    std::vector<std::vector<RatFunc>> d(elems.size(), std::vector<RatFunc>(symbols));

#pragma omp parallel for collapse(2) schedule(dynamic)
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j) d[i][j] = elems[i].derivative(static_cast<VarIndex>(j));

    std::vector<std::vector<Poly>> m(elems.size(), std::vector<Poly>(symbols));
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < rows; ++i) {
        Poly l(1);
        for (const auto& e : d[i])
            if (!e.is_zero() && !e.is_polynomial()) l = lcm(l, e.denominator());
        for (long j = 0; j < cols; ++j) {
            const RatFunc& e = d[i][j];
            if (e.is_zero()) continue;
            // den is monic, so den | l exactly
            m[i][j] = e.numerator() * *l.exact_divide(e.denominator());
        }
    }
    return m;
}

std::size_t jacobian_rank(std::span<const FieldElem> elems, std::size_t symbols)
{
    auto m = cleared_jacobian(elems, symbols);
    const std::size_t rows = m.size();
    if (rows <= symbols && rank_at_point(m, symbols) == rows) return rows;
    Poly prev(1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < symbols && rank < rows; ++col) {
        std::size_t p = rank;
        while (p < rows && m[p][col].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[rank]);
        const Poly& pivot = m[rank][col];
        const long first = static_cast<long>(rank + 1);
        const long last = static_cast<long>(rows);
#pragma omp parallel for schedule(dynamic)
        for (long i = first; i < last; ++i) {
            for (std::size_t j = col + 1; j < symbols; ++j) {
                Poly v = pivot * m[i][j] - m[i][col] * m[rank][j];
                // Sylvester's identity makes this division exact
                m[i][j] = *v.exact_divide(prev);
            }
            m[i][col] = Poly{};
        }
        prev = pivot;
        ++rank;
    }
    return rank;
}

std::size_t jacobian_rank_reference(std::span<const FieldElem> elems, std::size_t symbols)
{
    std::vector<std::vector<RatFunc>> m(elems.size(), std::vector<RatFunc>(symbols));
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = 0; j < symbols; ++j) m[i][j] = elems[i].derivative(static_cast<VarIndex>(j));
    const std::size_t rows = m.size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < symbols && rank < rows; ++col) {
        std::size_t p = rank;
        while (p < rows && m[p][col].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (m[i][col].is_zero()) continue;
            RatFunc f = m[i][col] / m[rank][col];
            for (std::size_t j = col; j < symbols; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

} // namespace dval
