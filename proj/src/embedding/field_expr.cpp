#include "dval/embedding/field_expr.hpp"

#include <map>

#include "dval/error.hpp"
#include "dval/field/expression.hpp"

namespace dval {

FieldExpr FieldExpr::parse(std::string_view text, const FieldPresentation& field,
                           const std::vector<std::string>& variables)
{
    Expression::Scope scope{&field, &variables, false};
    return FieldExpr(Expression::parse(text, scope).evaluate(), field.size());
}

FieldExpr FieldExpr::variable(std::size_t k, std::size_t symbols)
{
    return FieldExpr(RatFunc::variable(static_cast<VarIndex>(symbols + k)), symbols);
}

namespace {

// p(images) as a fraction num/den, built over the common denominator
// prod d_k^{deg_k p} so only one gcd is needed at the end.
std::pair<Poly, Poly> substitute_poly(const Poly& p, const std::vector<FieldExpr>& images, std::size_t symbols)
{
    const std::size_t n = images.size();
    std::vector<std::uint32_t> degree(n, 0);
    for (std::size_t k = 0; k < n; ++k) degree[k] = p.degree(static_cast<VarIndex>(symbols + k));

    std::map<std::pair<std::size_t, std::uint32_t>, Poly> num_pow, den_pow;
    auto power = [](std::map<std::pair<std::size_t, std::uint32_t>, Poly>& cache, std::size_t k, std::uint32_t e,
                    const Poly& base) -> const Poly& {
        auto key = std::make_pair(k, e);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, base.pow(e)).first;
        return it->second;
    };

    Poly num;
    for (const auto& t : p.terms()) {
        std::vector<Monomial::Factor> kept;
        Poly term(1);
        std::vector<std::uint32_t> used(n, 0);
        for (const auto& [var, exp] : t.monomial.factors()) {
            if (var < symbols || var >= symbols + n) {
                kept.emplace_back(var, exp);
                continue;
            }
            used[var - symbols] = exp;
        }
        for (std::size_t k = 0; k < n; ++k) {
            if (degree[k] == 0) continue;
            const RatFunc& img = images[k].rational();
            if (used[k] > 0) term = term * power(num_pow, k, used[k], img.numerator());
            if (degree[k] > used[k]) term = term * power(den_pow, k, degree[k] - used[k], img.denominator());
        }
        num += term.times(Monomial::from_factors(std::move(kept)), t.coeff);
    }
    Poly den(1);
    for (std::size_t k = 0; k < n; ++k)
        if (degree[k] > 0) den = den * power(den_pow, k, degree[k], images[k].rational().denominator());
    return {std::move(num), std::move(den)};
}

} // namespace

FieldExpr FieldExpr::substitute(const std::vector<FieldExpr>& images) const
{
    auto [nn, nd] = substitute_poly(f_.numerator(), images, symbols_);
    auto [dn, dd] = substitute_poly(f_.denominator(), images, symbols_);
    if (dn.is_zero()) throw DomainError("substitution makes the denominator vanish");
    return FieldExpr(RatFunc(nn * dd, nd * dn), symbols_);
}

std::string FieldExpr::to_string(const FieldPresentation& field, const std::vector<std::string>& variables) const
{
    return Printer(field, variables)(f_);
}

std::vector<std::string> new_variable_names(std::size_t n)
{
    std::vector<std::string> names;
    for (std::size_t k = 1; k <= n; ++k) names.push_back("Y" + std::to_string(k));
    return names;
}

} // namespace dval
