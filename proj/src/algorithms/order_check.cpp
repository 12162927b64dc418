#include <random>

#include "dval/algorithms/algorithms.hpp"
#include "dval/error.hpp"

namespace dval {

std::vector<FieldExpr> random_polynomials(std::size_t variables, std::size_t symbols, int degree, int count,
                                          std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 4), terms(1, 6), deg(0, degree);
    std::uniform_int_distribution<std::size_t> var(0, variables - 1);
    std::vector<FieldExpr> out;
    out.reserve(static_cast<std::size_t>(count));
    while (static_cast<int>(out.size()) < count) {
        std::vector<Term> ts;
        const int k = terms(rng);
        for (int t = 0; t < k; ++t) {
            std::vector<Monomial::Factor> fs;
            const int d = deg(rng);
            for (int e = 0; e < d; ++e) fs.emplace_back(static_cast<VarIndex>(symbols + var(rng)), 1);
            int a = num(rng);
            if (a == 0) a = 1;
            ts.push_back({Monomial::from_factors(std::move(fs)), Rational(a, den(rng))});
        }
        for (auto& t : ts) t.coeff.canonicalize();
        Poly p = Poly::from_terms(std::move(ts));
        if (p.is_zero()) continue;
        out.emplace_back(RatFunc(std::move(p)), symbols);
    }
    return out;
}

namespace {

std::int64_t least_degree(const FieldExpr& f, std::size_t symbols)
{
    std::int64_t best = -1;
    for (const auto& t : f.rational().numerator().terms()) {
        std::int64_t d = 0;
        for (const auto& [v, e] : t.monomial.factors())
            if (v >= symbols) d += e;
        if (best < 0 || d < best) best = d;
    }
    return best;
}

std::optional<OrderCheck> witness_variables(const Embedding& emb)
{
    const std::size_t symbols = emb.field().size();
    for (std::size_t k = 0; k < emb.size(); ++k) {
        if (emb.value(k) == 1) continue;
        OrderCheck r;
        r.passed = false;
        r.counterexample = FieldExpr::variable(k, symbols);
        r.observed = Value::finite(emb.value(k));
        r.expected = 1;
        return r;
    }
    return std::nullopt;
}

OrderCheck scan(const std::vector<FieldExpr>& polys, const std::vector<Value>& values, std::size_t symbols)
{
    OrderCheck r;
    for (std::size_t k = 0; k < polys.size(); ++k) {
        ++r.trials;
        if (!values[k].is_finite())
            throw PrecisionError("order check trial " + std::to_string(k + 1) + ": " + values[k].to_string(),
                                 static_cast<int>(values[k].get()));
        const std::int64_t want = least_degree(polys[k], symbols);
        if (values[k].get() != want) {
            r.passed = false;
            r.counterexample = polys[k];
            r.observed = values[k];
            r.expected = want;
            return r;
        }
    }
    return r;
}

} // namespace

OrderCheck order_function_check(const Embedding& emb, int degree, int trials, std::uint64_t seed)
{
    if (auto w = witness_variables(emb)) return *w;
    const std::size_t symbols = emb.field().size();
    auto polys = random_polynomials(emb.size(), symbols, degree, trials, seed);
    std::vector<Value> values(polys.size(), Value::infinite());
    std::vector<std::string> errors(polys.size());
    const long count = static_cast<long>(polys.size());
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < count; ++k) {
        try {
            values[k] = value(emb, polys[k]);
        } catch (const std::exception& e) {
            errors[k] = e.what();
        }
    }
    for (const auto& e : errors)
        if (!e.empty()) throw Error(e);
    return scan(polys, values, symbols);
}

OrderCheck order_function_check_reference(const Embedding& emb, int degree, int trials, std::uint64_t seed)
{
    if (auto w = witness_variables(emb)) return *w;
    const std::size_t symbols = emb.field().size();
    auto polys = random_polynomials(emb.size(), symbols, degree, trials, seed);
    std::vector<Value> values;
    for (const auto& p : polys) values.push_back(value(emb, p));
    return scan(polys, values, symbols);
}

} // namespace dval
