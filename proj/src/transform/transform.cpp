#include "dval/transform/transform.hpp"

#include "dval/error.hpp"

namespace dval {

namespace {

void check_index(const Embedding& emb, std::size_t k)
{
    if (k >= emb.size()) throw DomainError("variable index " + std::to_string(k + 1) + " out of range");
}

template <class... F>
struct overloaded : F... {
    using F::operator()...;
};
template <class... F>
overloaded(F...) -> overloaded<F...>;

} // namespace

Embedding apply_step(const Embedding& emb, const TransformStep& step)
{
    return std::visit(
        overloaded{
            [&](const Monoidal& s) {
                check_index(emb, s.target);
                check_index(emb, s.divisor);
                if (s.target == s.divisor) throw DomainError("monoidal step needs two distinct variables");
                if (emb.value(s.target) <= emb.value(s.divisor))
                    throw DomainError("monoidal step needs v(X" + std::to_string(s.target + 1) + ") > v(X" +
                                      std::to_string(s.divisor + 1) + ")");
                return emb.with_image(s.target, divide(emb.image(s.target), emb.image(s.divisor), emb.precision()));
            },
            [&](const Swap& s) {
                check_index(emb, s.a);
                check_index(emb, s.b);
                return emb.with_swapped(s.a, s.b);
            },
            [&](const CoordChange& s) {
                check_index(emb, s.target);
                if (s.target == 0) throw DomainError("coordinate change cannot target the pivot");
                if (s.coefficient.is_zero()) throw DomainError("coordinate change needs a nonzero coefficient");
                if (s.exponent < 1) throw DomainError("coordinate change needs exponent >= 1");
                LazySeries shift = integer_power(emb.image(0), s.exponent).scaled(s.coefficient);
                return emb.with_image(s.target, emb.image(s.target) - shift);
            },
        },
        step);
}

Embedding record(const Embedding& emb, const TransformStep& step, Trace& trace)
{
    Embedding next = apply_step(emb, step);
    trace.push_back({step, next.values()});
    return next;
}

Embedding replay(const Embedding& initial, const Trace& trace)
{
    Embedding cur = initial;
    for (std::size_t k = 0; k < trace.size(); ++k) {
        cur = apply_step(cur, trace[k].step);
        if (cur.values() != trace[k].values_after)
            throw DomainError("trace step " + std::to_string(k + 1) + " does not reproduce its recorded values");
    }
    return cur;
}

std::vector<FieldExpr> express_new_in_old(const Trace& trace, std::size_t n, std::size_t symbols)
{
    std::vector<FieldExpr> cur;
    for (std::size_t k = 0; k < n; ++k) cur.push_back(FieldExpr::variable(k, symbols));
    for (const auto& entry : trace) {
        std::visit(overloaded{
                       [&](const Monoidal& s) { cur.at(s.target) = cur.at(s.target) / cur.at(s.divisor); },
                       [&](const Swap& s) { std::swap(cur.at(s.a), cur.at(s.b)); },
                       [&](const CoordChange& s) {
                           FieldExpr pivot = FieldExpr(cur.at(0).rational().pow(s.exponent), symbols);
                           cur.at(s.target) = cur.at(s.target) - FieldExpr::constant(s.coefficient, symbols) * pivot;
                       },
                   },
                   entry.step);
    }
    return cur;
}

FieldExpr pullback(const Trace& trace, const FieldExpr& f, std::size_t n)
{
    return f.substitute(express_new_in_old(trace, n, f.symbol_count()));
}

} // namespace dval
