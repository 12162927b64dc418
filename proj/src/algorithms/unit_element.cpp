#include <algorithm>

#include "dval/error.hpp"
#include "internal.hpp"

namespace dval {

Embedding equalize_values(const Embedding& emb, Trace& trace)
{
    Embedding cur = emb;
    const std::size_t n = cur.size();
    for (;;) {
        const auto& vals = cur.values();
        std::size_t p = static_cast<std::size_t>(std::min_element(vals.begin(), vals.end()) - vals.begin());
        if (p != 0) cur = record(cur, Swap{0, p}, trace);
        const std::int64_t a = cur.value(0);

        std::optional<std::size_t> uneven;
        for (std::size_t i = 1; i < n && !uneven; ++i)
            if (cur.value(i) % a != 0) uneven = i;

        if (uneven) {
            // One Euclidean division: v_i -> v_i mod a.
            const std::int64_t q = cur.value(*uneven) / a;
            for (std::int64_t k = 0; k < q; ++k) cur = record(cur, Monoidal{*uneven, 0}, trace);
            continue;
        }
        for (std::size_t i = 1; i < n; ++i) {
            const std::int64_t q = cur.value(i) / a;
            for (std::int64_t k = 1; k < q; ++k) cur = record(cur, Monoidal{i, 0}, trace);
        }
        return cur;
    }
}

namespace detail {

Embedding reach_unit(const Embedding& emb, Trace& trace, int iterations)
{
    Embedding cur = equalize_values(emb, trace);
    int rounds = 0;
    while (cur.value(0) != 1) {
        if (rounds++ >= iterations)
            throw IterationError("pivot value stayed at " + std::to_string(cur.value(0)) + " after " +
                                     std::to_string(iterations) + " rounds; the group appears to be " +
                                     std::to_string(cur.value(0)) + "Z",
                                 cur.value(0), iterations);
        const FieldElem lead = cur.leading_coefficient(0);
        for (std::size_t i = 1; i < cur.size(); ++i)
            cur = record(cur, CoordChange{i, cur.leading_coefficient(i) / lead, 1}, trace);
        cur = equalize_values(cur, trace);
    }
    return cur;
}

} // namespace detail

UnitResult unit_value_element(const Embedding& emb, int iterations)
{
    Trace trace;
    Embedding cur = detail::reach_unit(emb, trace, iterations);
    FieldExpr element = express_new_in_old(trace, emb.size(), emb.field().size()).front();
    Value check = value(emb, element);
    if (check != Value::finite(1))
        throw DomainError("value-1 certificate failed: the element has value " + check.to_string());
    return {std::move(cur), std::move(trace), std::move(element)};
}

} // namespace dval
