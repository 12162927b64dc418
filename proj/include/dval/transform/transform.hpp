#pragma once

#include <variant>
#include <vector>

#include "dval/embedding/embedding.hpp"

namespace dval {

// Indices are 0-based; position 0 is the pivot Y_1.

// X_target = Y_divisor * Y_target
struct Monoidal {
    std::size_t target;
    std::size_t divisor;
    friend bool operator==(const Monoidal&, const Monoidal&) = default;
};

struct Swap {
    std::size_t a;
    std::size_t b;
    friend bool operator==(const Swap&, const Swap&) = default;
};

// X_target = Y_target + coefficient * Y_1^exponent
struct CoordChange {
    std::size_t target;
    FieldElem coefficient;
    long exponent;
    friend bool operator==(const CoordChange&, const CoordChange&) = default;
};

using TransformStep = std::variant<Monoidal, Swap, CoordChange>;

struct TraceEntry {
    TransformStep step;
    std::vector<std::int64_t> values_after;
    friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

using Trace = std::vector<TraceEntry>;

// Throws DomainError for invalid indices, a monoidal step whose target value
// does not exceed the divisor's (the image would be a unit), or a zero
// coefficient; PrecisionError when a new image order cannot be established.
Embedding apply_step(const Embedding& emb, const TransformStep& step);

// Applies `step` and appends it with its value snapshot.
Embedding record(const Embedding& emb, const TransformStep& step, Trace& trace);

// Folds apply_step over the trace; throws DomainError when a snapshot does
// not match the recomputed values.
Embedding replay(const Embedding& initial, const Trace& trace);

// For each final variable Y_k, a rational expression in the original X's.
std::vector<FieldExpr> express_new_in_old(const Trace& trace, std::size_t n, std::size_t symbols);

// f over the final variables rewritten in the original ones.
FieldExpr pullback(const Trace& trace, const FieldExpr& f, std::size_t n);

} // namespace dval
