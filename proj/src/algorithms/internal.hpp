#pragma once

#include "dval/algorithms/algorithms.hpp"

namespace dval::detail {

// Equalize/coordinate-change rounds until the pivot has value 1; appends to
// `trace`. Throws IterationError after `iterations` rounds.
Embedding reach_unit(const Embedding& emb, Trace& trace, int iterations);

} // namespace dval::detail
