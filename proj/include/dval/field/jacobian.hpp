#pragma once

#include <span>
#include <vector>

#include "dval/field/presentation.hpp"

namespace dval {

// Formal partial derivative with respect to internal indeterminate `symbol`.
// Throws InputError when the index is outside the presentation.
FieldElem partial_derivative(const FieldElem& a, std::size_t symbol, const FieldPresentation& field);

// Denominator-cleared Jacobian (d elem_i / d s_j); row i is scaled by the lcm
// of its denominators, which leaves the rank unchanged. Entries are computed
// in parallel.
std::vector<std::vector<Poly>> cleared_jacobian(std::span<const FieldElem> elems, std::size_t symbols);

// Rank over Q(s) of the Jacobian. Full row rank at a fixed rational point
// settles it at once; otherwise fraction-free (Bareiss) elimination with the
// row updates of each pivot step run in parallel.
std::size_t jacobian_rank(std::span<const FieldElem> elems, std::size_t symbols);

// Serial reference: plain Gaussian elimination over Q(s) on the uncleared matrix.
std::size_t jacobian_rank_reference(std::span<const FieldElem> elems, std::size_t symbols);

} // namespace dval
