#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dval/embedding/field_expr.hpp"
#include "dval/series/lazy_series.hpp"

namespace dval {

inline constexpr long default_precision = 64;

// The map Psi: X_k -> image_k in Delta[[t]], with every image of order >= 1.
class Embedding {
public:
    // Establishes every image order under `precision`. Throws InputError for
    // n < 2, clashing names, a zero image or an image of order 0; throws
    // PrecisionError when an order cannot be established.
    Embedding(FieldPresentation field, std::vector<std::string> variables, std::vector<LazySeries> images,
              long precision = default_precision);

    const FieldPresentation& field() const noexcept { return field_; }
    const std::vector<std::string>& variables() const noexcept { return variables_; }
    std::size_t size() const noexcept { return images_.size(); }
    long precision() const noexcept { return precision_; }

    const LazySeries& image(std::size_t k) const { return images_.at(k); }
    std::int64_t value(std::size_t k) const { return values_.at(k); }
    const std::vector<std::int64_t>& values() const noexcept { return values_; }
    FieldElem leading_coefficient(std::size_t k) const { return images_.at(k).coefficient(values_.at(k)); }

    Embedding with_image(std::size_t k, LazySeries image) const;
    Embedding with_swapped(std::size_t a, std::size_t b) const;
    Embedding with_precision(long precision) const;
    Embedding with_variables(std::vector<std::string> names) const;

private:
    FieldPresentation field_;
    std::vector<std::string> variables_;
    std::vector<LazySeries> images_;
    std::vector<std::int64_t> values_;
    long precision_;
};

// Psi(f) for a polynomial f; for a rational f the quotient series, which
// requires ord(Psi(num)) >= ord(Psi(den)). Throws PrecisionError when the
// denominator's order cannot be established, DomainError when the quotient
// has negative order.
LazySeries evaluate(const Embedding& emb, const FieldExpr& f);

// ord(Psi(num)) - ord(Psi(den)); Infinite for zero, PrecisionExhausted when
// either order is not established within the cap.
Value value(const Embedding& emb, const FieldExpr& f);

// Value together with the leading coefficient of Psi(num)/Psi(den). Throws
// PrecisionError unless the value is finite.
std::pair<Value, FieldElem> leading_data(const Embedding& emb, const FieldExpr& f);

} // namespace dval
