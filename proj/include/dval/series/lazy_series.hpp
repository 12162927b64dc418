#pragma once

#include <map>
#include <memory>
#include <vector>

#include "dval/field/expression.hpp"
#include "dval/series/value.hpp"

namespace dval {

// Closed-form tail: sum over j >= rule.from() of c(j) t^(slope*j + offset).
struct Tail {
    CoeffRule coeff;
    long slope;
    long offset;
};

namespace detail {
class SeriesNode;
}

// Formal power series in t over the coefficient field, evaluated lazily.
// A series is either a leaf (finitely many explicit terms plus closed-form
// tails) or a combinator over other series. Coefficients are memoized per
// node; the memo is a synchronized pure cache, so handles can be shared
// across threads.
class LazySeries {
public:
    // The zero series.
    LazySeries();
    // Throws DomainError for a negative exponent or a tail with slope < 1.
    static LazySeries from_parts(std::map<long, FieldElem> terms, std::vector<Tail> tails = {});
    static LazySeries constant(FieldElem c);
    static LazySeries monomial(FieldElem c, long exponent);

    FieldElem coefficient(long e) const;
    // Least exponent <= cap with a nonzero coefficient.
    Value order(long cap) const;
    long known_order_lower_bound() const;
    bool is_syntactic_zero() const;

    LazySeries scaled(const FieldElem& c) const;
    // t^(-k) * s; requires known_order_lower_bound() >= k.
    LazySeries shifted_down(long k) const;

    friend LazySeries operator+(const LazySeries& a, const LazySeries& b);
    friend LazySeries operator-(const LazySeries& a, const LazySeries& b);
    friend LazySeries operator*(const LazySeries& a, const LazySeries& b);

private:
    explicit LazySeries(std::shared_ptr<const detail::SeriesNode> node) : node_(std::move(node)) {}
    friend LazySeries divide(const LazySeries& a, const LazySeries& b, long cap);

    std::shared_ptr<const detail::SeriesNode> node_;
};

// q with a = b*q. Throws PrecisionError when either order cannot be
// established within cap, DomainError when ord(a) < ord(b).
LazySeries divide(const LazySeries& a, const LazySeries& b, long cap);

// a^m as a tree of product nodes, m >= 1.
LazySeries integer_power(const LazySeries& a, long m);

// Coefficient of the lowest-order term; requires order(cap) finite.
FieldElem leading_coefficient(const LazySeries& s, long cap);

} // namespace dval
