#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dval/field/ratfunc.hpp"

namespace dval {

// Coefficient field Q(S_1, ..., S_k). A symbol S declared with radical bound N
// is stored through an internal indeterminate s with S = s^N, so every root
// S^(a/N) is an ordinary monomial. Internal indeterminate i has VarIndex i.
class FieldPresentation {
public:
    FieldPresentation() = default;
    // Throws InputError on empty or duplicate names or a bound below 1.
    FieldPresentation(std::vector<std::string> symbols, std::vector<std::uint32_t> radical_bounds);
    explicit FieldPresentation(std::vector<std::string> symbols);

    std::size_t size() const noexcept { return symbols_.size(); }
    const std::string& name(std::size_t i) const { return symbols_.at(i); }
    std::uint32_t radical_bound(std::size_t i) const { return bounds_.at(i); }
    const std::vector<std::string>& symbols() const noexcept { return symbols_; }
    std::optional<std::size_t> find(const std::string& name) const;

    // The declared symbol as a field element, s_i^N.
    RatFunc symbol(std::size_t i) const;

    friend bool operator==(const FieldPresentation&, const FieldPresentation&) = default;

private:
    std::vector<std::string> symbols_;
    std::vector<std::uint32_t> bounds_;
};

using FieldElem = RatFunc;

// Renders polynomials and rational functions in the input grammar. Indices
// below the presentation size are symbols (shown with rational exponents when
// a radical bound applies); the rest are named by `variables`.
class Printer {
public:
    explicit Printer(const FieldPresentation& presentation, std::vector<std::string> variables = {});

    std::string operator()(const Poly& p) const;
    std::string operator()(const RatFunc& f) const;

private:
    std::string monomial(const Monomial& m) const;
    std::vector<std::string> names_;
    std::vector<std::uint32_t> bounds_;
};

} // namespace dval
