#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dval/field/presentation.hpp"

namespace dval {

// Rational-linear function a*j + b of the rule index j.
struct LinearInIndex {
    Rational slope;
    Rational offset;
    Rational at(long j) const { return slope * j + offset; }
};

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

// Parsed arithmetic expression in the coefficient grammar:
//   rationals, declared symbols, + - * / ^ ( ), braces { } around Δ-coefficient
//   groups, optional variable names, optional rule index `j` and `factorial(...)`.
// Exponents are integers, or linear in j with denominators dividing the
// base symbol's radical bound. Evaluation maps symbol i to s_i^N and variable
// k to VarIndex (symbol count + k).
class Expression {
public:
    struct Scope {
        const FieldPresentation* field = nullptr;
        const std::vector<std::string>* variables = nullptr;
        bool allow_index = false;
    };

    // Throws InputError with a column-qualified message.
    static Expression parse(std::string_view text, const Scope& scope);

    RatFunc evaluate(std::optional<long> index = std::nullopt) const;
    bool uses_index() const noexcept { return uses_index_; }
    bool uses_variables() const noexcept { return uses_variables_; }
    const std::string& text() const noexcept { return text_; }

private:
    RatFunc eval(const ExprNode& node, std::optional<long> index) const;

    ExprPtr root_;
    std::string text_;
    std::vector<std::uint32_t> bounds_;
    bool uses_index_ = false;
    bool uses_variables_ = false;
};

// Closed-form coefficient c(j), defined for j >= from.
class CoeffRule {
public:
    CoeffRule(Expression expr, long from);
    static CoeffRule parse(std::string_view text, const FieldPresentation& field, long from);

    // Throws DomainError when j < from.
    FieldElem evaluate(long j) const;
    long from() const noexcept { return from_; }
    const std::string& text() const noexcept { return expr_.text(); }

private:
    Expression expr_;
    long from_;
};

// Parses a field coefficient (no variables, no j).
FieldElem parse_field_element(std::string_view text, const FieldPresentation& field);

// Parses an exponent rule "a*j+b" with integer a >= 1 and integer b.
std::pair<long, long> parse_exponent_rule(std::string_view text);

} // namespace dval
