#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dval/field/presentation.hpp"

namespace dval {

// Rational function in the variables X_1..X_n with coefficients in the field
// presentation. Internally one RatFunc over the combined index space: symbol
// indeterminates first, then variable k at index symbols + k.
class FieldExpr {
public:
    FieldExpr() = default;
    FieldExpr(RatFunc f, std::size_t symbols) : f_(std::move(f)), symbols_(symbols) {}

    // Grammar: variable names, rationals, symbols (bare or in braces),
    // + - * / ^ ( ) with integer exponents on non-symbol bases.
    static FieldExpr parse(std::string_view text, const FieldPresentation& field,
                           const std::vector<std::string>& variables);
    static FieldExpr variable(std::size_t k, std::size_t symbols);
    static FieldExpr constant(const FieldElem& c, std::size_t symbols) { return FieldExpr(c, symbols); }

    const RatFunc& rational() const noexcept { return f_; }
    std::size_t symbol_count() const noexcept { return symbols_; }
    bool is_zero() const noexcept { return f_.is_zero(); }
    bool is_polynomial() const noexcept { return f_.is_polynomial(); }

    // Replaces variable k by images[k]; the result is renormalized.
    FieldExpr substitute(const std::vector<FieldExpr>& images) const;

    std::string to_string(const FieldPresentation& field, const std::vector<std::string>& variables) const;

    FieldExpr operator-() const { return FieldExpr(-f_, symbols_); }
    friend FieldExpr operator+(const FieldExpr& a, const FieldExpr& b) { return FieldExpr(a.f_ + b.f_, a.symbols_); }
    friend FieldExpr operator-(const FieldExpr& a, const FieldExpr& b) { return FieldExpr(a.f_ - b.f_, a.symbols_); }
    friend FieldExpr operator*(const FieldExpr& a, const FieldExpr& b) { return FieldExpr(a.f_ * b.f_, a.symbols_); }
    friend FieldExpr operator/(const FieldExpr& a, const FieldExpr& b) { return FieldExpr(a.f_ / b.f_, a.symbols_); }
    friend bool operator==(const FieldExpr& a, const FieldExpr& b) { return a.f_ == b.f_; }

private:
    RatFunc f_;
    std::size_t symbols_ = 0;
};

// Standard names Y1..Yn for post-transformation variables.
std::vector<std::string> new_variable_names(std::size_t n);

} // namespace dval
