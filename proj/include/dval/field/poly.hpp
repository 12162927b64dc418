#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace dval {

using Rational = mpq_class;
using VarIndex = std::uint32_t;

// Power product over indexed indeterminates. Factors are kept sorted by
// variable index with strictly positive exponents.
class Monomial {
public:
    using Factor = std::pair<VarIndex, std::uint32_t>;

    Monomial() = default;
    static Monomial variable(VarIndex var, std::uint32_t exponent = 1);
    static Monomial from_factors(std::vector<Factor> factors);

    const std::vector<Factor>& factors() const noexcept { return factors_; }
    bool is_one() const noexcept { return factors_.empty(); }
    std::uint32_t degree(VarIndex var) const noexcept;
    std::uint64_t total_degree() const noexcept;

    Monomial operator*(const Monomial& other) const;
    bool divides(const Monomial& other) const noexcept;
    // Requires divides(other) to hold for `divisor`.
    Monomial quotient(const Monomial& divisor) const;
    Monomial without(VarIndex var) const;
    // Componentwise minimum.
    Monomial meet(const Monomial& other) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<Factor> factors_;
};

// Lexicographic order with variable 0 most significant. Returns -1, 0, 1.
int compare(const Monomial& a, const Monomial& b) noexcept;

struct MonomialGreater {
    bool operator()(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) > 0; }
};

struct Term {
    Monomial monomial;
    Rational coeff;
};

// Sparse multivariate polynomial over Q. Terms are sorted in decreasing
// lexicographic order and never carry a zero coefficient.
class Poly {
public:
    Poly() = default;
    explicit Poly(const Rational& c);
    explicit Poly(long c) : Poly(Rational(c)) {}
    static Poly variable(VarIndex var, std::uint32_t exponent = 1);
    static Poly term(Monomial m, Rational c);
    static Poly from_terms(std::vector<Term> terms); // any order, duplicates summed

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    std::size_t size() const noexcept { return terms_.size(); }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    const Term& leading() const { return terms_.front(); }
    Rational constant_value() const; // coefficient of the unit monomial

    std::uint32_t degree(VarIndex var) const noexcept;
    std::uint64_t total_degree() const noexcept;
    std::vector<VarIndex> variables() const;
    bool involves(VarIndex var) const noexcept;
    // Coefficients with respect to `var`, keyed by exponent.
    std::map<std::uint32_t, Poly> coefficients_in(VarIndex var) const;

    Poly derivative(VarIndex var) const;
    Poly pow(unsigned exponent) const;
    Poly scaled(const Rational& c) const;
    Poly times(const Monomial& m, const Rational& c) const;
    // Substitutes rational values for the given variables; others stay symbolic.
    Poly substitute(const std::map<VarIndex, Rational>& point) const;

    std::optional<Poly> exact_divide(const Poly& divisor) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b);

private:
    std::vector<Term> terms_;
};

// Makes the leading coefficient 1 (zero stays zero).
Poly make_monic(const Poly& p);
// Scales to integer coefficients with content 1 and positive leading coefficient.
Poly make_primitive(const Poly& p);

// Greatest common divisor over Q, normalized monic. gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

} // namespace dval
