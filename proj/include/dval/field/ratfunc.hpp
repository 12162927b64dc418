#pragma once

#include <map>

#include "dval/field/poly.hpp"

namespace dval {

// Element of Q(x_0, x_1, ...). Always canonical: gcd(num, den) = 1 and the
// denominator is monic, so equality is representational identity.
class RatFunc {
public:
    RatFunc() : den_(1) {}
    explicit RatFunc(const Rational& c) : num_(c), den_(1) {}
    explicit RatFunc(long c) : RatFunc(Rational(c)) {}
    explicit RatFunc(Poly num) : num_(std::move(num)), den_(1) {}
    // Throws DomainError when den is zero.
    RatFunc(Poly num, Poly den);

    static RatFunc variable(VarIndex var) { return RatFunc(Poly::variable(var)); }

    const Poly& numerator() const noexcept { return num_; }
    const Poly& denominator() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.is_constant(); }
    bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }

    RatFunc inverse() const;
    RatFunc pow(long exponent) const;
    RatFunc derivative(VarIndex var) const;
    // Exact evaluation at a rational point; throws DomainError on a pole.
    RatFunc substitute(const std::map<VarIndex, Rational>& point) const;

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

private:
    struct Canonical {};
    RatFunc(Poly num, Poly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
    static RatFunc reduce(Poly num, Poly den);

    Poly num_;
    Poly den_;
};

} // namespace dval
