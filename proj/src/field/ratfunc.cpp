#include "dval/field/ratfunc.hpp"

#include "dval/error.hpp"

namespace dval {

RatFunc::RatFunc(Poly num, Poly den)
{
    if (den.is_zero()) throw DomainError("division by zero");
    *this = reduce(std::move(num), std::move(den));
}

RatFunc RatFunc::reduce(Poly num, Poly den)
{
    if (num.is_zero()) return RatFunc{};
    if (!den.is_constant()) {
        Poly g = gcd(num, den);
        if (!g.is_constant()) {
            num = *num.exact_divide(g);
            den = *den.exact_divide(g);
        }
    }
    const Rational lc = den.leading().coeff;
    if (lc != 1) {
        Rational inv = Rational(1) / lc;
        num = num.scaled(inv);
        den = den.scaled(inv);
    }
    return RatFunc(std::move(num), std::move(den), Canonical{});
}

RatFunc RatFunc::inverse() const
{
    if (num_.is_zero()) throw DomainError("division by zero");
    // already coprime; only the leading normalization moves
    const Rational lc = num_.leading().coeff;
    Rational inv = Rational(1) / lc;
    return RatFunc(den_.scaled(inv), num_.scaled(inv), Canonical{});
}

RatFunc RatFunc::pow(long exponent) const
{
    if (exponent < 0) return inverse().pow(-exponent);
    // powers of coprime polynomials stay coprime
    Poly n = num_.pow(static_cast<unsigned>(exponent));
    Poly d = den_.pow(static_cast<unsigned>(exponent));
    return RatFunc(std::move(n), std::move(d), Canonical{});
}

RatFunc RatFunc::derivative(VarIndex var) const
{
    if (den_.is_constant()) return RatFunc(num_.derivative(var).scaled(Rational(1) / den_.leading().coeff));
    Poly n = num_.derivative(var) * den_ - num_ * den_.derivative(var);
    return reduce(std::move(n), den_ * den_);
}

RatFunc RatFunc::substitute(const std::map<VarIndex, Rational>& point) const
{
    Poly d = den_.substitute(point);
    if (d.is_zero()) throw DomainError("evaluation at a pole");
    return RatFunc(num_.substitute(point), std::move(d));
}

RatFunc RatFunc::operator-() const
{
    return RatFunc(-num_, den_, Canonical{});
}

RatFunc operator+(const RatFunc& a, const RatFunc& b)
{
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFunc::reduce(a.num_ + b.num_, a.den_);
    if (a.den_.is_constant() && b.den_.is_constant()) {
        // both denominators are 1 in canonical form
        return RatFunc(a.num_ + b.num_, Poly(1), RatFunc::Canonical{});
    }
    // Only common factors of the denominators can cancel afterwards.
    Poly g = gcd(a.den_, b.den_);
    if (g.is_constant()) {
        Poly n = a.num_ * b.den_ + b.num_ * a.den_;
        if (n.is_zero()) return RatFunc{};
        return RatFunc(std::move(n), a.den_ * b.den_, RatFunc::Canonical{});
    }
    Poly da = *a.den_.exact_divide(g), db = *b.den_.exact_divide(g);
    Poly n = a.num_ * db + b.num_ * da;
    if (n.is_zero()) return RatFunc{};
    Poly h = gcd(n, g);
    if (!h.is_constant()) {
        n = *n.exact_divide(h);
        g = *g.exact_divide(h);
    }
    return RatFunc(std::move(n), da * db * g, RatFunc::Canonical{});
}

RatFunc operator-(const RatFunc& a, const RatFunc& b)
{
    return a + (-b);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b)
{
    if (a.is_zero() || b.is_zero()) return RatFunc{};
    if (a.den_.is_constant() && b.den_.is_constant()) return RatFunc(a.num_ * b.num_, Poly(1), RatFunc::Canonical{});
    // cross-cancel so the product of coprime pairs stays coprime
    Poly g1 = gcd(a.num_, b.den_);
    Poly g2 = gcd(b.num_, a.den_);
    Poly an = g1.is_constant() ? a.num_ : *a.num_.exact_divide(g1);
    Poly bd = g1.is_constant() ? b.den_ : *b.den_.exact_divide(g1);
    Poly bn = g2.is_constant() ? b.num_ : *b.num_.exact_divide(g2);
    Poly ad = g2.is_constant() ? a.den_ : *a.den_.exact_divide(g2);
    Poly n = an * bn;
    Poly d = ad * bd;
    const Rational lc = d.leading().coeff;
    if (lc != 1) {
        Rational inv = Rational(1) / lc;
        n = n.scaled(inv);
        d = d.scaled(inv);
    }
    return RatFunc(std::move(n), std::move(d), RatFunc::Canonical{});
}

RatFunc operator/(const RatFunc& a, const RatFunc& b)
{
    return a * b.inverse();
}

} // namespace dval
