#include "dval/field/poly.hpp"

#include <algorithm>
#include <limits>

// Recursive multivariate gcd over Q: contents with respect to a main
// variable are handled recursively, primitive parts by a primitive
// pseudo-remainder sequence.

namespace dval {

namespace {

Poly content_in(const Poly& p, VarIndex var);

Poly gcd_impl(const Poly& a, const Poly& b);

Poly pseudo_remainder(const Poly& a, const Poly& b, VarIndex var)
{
    std::uint32_t db = b.degree(var);
    auto bcoef = b.coefficients_in(var);
    Poly lcb = bcoef.rbegin()->second;
    Poly r = a;
    while (!r.is_zero()) {
        std::uint32_t dr = r.degree(var);
        if (dr < db) break;
        auto rcoef = r.coefficients_in(var);
        Poly lcr = rcoef.rbegin()->second;
        r = lcb * r - (lcr * b) * Poly::variable(var, dr - db);
    }
    return r;
}

Poly primitive_part_in(const Poly& p, VarIndex var)
{
    if (p.is_zero()) return p;
    Poly c = content_in(p, var);
    auto q = p.exact_divide(c);
    return make_primitive(*q);
}

Poly content_in(const Poly& p, VarIndex var)
{
    auto coeffs = p.coefficients_in(var);
    Poly g;
    // smallest coefficients first keeps the intermediate gcds cheap
    std::vector<const Poly*> order;
    for (const auto& kv : coeffs) order.push_back(&kv.second);
    std::sort(order.begin(), order.end(), [](const Poly* x, const Poly* y) { return x->size() < y->size(); });
    for (const Poly* c : order) {
        g = gcd_impl(g, *c);
        if (g.is_constant()) return Poly(1);
    }
    return g;
}

Poly monomial_gcd(const Term& mono, const Poly& p)
{
    Monomial m = mono.monomial;
    for (const auto& t : p.terms()) {
        m = m.meet(t.monomial);
        if (m.is_one()) break;
    }
    return Poly::term(m, Rational(1));
}

Poly gcd_impl(const Poly& a, const Poly& b)
{
    if (a.is_zero()) return make_monic(b);
    if (b.is_zero()) return make_monic(a);
    if (a.is_constant() || b.is_constant()) return Poly(1);
    if (a.is_monomial()) return monomial_gcd(a.leading(), b);
    if (b.is_monomial()) return monomial_gcd(b.leading(), a);
    if (a == b) return make_monic(a);

    auto va = a.variables();
    auto vb = b.variables();
    // a variable present on one side only can only divide through the content
    for (VarIndex v : va) {
        if (!std::binary_search(vb.begin(), vb.end(), v)) {
            Poly g = b;
            for (const auto& [e, c] : a.coefficients_in(v)) {
                g = gcd_impl(g, c);
                if (g.is_constant()) return Poly(1);
            }
            return g;
        }
    }
    for (VarIndex v : vb) {
        if (!std::binary_search(va.begin(), va.end(), v)) {
            Poly g = a;
            for (const auto& [e, c] : b.coefficients_in(v)) {
                g = gcd_impl(g, c);
                if (g.is_constant()) return Poly(1);
            }
            return g;
        }
    }

    VarIndex main = va.front();
    std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
    for (VarIndex v : va) {
        std::uint32_t d = std::min(a.degree(v), b.degree(v));
        if (d < best) {
            best = d;
            main = v;
        }
    }

    Poly ca = content_in(a, main);
    Poly cb = content_in(b, main);
    Poly content = gcd_impl(ca, cb);
    Poly r0 = make_primitive(*a.exact_divide(ca));
    Poly r1 = make_primitive(*b.exact_divide(cb));
    if (r0.degree(main) < r1.degree(main)) std::swap(r0, r1);
    while (!r1.is_zero()) {
        if (r1.degree(main) == 0) {
            r0 = Poly(1);
            break;
        }
        Poly r = pseudo_remainder(r0, r1, main);
        r0 = std::move(r1);
        r1 = primitive_part_in(r, main);
    }
    Poly g = primitive_part_in(r0, main);
    return make_monic(content * g);
}

} // namespace

Poly gcd(const Poly& a, const Poly& b)
{
    return gcd_impl(a, b);
}

} // namespace dval
