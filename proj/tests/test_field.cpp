#include <doctest.h>

#include <numeric>

#include "dval/error.hpp"
#include "dval/field/expression.hpp"
#include "dval/field/jacobian.hpp"
#include "oracles.hpp"

using namespace dval;

namespace {

const FieldPresentation T234({"T2", "T3", "T4"});

FieldElem el(const std::string& s, const FieldPresentation& f = T234)
{
    return parse_field_element(s, f);
}

} // namespace

TEST_CASE("field arithmetic examples")
{
    CHECK(el("T2") * el("T2") == el("T2^2"));
    CHECK(el("T2^2") / el("T2") == el("T2"));
    FieldElem sum = el("T2/T3") + el("T3/T2");
    CHECK(sum.numerator() == el("T2^2+T3^2").numerator());
    CHECK(sum.denominator() == el("T2*T3").numerator());
    CHECK_THROWS_AS(el("T2") / FieldElem(), DomainError);
    CHECK_THROWS_AS(RatFunc(Poly(1), Poly()), DomainError);
}

TEST_CASE("canonical form")
{
    FieldElem a = el("(2*T2^2 - 2*T3^2)/(4*T2 + 4*T3)");
    CHECK(a == el("T2 - T3") / FieldElem(2));
    CHECK(a.denominator().is_constant());
    FieldElem b = el("(T2 + 1)/(-3*T2 - 3*T3)");
    CHECK(b.denominator().leading().coeff == 1);
    CHECK(RatFunc(b.numerator(), b.denominator()) == b);
    CHECK((b - b).is_zero());
}

TEST_CASE("polynomial gcd against products of known factors")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        Poly g = oracle::random_poly(rng, 0, 3, 3, 2, false);
        Poly a = oracle::random_poly(rng, 0, 3, 3, 2);
        Poly b = oracle::random_poly(rng, 0, 3, 3, 2);
        Poly d = gcd(g * a, g * b);
        // g divides the result, and the cofactors are coprime.
        CHECK(d.exact_divide(make_monic(g)).has_value());
        Poly ca = *(g * a).exact_divide(d), cb = *(g * b).exact_divide(d);
        CHECK(gcd(ca, cb).is_constant());
    }
}

TEST_CASE("field axioms on random elements")
{
    std::mt19937_64 rng(3);
    auto rnd = [&] {
        return RatFunc(oracle::random_poly(rng, 0, 3, 3, 2), oracle::random_poly(rng, 0, 3, 2, 2));
    };
    for (int trial = 0; trial < 30; ++trial) {
        FieldElem a = rnd(), b = rnd(), c = rnd();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(a * a.inverse() == FieldElem(1));
    }
}

TEST_CASE("coefficient rules")
{
    CoeffRule r1 = CoeffRule::parse("T4^j", T234, 1);
    CHECK(r1.evaluate(3) == el("T4^3"));
    CHECK_THROWS_AS(r1.evaluate(0), DomainError);

    FieldPresentation radical({"T2", "T3", "T4"}, {1, 1, 2});
    CoeffRule r2 = CoeffRule::parse("T2*T4^(j/2)", radical, 1);
    CHECK(r2.evaluate(2) == parse_field_element("T2*T4", radical));
    CHECK(r2.evaluate(1) == parse_field_element("T2*T4^(1/2)", radical));
    CHECK(r2.evaluate(1).pow(2) == parse_field_element("T2^2*T4", radical));

    CoeffRule r3 = CoeffRule::parse("T4^j/factorial(j)", T234, 1);
    CHECK(r3.evaluate(3) == el("T4^3/6"));

    CHECK_THROWS_AS(CoeffRule::parse("T4^(j/2)", T234, 1), InputError);
    CHECK_THROWS_AS(parse_field_element("T5", T234), InputError);
    CHECK_THROWS_AS(parse_field_element("T2^(1/2)", T234), InputError);
    CHECK_THROWS_AS(parse_field_element("T2 +", T234), InputError);
}

TEST_CASE("exponent rules")
{
    CHECK(parse_exponent_rule("j+3") == std::pair<long, long>{1, 3});
    CHECK(parse_exponent_rule("2*j - 1") == std::pair<long, long>{2, -1});
    CHECK(parse_exponent_rule("j") == std::pair<long, long>{1, 0});
    CHECK_THROWS_AS(parse_exponent_rule("j^2"), InputError);
    CHECK_THROWS_AS(parse_exponent_rule("3"), InputError);
    CHECK_THROWS_AS(parse_exponent_rule("j/2"), InputError);
}

TEST_CASE("printing round-trips through the parser")
{
    FieldPresentation radical({"T2", "T3", "T4"}, {1, 1, 8});
    Printer print(radical);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        FieldElem a(oracle::random_poly(rng, 0, 3, 3, 3), oracle::random_poly(rng, 0, 3, 3, 2));
        CHECK(parse_field_element(print(a), radical) == a);
    }
    CHECK(print(parse_field_element("T4^(3/8)", radical)) == "T4^(3/8)");
    CHECK(print(parse_field_element("T2/(T3*T4)", radical)) == "T2/(T3*T4)");
}

TEST_CASE("partial derivatives")
{
    CHECK(partial_derivative(el("T2^2"), 0, T234) == el("2*T2"));
    CHECK(partial_derivative(el("T3"), 0, T234).is_zero());
    CHECK(partial_derivative(el("T2/T3"), 1, T234) == el("-T2/T3^2"));
    CHECK_THROWS_AS(partial_derivative(el("T2"), 7, T234), InputError);
}

TEST_CASE("partial derivative matches the difference quotient at rational points")
{
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> coord(-6, 6);
    for (int trial = 0; trial < 25; ++trial) {
        RatFunc f(oracle::random_poly(rng, 0, 3, 3, 3), oracle::random_poly(rng, 0, 3, 2, 2));
        std::map<VarIndex, Rational> point;
        for (VarIndex v = 0; v < 3; ++v) point[v] = Rational(coord(rng), 1 + (coord(rng) + 6) % 3);
        for (auto& [v, x] : point) x.canonicalize();
        RatFunc den_at = RatFunc(f.denominator()).substitute(point);
        if (den_at.is_zero()) continue;
        for (VarIndex v = 0; v < 3; ++v) {
            RatFunc d = partial_derivative(f, v, T234).substitute(point);
            Rational symbolic = d.numerator().constant_value() / d.denominator().constant_value();
            CHECK(symbolic == oracle::difference_quotient_limit(f, v, point, 9));
        }
    }
}

TEST_CASE("jacobian rank examples")
{
    std::vector<FieldElem> a{el("T2"), el("T2^2")};
    CHECK(jacobian_rank(a, 3) == 1);
    std::vector<FieldElem> b{el("T2"), el("T3")};
    CHECK(jacobian_rank(b, 3) == 2);
    std::vector<FieldElem> c{el("T2"), el("T3"), el("T2*T3")};
    CHECK(jacobian_rank(c, 3) == 2);
    CHECK(oracle::has_relation(c, 2));
    std::vector<FieldElem> none;
    CHECK(jacobian_rank(none, 3) == 0);
    std::vector<FieldElem> constants{FieldElem(5)};
    CHECK(jacobian_rank(constants, 3) == 0);
}

TEST_CASE("parallel jacobian rank agrees with the serial reference")
{
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> count(1, 5);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<FieldElem> elems;
        for (int k = count(rng); k > 0; --k)
            elems.emplace_back(oracle::random_poly(rng, 0, 4, 3, 3), oracle::random_poly(rng, 0, 4, 2, 1));
        CHECK(jacobian_rank(elems, 4) == jacobian_rank_reference(elems, 4));
    }
}
