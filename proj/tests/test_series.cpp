#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <thread>

#include "dval/error.hpp"
#include "oracles.hpp"

using namespace dval;

namespace {

const FieldPresentation T23({"T2", "T3"});
const FieldPresentation U({"u"});

FieldElem el(const std::string& s, const FieldPresentation& f = T23)
{
    return parse_field_element(s, f);
}

LazySeries poly_series(std::initializer_list<std::pair<long, FieldElem>> terms)
{
    return LazySeries::from_parts(std::map<long, FieldElem>(terms.begin(), terms.end()));
}

LazySeries psi_b2()
{
    return LazySeries::from_parts({{1, FieldElem(1)}, {3, FieldElem(1)}},
                                  {Tail{CoeffRule::parse("u^j", U, 1), 1, 3}});
}

} // namespace

TEST_CASE("coefficient access")
{
    LazySeries s = psi_b2();
    CHECK(s.coefficient(5) == el("u^2", U));
    CHECK(s.coefficient(4) == el("u", U));
    CHECK(s.coefficient(3) == FieldElem(1));
    CHECK(s.coefficient(2).is_zero());
    CHECK(LazySeries::monomial(FieldElem(1), 2).coefficient(3).is_zero());

    LazySeries prod = poly_series({{2, el("T2")}, {5, el("T3")}}) * poly_series({{4, FieldElem(1)}, {6, FieldElem(1)}});
    CHECK(prod.coefficient(8) == el("T2"));
    CHECK(prod.coefficient(9) == el("T3"));
    CHECK(prod.coefficient(11) == el("T3"));
    CHECK(prod.coefficient(10).is_zero());
}

TEST_CASE("order")
{
    CHECK(poly_series({{2, FieldElem(1)}, {4, FieldElem(1)}}).order(64) == Value::finite(2));
    CHECK(poly_series({{4, el("T2")}, {6, el("T2")}}).order(64) == Value::finite(4));
    LazySeries t = LazySeries::monomial(FieldElem(1), 1);
    LazySeries a = poly_series({{1, FieldElem(1)}, {2, FieldElem(1)}});
    LazySeries b = t * poly_series({{0, FieldElem(1)}, {1, FieldElem(1)}});
    CHECK((a - b).order(64) == Value::exhausted(64));
    CHECK(LazySeries{}.order(64) == Value::infinite());
    CHECK((LazySeries{} * a).order(64) == Value::infinite());
}

TEST_CASE("combine")
{
    LazySeries s = LazySeries::monomial(FieldElem(1), 2) + LazySeries::monomial(FieldElem(1), 3);
    CHECK(s.coefficient(2) == FieldElem(1));
    CHECK(s.coefficient(3) == FieldElem(1));
    CHECK(s.known_order_lower_bound() == 2);

    LazySeries d = psi_b2() - poly_series({{1, FieldElem(1)}, {3, FieldElem(1)}});
    CHECK(d.order(64) == Value::finite(4));
    CHECK(d.coefficient(4) == el("u", U));

    LazySeries m = LazySeries::monomial(el("T2"), 2) * LazySeries::monomial(FieldElem(1), 2);
    CHECK(m.known_order_lower_bound() == 4);
    CHECK(m.coefficient(4) == el("T2"));
    CHECK(m.order(64) == Value::finite(4));
}

TEST_CASE("division")
{
    LazySeries q = divide(poly_series({{4, el("T2")}, {6, el("T2")}}), LazySeries::monomial(FieldElem(1), 2), 64);
    CHECK(q.coefficient(2) == el("T2"));
    CHECK(q.coefficient(4) == el("T2"));
    CHECK(q.order(64) == Value::finite(2));
    CHECK(q.known_order_lower_bound() == 2);

    LazySeries t = divide(LazySeries::monomial(FieldElem(1), 3), LazySeries::monomial(FieldElem(1), 2), 64);
    CHECK(t.coefficient(1) == FieldElem(1));
    CHECK(t.order(64) == Value::finite(1));

    LazySeries a = poly_series({{2, el("T2")}, {5, el("T3")}});
    LazySeries one = divide(a, LazySeries::monomial(el("T2"), 2), 64);
    CHECK(one.coefficient(0) == FieldElem(1));
    CHECK(one.coefficient(3) == el("T3/T2"));
    for (long e : {1L, 2L, 4L, 5L, 10L}) CHECK(one.coefficient(e).is_zero());

    CHECK_THROWS_AS(divide(LazySeries::monomial(FieldElem(1), 1), LazySeries::monomial(FieldElem(1), 2), 64),
                    DomainError);
    LazySeries zero_like = a - a;
    CHECK_THROWS_AS(divide(a, zero_like, 16), PrecisionError);
}

TEST_CASE("integer powers")
{
    LazySeries t2 = LazySeries::monomial(FieldElem(1), 2);
    CHECK(integer_power(t2, 3).order(64) == Value::finite(6));
    CHECK(integer_power(t2, 3).coefficient(6) == FieldElem(1));
    LazySeries p = integer_power(poly_series({{1, FieldElem(1)}, {3, FieldElem(1)}}), 2);
    CHECK(oracle::dense(p, 8) == oracle::Dense{FieldElem(), FieldElem(), FieldElem(1), FieldElem(), FieldElem(2),
                                                FieldElem(), FieldElem(1), FieldElem()});
    CHECK(integer_power(LazySeries::monomial(el("T2"), 1), 2).coefficient(2) == el("T2^2"));
    CHECK_THROWS_AS(integer_power(t2, 0), DomainError);
}

TEST_CASE("products agree with dense convolution")
{
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 30; ++trial) {
        LazySeries a = oracle::random_series(rng, trial % 3, 20), b = oracle::random_series(rng, 0, 20);
        CHECK(oracle::dense(a * b, 21) == oracle::convolve(oracle::dense(a, 21), oracle::dense(b, 21)));
    }
}

TEST_CASE("tails contribute at the right exponents")
{
    LazySeries s = LazySeries::from_parts({}, {Tail{CoeffRule::parse("T2^j", T23, 2), 3, -1}});
    CHECK(s.known_order_lower_bound() == 5);
    CHECK(s.coefficient(5) == el("T2^2"));
    CHECK(s.coefficient(8) == el("T2^3"));
    CHECK(s.coefficient(6).is_zero());
    CHECK(s.coefficient(7).is_zero());
    CHECK_THROWS_AS(LazySeries::from_parts({}, {Tail{CoeffRule::parse("1", T23, 0), 1, -1}}), DomainError);
}

TEST_CASE("order of a product is the sum of orders")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        LazySeries a = oracle::random_series(rng, 1 + trial % 4, 12), b = oracle::random_series(rng, 2, 12);
        CHECK((a * b).order(64).get() == a.order(64).get() + b.order(64).get());
    }
}

TEST_CASE("memo transparency")
{
    std::mt19937_64 rng(37);
    LazySeries a = oracle::random_series(rng, 1, 15), b = oracle::random_series(rng, 1, 15);
    auto build = [&] { return divide(a * b + a, a, 64); };
    oracle::Dense sweep = oracle::dense(build(), 30);

    std::vector<long> order(30);
    std::iota(order.begin(), order.end(), 0L);
    std::shuffle(order.begin(), order.end(), rng);
    LazySeries scattered = build();
    for (long e : order) CHECK(scattered.coefficient(e) == sweep[static_cast<std::size_t>(e)]);

    LazySeries shared = build();
    std::vector<oracle::Dense> seen(4);
    std::vector<std::thread> threads;
    for (std::size_t k = 0; k < seen.size(); ++k)
        threads.emplace_back([&, k] {
            for (long e = 29; e >= 0; e -= static_cast<long>(k) + 1) seen[k].push_back(shared.coefficient(e));
        });
    for (auto& th : threads) th.join();
    for (std::size_t k = 0; k < seen.size(); ++k) {
        std::size_t i = 0;
        for (long e = 29; e >= 0; e -= static_cast<long>(k) + 1) CHECK(seen[k][i++] == sweep[static_cast<std::size_t>(e)]);
    }
}

TEST_CASE("divide then multiply is the identity")
{
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        LazySeries b = oracle::random_series(rng, 1 + trial % 3, 8, 40, 10);
        LazySeries a = oracle::random_series(rng, 4, 20, 40, 10);
        const long beta = b.order(64).get();
        LazySeries q = divide(a, b, 64);
        CHECK(oracle::dense(q * b, 40 - beta) == oracle::dense(a, 40 - beta));
    }
}
