#include "dval/embedding/embedding.hpp"

#include <map>
#include <set>

#include "dval/error.hpp"

namespace dval {

Embedding::Embedding(FieldPresentation field, std::vector<std::string> variables, std::vector<LazySeries> images,
                     long precision)
    : field_(std::move(field)), variables_(std::move(variables)), images_(std::move(images)), precision_(precision)
{
    if (precision_ < 1) throw InputError("precision must be at least 1");
    if (variables_.size() != images_.size()) throw InputError("one image per variable is required");
    if (variables_.size() < 2) throw InputError("an embedding needs at least two variables");
    std::set<std::string> seen;
    for (const auto& v : variables_) {
        if (v.empty()) throw InputError("empty variable name");
        if (!seen.insert(v).second) throw InputError("duplicate variable '" + v + "'");
        if (field_.find(v)) throw InputError("variable '" + v + "' clashes with a field symbol");
    }
    for (std::size_t k = 0; k < images_.size(); ++k) {
        Value o = images_[k].order(precision_);
        const std::string& name = variables_[k];
        if (o.is_infinite()) throw InputError("image of " + name + " is zero");
        if (o.is_exhausted())
            throw PrecisionError("image order not established: raise precision or fix input (" + name + ")",
                                 static_cast<int>(precision_));
        if (o.get() < 1) throw InputError("image of " + name + " has order 0; the center must be the maximal ideal");
        values_.push_back(o.get());
    }
}

Embedding Embedding::with_image(std::size_t k, LazySeries image) const
{
    auto images = images_;
    images.at(k) = std::move(image);
    return Embedding(field_, variables_, std::move(images), precision_);
}

Embedding Embedding::with_swapped(std::size_t a, std::size_t b) const
{
    Embedding copy = *this;
    std::swap(copy.images_.at(a), copy.images_.at(b));
    std::swap(copy.values_.at(a), copy.values_.at(b));
    return copy;
}

Embedding Embedding::with_precision(long precision) const
{
    return Embedding(field_, variables_, images_, precision);
}

Embedding Embedding::with_variables(std::vector<std::string> names) const
{
    return Embedding(field_, std::move(names), images_, precision_);
}

namespace {

LazySeries evaluate_poly(const Embedding& emb, const Poly& p)
{
    const std::size_t symbols = emb.field().size();
    const std::size_t n = emb.size();
    if (p.is_zero()) return LazySeries{};

    // Group terms by their variable part; the rest is a Delta coefficient.
    std::map<Monomial, Poly, MonomialGreater> groups;
    for (const auto& t : p.terms()) {
        std::vector<Monomial::Factor> vars, syms;
        for (const auto& f : t.monomial.factors()) {
            if (f.first >= symbols + n) throw InputError("expression uses an unknown variable");
            (f.first < symbols ? syms : vars).push_back(f);
        }
        groups[Monomial::from_factors(std::move(vars))] += Poly::term(Monomial::from_factors(std::move(syms)), t.coeff);
    }

    std::map<std::pair<std::size_t, std::uint32_t>, LazySeries> powers;
    auto power = [&](std::size_t k, std::uint32_t e) {
        auto key = std::make_pair(k, e);
        auto it = powers.find(key);
        if (it == powers.end()) it = powers.emplace(key, integer_power(emb.image(k), e)).first;
        return it->second;
    };

    LazySeries sum;
    bool first = true;
    for (const auto& [mono, coeff] : groups) {
        if (coeff.is_zero()) continue;
        LazySeries term;
        if (mono.is_one()) {
            term = LazySeries::constant(FieldElem(coeff));
        } else {
            bool have = false;
            for (const auto& [var, exp] : mono.factors()) {
                LazySeries f = power(var - symbols, exp);
                term = have ? term * f : f;
                have = true;
            }
            if (!(coeff.is_constant() && coeff.constant_value() == 1)) term = term.scaled(FieldElem(coeff));
        }
        sum = first ? term : sum + term;
        first = false;
    }
    return sum;
}

} // namespace

LazySeries evaluate(const Embedding& emb, const FieldExpr& f)
{
    const RatFunc& r = f.rational();
    LazySeries num = evaluate_poly(emb, r.numerator());
    if (r.is_polynomial()) {
        Rational d = r.denominator().constant_value();
        return d == 1 ? num : num.scaled(FieldElem(Rational(1) / d));
    }
    return divide(num, evaluate_poly(emb, r.denominator()), emb.precision());
}

Value value(const Embedding& emb, const FieldExpr& f)
{
    const RatFunc& r = f.rational();
    if (r.is_zero()) return Value::infinite();
    Value vn = evaluate_poly(emb, r.numerator()).order(emb.precision());
    if (!vn.is_finite()) return vn;
    if (r.is_polynomial()) return vn;
    Value vd = evaluate_poly(emb, r.denominator()).order(emb.precision());
    if (!vd.is_finite()) return Value::exhausted(emb.precision());
    return Value::finite(vn.get() - vd.get());
}

std::pair<Value, FieldElem> leading_data(const Embedding& emb, const FieldExpr& f)
{
    const RatFunc& r = f.rational();
    const long cap = emb.precision();
    if (r.is_zero()) throw DomainError("the zero element has no leading coefficient");
    LazySeries num = evaluate_poly(emb, r.numerator());
    LazySeries den = r.is_polynomial() ? LazySeries::constant(FieldElem(r.denominator())) : evaluate_poly(emb, r.denominator());
    Value vn = num.order(cap), vd = den.order(cap);
    if (!vn.is_finite() || !vd.is_finite())
        throw PrecisionError("order not established within precision " + std::to_string(cap), static_cast<int>(cap));
    FieldElem lead = num.coefficient(vn.get()) / den.coefficient(vd.get());
    return {Value::finite(vn.get() - vd.get()), lead};
}

} // namespace dval
