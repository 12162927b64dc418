#include "dval/field/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace dval {

Monomial Monomial::variable(VarIndex var, std::uint32_t exponent)
{
    Monomial m;
    if (exponent > 0) m.factors_.emplace_back(var, exponent);
    return m;
}

Monomial Monomial::from_factors(std::vector<Factor> factors)
{
    std::sort(factors.begin(), factors.end());
    Monomial m;
    for (const auto& [var, exp] : factors) {
        if (exp == 0) continue;
        if (!m.factors_.empty() && m.factors_.back().first == var)
            m.factors_.back().second += exp;
        else
            m.factors_.emplace_back(var, exp);
    }
    return m;
}

std::uint32_t Monomial::degree(VarIndex var) const noexcept
{
    for (const auto& [v, e] : factors_) {
        if (v == var) return e;
        if (v > var) break;
    }
    return 0;
}

std::uint64_t Monomial::total_degree() const noexcept
{
    std::uint64_t d = 0;
    for (const auto& f : factors_) d += f.second;
    return d;
}

Monomial Monomial::operator*(const Monomial& other) const
{
    Monomial out;
    out.factors_.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    while (a != factors_.end() || b != other.factors_.end()) {
        if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
            out.factors_.push_back(*a++);
        } else if (a == factors_.end() || b->first < a->first) {
            out.factors_.push_back(*b++);
        } else {
            out.factors_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    return out;
}

bool Monomial::divides(const Monomial& other) const noexcept
{
    auto b = other.factors_.begin();
    for (const auto& [var, exp] : factors_) {
        while (b != other.factors_.end() && b->first < var) ++b;
        if (b == other.factors_.end() || b->first != var || b->second < exp) return false;
    }
    return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const
{
    Monomial out;
    auto d = divisor.factors_.begin();
    for (const auto& [var, exp] : factors_) {
        std::uint32_t sub = 0;
        if (d != divisor.factors_.end() && d->first == var) sub = (d++)->second;
        if (exp > sub) out.factors_.emplace_back(var, exp - sub);
    }
    return out;
}

Monomial Monomial::without(VarIndex var) const
{
    Monomial out;
    for (const auto& f : factors_)
        if (f.first != var) out.factors_.push_back(f);
    return out;
}

Monomial Monomial::meet(const Monomial& other) const
{
    Monomial out;
    auto b = other.factors_.begin();
    for (const auto& [var, exp] : factors_) {
        while (b != other.factors_.end() && b->first < var) ++b;
        if (b != other.factors_.end() && b->first == var) out.factors_.emplace_back(var, std::min(exp, b->second));
    }
    return out;
}

int compare(const Monomial& a, const Monomial& b) noexcept
{
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    std::size_t i = 0, j = 0;
    while (i < fa.size() && j < fb.size()) {
        if (fa[i].first == fb[j].first) {
            if (fa[i].second != fb[j].second) return fa[i].second > fb[j].second ? 1 : -1;
            ++i;
            ++j;
        } else {
            // the side holding the smaller variable index has the larger power of it
            return fa[i].first < fb[j].first ? 1 : -1;
        }
    }
    if (i < fa.size()) return 1;
    if (j < fb.size()) return -1;
    return 0;
}

// ---------------------------------------------------------------------------

Poly::Poly(const Rational& c)
{
    if (sgn(c) != 0) terms_.push_back({Monomial{}, c});
    if (!terms_.empty()) terms_.front().coeff.canonicalize();
}

Poly Poly::variable(VarIndex var, std::uint32_t exponent)
{
    return term(Monomial::variable(var, exponent), Rational(1));
}

Poly Poly::term(Monomial m, Rational c)
{
    Poly p;
    c.canonicalize();
    if (sgn(c) != 0) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
}

Poly Poly::from_terms(std::vector<Term> terms)
{
    std::map<Monomial, Rational, MonomialGreater> acc;
    for (auto& t : terms) {
        t.coeff.canonicalize();
        acc[t.monomial] += t.coeff;
    }
    Poly p;
    p.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (sgn(c) != 0) p.terms_.push_back({m, c});
    return p;
}

bool Poly::is_constant() const noexcept
{
    return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

Rational Poly::constant_value() const
{
    if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coeff;
    return Rational(0);
}

std::uint32_t Poly::degree(VarIndex var) const noexcept
{
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.monomial.degree(var));
    return d;
}

std::uint64_t Poly::total_degree() const noexcept
{
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.monomial.total_degree());
    return d;
}

std::vector<VarIndex> Poly::variables() const
{
    std::vector<VarIndex> vars;
    for (const auto& t : terms_)
        for (const auto& f : t.monomial.factors()) vars.push_back(f.first);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

bool Poly::involves(VarIndex var) const noexcept
{
    for (const auto& t : terms_)
        if (t.monomial.degree(var) > 0) return true;
    return false;
}

std::map<std::uint32_t, Poly> Poly::coefficients_in(VarIndex var) const
{
    std::map<std::uint32_t, std::vector<Term>> buckets;
    for (const auto& t : terms_) buckets[t.monomial.degree(var)].push_back({t.monomial.without(var), t.coeff});
    std::map<std::uint32_t, Poly> out;
    for (auto& [e, ts] : buckets) {
        // removing one variable keeps the relative lex order of the rest
        Poly p;
        p.terms_ = std::move(ts);
        out.emplace(e, std::move(p));
    }
    return out;
}

Poly Poly::derivative(VarIndex var) const
{
    std::vector<Term> out;
    for (const auto& t : terms_) {
        std::uint32_t e = t.monomial.degree(var);
        if (e == 0) continue;
        std::vector<Monomial::Factor> fs = t.monomial.factors();
        for (auto& f : fs)
            if (f.first == var) f.second -= 1;
        out.push_back({Monomial::from_factors(std::move(fs)), t.coeff * e});
    }
    return from_terms(std::move(out));
}

Poly Poly::pow(unsigned exponent) const
{
    Poly result(1);
    Poly base = *this;
    while (exponent > 0) {
        if (exponent & 1u) result = result * base;
        exponent >>= 1u;
        if (exponent > 0) base = base * base;
    }
    return result;
}

Poly Poly::scaled(const Rational& c) const
{
    if (sgn(c) == 0) return Poly{};
    Poly out = *this;
    for (auto& t : out.terms_) t.coeff *= c;
    return out;
}

Poly Poly::times(const Monomial& m, const Rational& c) const
{
    if (sgn(c) == 0) return Poly{};
    Poly out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.monomial * m, t.coeff * c});
    return out;
}

Poly Poly::substitute(const std::map<VarIndex, Rational>& point) const
{
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        std::vector<Monomial::Factor> rest;
        for (const auto& [var, exp] : t.monomial.factors()) {
            auto it = point.find(var);
            if (it == point.end()) {
                rest.emplace_back(var, exp);
                continue;
            }
            Rational p(1);
            for (std::uint32_t k = 0; k < exp; ++k) p *= it->second;
            c *= p;
        }
        out.push_back({Monomial::from_factors(std::move(rest)), c});
    }
    return from_terms(std::move(out));
}

std::optional<Poly> Poly::exact_divide(const Poly& divisor) const
{
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    if (divisor.is_constant()) return scaled(Rational(1) / divisor.leading().coeff);
    if (divisor.is_monomial()) {
        const auto& [dm, dc] = divisor.leading();
        Poly out;
        out.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            if (!dm.divides(t.monomial)) return std::nullopt;
            out.terms_.push_back({t.monomial.quotient(dm), t.coeff / dc});
        }
        return out;
    }
    const Term& lead = divisor.leading();
    std::vector<Term> quotient;
    Poly rem = *this;
    while (!rem.is_zero()) {
        const Term& lt = rem.leading();
        if (!lead.monomial.divides(lt.monomial)) return std::nullopt;
        Monomial qm = lt.monomial.quotient(lead.monomial);
        Rational qc = lt.coeff / lead.coeff;
        rem -= divisor.times(qm, qc);
        quotient.push_back({std::move(qm), std::move(qc)});
    }
    Poly out;
    out.terms_ = std::move(quotient); // produced in decreasing order
    return out;
}

Poly Poly::operator-() const
{
    Poly out = *this;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

namespace {

std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract)
{
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() || j != b.end()) {
        int c;
        if (i == a.end())
            c = -1;
        else if (j == b.end())
            c = 1;
        else
            c = compare(i->monomial, j->monomial);
        if (c > 0) {
            out.push_back(*i++);
        } else if (c < 0) {
            out.push_back({j->monomial, subtract ? Rational(-j->coeff) : j->coeff});
            ++j;
        } else {
            Rational s = subtract ? Rational(i->coeff - j->coeff) : Rational(i->coeff + j->coeff);
            if (sgn(s) != 0) out.push_back({i->monomial, std::move(s)});
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

Poly& Poly::operator+=(const Poly& other)
{
    terms_ = merge(terms_, other.terms_, false);
    return *this;
}

Poly& Poly::operator-=(const Poly& other)
{
    terms_ = merge(terms_, other.terms_, true);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero()) return Poly{};
    if (a.is_monomial()) return b.times(a.leading().monomial, a.leading().coeff);
    if (b.is_monomial()) return a.times(b.leading().monomial, b.leading().coeff);
    std::map<Monomial, Rational, MonomialGreater> acc;
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_) acc[s.monomial * t.monomial] += s.coeff * t.coeff;
    Poly out;
    out.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (sgn(c) != 0) out.terms_.push_back({m, c});
    return out;
}

bool operator==(const Poly& a, const Poly& b)
{
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t k = 0; k < a.terms_.size(); ++k) {
        if (!(a.terms_[k].monomial == b.terms_[k].monomial) || a.terms_[k].coeff != b.terms_[k].coeff) return false;
    }
    return true;
}

Poly make_monic(const Poly& p)
{
    if (p.is_zero()) return p;
    const Rational& lc = p.leading().coeff;
    if (lc == 1) return p;
    return p.scaled(Rational(1) / lc);
}

Poly make_primitive(const Poly& p)
{
    if (p.is_zero()) return p;
    mpz_class den_lcm(1), num_gcd(0);
    for (const auto& t : p.terms()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
    }
    Rational factor(den_lcm, num_gcd);
    factor.canonicalize();
    if (sgn(p.leading().coeff) < 0) factor = -factor;
    if (factor == 1) return p;
    return p.scaled(factor);
}

} // namespace dval
