#include "dval/field/presentation.hpp"

#include <numeric>
#include <set>
#include <sstream>

#include "dval/error.hpp"

namespace dval {

FieldPresentation::FieldPresentation(std::vector<std::string> symbols, std::vector<std::uint32_t> radical_bounds)
    : symbols_(std::move(symbols)), bounds_(std::move(radical_bounds))
{
    if (bounds_.size() != symbols_.size()) throw InputError("radical bounds do not match symbols");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (symbols_[i].empty()) throw InputError("empty symbol name");
        if (!seen.insert(symbols_[i]).second) throw InputError("duplicate symbol '" + symbols_[i] + "'");
        if (bounds_[i] < 1) throw InputError("radical bound of '" + symbols_[i] + "' must be >= 1");
    }
}

FieldPresentation::FieldPresentation(std::vector<std::string> symbols)
    : FieldPresentation(symbols, std::vector<std::uint32_t>(symbols.size(), 1))
{
}

std::optional<std::size_t> FieldPresentation::find(const std::string& name) const
{
    for (std::size_t i = 0; i < symbols_.size(); ++i)
        if (symbols_[i] == name) return i;
    return std::nullopt;
}

RatFunc FieldPresentation::symbol(std::size_t i) const
{
    return RatFunc(Poly::variable(static_cast<VarIndex>(i), radical_bound(i)));
}

Printer::Printer(const FieldPresentation& presentation, std::vector<std::string> variables)
{
    for (std::size_t i = 0; i < presentation.size(); ++i) {
        names_.push_back(presentation.name(i));
        bounds_.push_back(presentation.radical_bound(i));
    }
    for (auto& v : variables) {
        names_.push_back(std::move(v));
        bounds_.push_back(1);
    }
}

std::string Printer::monomial(const Monomial& m) const
{
    std::string out;
    for (const auto& [var, exp] : m.factors()) {
        if (!out.empty()) out += '*';
        out += var < names_.size() ? names_[var] : "_" + std::to_string(var);
        std::uint32_t bound = var < bounds_.size() ? bounds_[var] : 1;
        std::uint32_t g = std::gcd(exp, bound);
        std::uint32_t num = exp / g;
        std::uint32_t den = bound / g;
        if (den != 1)
            out += "^(" + std::to_string(num) + "/" + std::to_string(den) + ")";
        else if (num != 1)
            out += "^" + std::to_string(num);
    }
    return out;
}

std::string Printer::operator()(const Poly& p) const
{
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : p.terms()) {
        Rational c = t.coeff;
        bool negative = sgn(c) < 0;
        if (negative) c = -c;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        if (t.monomial.is_one()) {
            os << c.get_str();
        } else {
            if (c != 1) os << c.get_str() << '*';
            os << monomial(t.monomial);
        }
    }
    return os.str();
}

std::string Printer::operator()(const RatFunc& f) const
{
    std::string num = (*this)(f.numerator());
    if (f.denominator() == Poly(1)) return num;
    // a bare factor needs no parentheses on either side of '/'
    auto wrap = [](const Poly& p, std::string s) {
        bool simple = false;
        if (p.is_monomial()) {
            const auto& [m, c] = p.leading();
            if (m.is_one())
                simple = c.get_den() == 1 && sgn(c) > 0;
            else
                simple = c == 1 && m.factors().size() == 1;
        }
        return simple ? s : "(" + s + ")";
    };
    return wrap(f.numerator(), num) + "/" + wrap(f.denominator(), (*this)(f.denominator()));
}

} // namespace dval
