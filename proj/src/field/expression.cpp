#include "dval/field/expression.hpp"

#include <cctype>

#include "dval/error.hpp"

namespace dval {

struct ExprNode {
    enum class Kind { Number, Symbol, Variable, Index, Factorial, Add, Sub, Mul, Div, Neg, Pow };
    Kind kind;
    Rational number;
    std::size_t index = 0;
    ExprPtr lhs;
    ExprPtr rhs;
};

namespace {

using Kind = ExprNode::Kind;

ExprPtr make(Kind k, ExprPtr lhs = nullptr, ExprPtr rhs = nullptr)
{
    auto n = std::make_shared<ExprNode>();
    n->kind = k;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
}

// j-linear view of an exponent subtree; nullopt when it is not of that form.
std::optional<LinearInIndex> linear_form(const ExprNode& n)
{
    switch (n.kind) {
    case Kind::Number:
        return LinearInIndex{Rational(0), n.number};
    case Kind::Index:
        return LinearInIndex{Rational(1), Rational(0)};
    case Kind::Neg: {
        auto a = linear_form(*n.lhs);
        if (!a) return std::nullopt;
        return LinearInIndex{-a->slope, -a->offset};
    }
    case Kind::Add:
    case Kind::Sub: {
        auto a = linear_form(*n.lhs);
        auto b = linear_form(*n.rhs);
        if (!a || !b) return std::nullopt;
        if (n.kind == Kind::Sub) return LinearInIndex{a->slope - b->slope, a->offset - b->offset};
        return LinearInIndex{a->slope + b->slope, a->offset + b->offset};
    }
    case Kind::Mul: {
        auto a = linear_form(*n.lhs);
        auto b = linear_form(*n.rhs);
        if (!a || !b) return std::nullopt;
        if (sgn(a->slope) != 0 && sgn(b->slope) != 0) return std::nullopt;
        if (sgn(a->slope) == 0) return LinearInIndex{b->slope * a->offset, b->offset * a->offset};
        return LinearInIndex{a->slope * b->offset, a->offset * b->offset};
    }
    case Kind::Div: {
        auto a = linear_form(*n.lhs);
        auto b = linear_form(*n.rhs);
        if (!a || !b || sgn(b->slope) != 0 || sgn(b->offset) == 0) return std::nullopt;
        return LinearInIndex{a->slope / b->offset, a->offset / b->offset};
    }
    default:
        return std::nullopt;
    }
}

bool is_integer(const Rational& q)
{
    return q.get_den() == 1;
}

// Recognizes S or S^c (c constant) as a base: returns (symbol, c).
std::optional<std::pair<std::size_t, Rational>> symbol_base(const ExprNode& n)
{
    if (n.kind == Kind::Symbol) return std::make_pair(n.index, Rational(1));
    if (n.kind == Kind::Pow && n.lhs->kind == Kind::Symbol) {
        auto e = linear_form(*n.rhs);
        if (e && sgn(e->slope) == 0) return std::make_pair(n.lhs->index, e->offset);
    }
    return std::nullopt;
}

class Parser {
public:
    Parser(std::string_view text, const Expression::Scope& scope) : text_(text), scope_(scope) {}

    ExprPtr parse()
    {
        ExprPtr e = expression(false);
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

    bool used_index = false;
    bool used_variables = false;

private:
    [[noreturn]] void fail(const std::string& msg) const
    {
        throw InputError("expression \"" + std::string(text_) + "\" at column " + std::to_string(pos_ + 1) + ": " +
                         msg);
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c)
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    ExprPtr expression(bool in_braces)
    {
        ExprPtr lhs = product(in_braces);
        for (;;) {
            if (accept('+'))
                lhs = make(Kind::Add, lhs, product(in_braces));
            else if (accept('-'))
                lhs = make(Kind::Sub, lhs, product(in_braces));
            else
                return lhs;
        }
    }

    ExprPtr product(bool in_braces)
    {
        ExprPtr lhs = unary(in_braces);
        for (;;) {
            if (accept('*'))
                lhs = make(Kind::Mul, lhs, unary(in_braces));
            else if (accept('/'))
                lhs = make(Kind::Div, lhs, unary(in_braces));
            else
                return lhs;
        }
    }

    ExprPtr unary(bool in_braces)
    {
        if (accept('-')) return make(Kind::Neg, unary(in_braces));
        if (accept('+')) return unary(in_braces);
        return power(in_braces);
    }

    ExprPtr power(bool in_braces)
    {
        ExprPtr base = atom(in_braces);
        if (!accept('^')) return base;
        std::size_t at = pos_;
        ExprPtr exponent = unary(in_braces);
        auto lin = linear_form(*exponent);
        if (!lin) {
            pos_ = at;
            fail("exponent must be an integer or linear in j");
        }
        check_power(*base, *lin, at);
        return make(Kind::Pow, base, exponent);
    }

    void check_power(const ExprNode& base, const LinearInIndex& e, std::size_t at)
    {
        auto bad = [&](const std::string& msg) {
            pos_ = at;
            fail(msg);
        };
        if (auto sb = symbol_base(base)) {
            const Rational n(scope_.field->radical_bound(sb->first));
            Rational a = e.slope * sb->second * n;
            Rational b = e.offset * sb->second * n;
            if (!is_integer(a) || !is_integer(b))
                bad("exponent denominator must divide the radical bound of '" + scope_.field->name(sb->first) + "'");
            return;
        }
        if (sgn(e.slope) != 0 && base.kind != Kind::Number)
            bad("a j-dependent exponent needs a symbol or rational base");
        if (!is_integer(e.slope) || !is_integer(e.offset)) bad("fractional exponent on a non-symbol base");
    }

    ExprPtr atom(bool in_braces)
    {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            ExprPtr e = expression(in_braces);
            expect(')');
            return e;
        }
        if (c == '{') {
            ++pos_;
            ExprPtr e = expression(true);
            expect('}');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            auto n = std::make_shared<ExprNode>();
            n->kind = Kind::Number;
            n->number = Rational(mpz_class(std::string(text_.substr(start, pos_ - start))));
            return n;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            return identifier(name, start, in_braces);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    ExprPtr identifier(const std::string& name, std::size_t start, bool in_braces)
    {
        if (name == "factorial") {
            expect('(');
            ExprPtr arg = expression(in_braces);
            expect(')');
            if (!linear_form(*arg)) fail("factorial argument must be linear in j");
            return make(Kind::Factorial, arg);
        }
        if (scope_.allow_index && name == "j") {
            used_index = true;
            return make(Kind::Index);
        }
        if (scope_.variables && !in_braces) {
            for (std::size_t i = 0; i < scope_.variables->size(); ++i) {
                if ((*scope_.variables)[i] == name) {
                    used_variables = true;
                    auto n = std::make_shared<ExprNode>();
                    n->kind = Kind::Variable;
                    n->index = i;
                    return n;
                }
            }
        }
        if (auto idx = scope_.field->find(name)) {
            auto n = std::make_shared<ExprNode>();
            n->kind = Kind::Symbol;
            n->index = *idx;
            return n;
        }
        pos_ = start;
        fail("undeclared symbol '" + name + "'");
    }

    std::string_view text_;
    const Expression::Scope& scope_;
    std::size_t pos_ = 0;
};

Rational factorial(long n)
{
    if (n < 0) throw DomainError("factorial of a negative number");
    if (n > 100000) throw DomainError("factorial argument too large");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

} // namespace

Expression Expression::parse(std::string_view text, const Scope& scope)
{
    if (!scope.field) throw InputError("expression parsed without a field presentation");
    Parser p(text, scope);
    Expression e;
    e.root_ = p.parse();
    e.text_ = std::string(text);
    e.uses_index_ = p.used_index;
    e.uses_variables_ = p.used_variables;
    for (std::size_t i = 0; i < scope.field->size(); ++i) e.bounds_.push_back(scope.field->radical_bound(i));
    return e;
}

RatFunc Expression::evaluate(std::optional<long> index) const
{
    if (uses_index_ && !index) throw DomainError("expression depends on j but no index was given");
    return eval(*root_, index);
}

RatFunc Expression::eval(const ExprNode& n, std::optional<long> index) const
{
    switch (n.kind) {
    case Kind::Number:
        return RatFunc(n.number);
    case Kind::Symbol:
        return RatFunc(Poly::variable(static_cast<VarIndex>(n.index), bounds_[n.index]));
    case Kind::Variable:
        return RatFunc::variable(static_cast<VarIndex>(bounds_.size() + n.index));
    case Kind::Index:
        return RatFunc(Rational(*index));
    case Kind::Factorial: {
        Rational arg = linear_form(*n.lhs)->at(index.value_or(0));
        if (!is_integer(arg)) throw DomainError("factorial of a non-integer");
        return RatFunc(factorial(arg.get_num().get_si()));
    }
    case Kind::Neg:
        return -eval(*n.lhs, index);
    case Kind::Add:
        return eval(*n.lhs, index) + eval(*n.rhs, index);
    case Kind::Sub:
        return eval(*n.lhs, index) - eval(*n.rhs, index);
    case Kind::Mul:
        return eval(*n.lhs, index) * eval(*n.rhs, index);
    case Kind::Div: {
        RatFunc d = eval(*n.rhs, index);
        if (d.is_zero()) throw DomainError("division by zero in \"" + text_ + "\"");
        return eval(*n.lhs, index) / d;
    }
    case Kind::Pow: {
        Rational e = linear_form(*n.rhs)->at(index.value_or(0));
        if (auto sb = symbol_base(*n.lhs)) {
            Rational internal = e * sb->second * Rational(bounds_[sb->first]);
            if (!is_integer(internal)) throw DomainError("radical exponent not representable in \"" + text_ + "\"");
            long k = internal.get_num().get_si();
            RatFunc s = RatFunc::variable(static_cast<VarIndex>(sb->first));
            return s.pow(k);
        }
        if (!is_integer(e)) throw DomainError("fractional exponent in \"" + text_ + "\"");
        RatFunc base = eval(*n.lhs, index);
        long k = e.get_num().get_si();
        if (k < 0 && base.is_zero()) throw DomainError("division by zero in \"" + text_ + "\"");
        return base.pow(k);
    }
    }
    throw Error("unreachable expression node");
}

CoeffRule::CoeffRule(Expression expr, long from) : expr_(std::move(expr)), from_(from)
{
    if (expr_.uses_variables()) throw InputError("coefficient rule may not mention variables");
}

CoeffRule CoeffRule::parse(std::string_view text, const FieldPresentation& field, long from)
{
    Expression::Scope scope{&field, nullptr, true};
    return CoeffRule(Expression::parse(text, scope), from);
}

FieldElem CoeffRule::evaluate(long j) const
{
    if (j < from_)
        throw DomainError("rule \"" + text() + "\" evaluated at j = " + std::to_string(j) + " below its start index " +
                          std::to_string(from_));
    return expr_.evaluate(j);
}

FieldElem parse_field_element(std::string_view text, const FieldPresentation& field)
{
    Expression::Scope scope{&field, nullptr, false};
    return Expression::parse(text, scope).evaluate();
}

std::pair<long, long> parse_exponent_rule(std::string_view text)
{
    FieldPresentation none;
    Expression::Scope scope{&none, nullptr, true};
    Expression e = Expression::parse(text, scope);
    // a*j + b recovered from two evaluations; linearity is checked at a third point
    Rational e0, e1, e2;
    try {
        e0 = e.evaluate(0).numerator().constant_value();
        e1 = e.evaluate(1).numerator().constant_value();
        e2 = e.evaluate(2).numerator().constant_value();
    } catch (const DomainError&) {
        throw InputError("exponent rule \"" + std::string(text) + "\" is not of the form a*j+b");
    }
    if (e2 - e1 != e1 - e0) throw InputError("exponent rule \"" + std::string(text) + "\" is not of the form a*j+b");
    Rational a = e1 - e0;
    if (!is_integer(a) || !is_integer(e0))
        throw InputError("exponent rule \"" + std::string(text) + "\" needs integer coefficients");
    if (a < 1) throw InputError("exponent rule \"" + std::string(text) + "\" needs slope a >= 1");
    return {a.get_num().get_si(), e0.get_num().get_si()};
}

} // namespace dval
