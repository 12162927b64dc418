#include "dval/io/document.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "dval/error.hpp"

namespace dval {

namespace {

using json = nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what)
{
    throw InputError(path + ": " + what);
}

const json& member(const json& obj, const std::string& key, const std::string& path)
{
    auto it = obj.find(key);
    if (it == obj.end()) fail(path, "missing key \"" + key + "\"");
    return *it;
}

void only_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& path)
{
    if (!obj.is_object()) fail(path, "expected an object");
    for (const auto& [key, _] : obj.items()) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || key == a;
        if (!ok) fail(path, "unknown key \"" + key + "\"");
    }
}

long integer(const json& v, const std::string& path)
{
    if (!v.is_number_integer()) fail(path, "expected an integer");
    return v.get<long>();
}

std::string text_of(const json& v, const std::string& path)
{
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long>());
    fail(path, "expected a string or an integer");
}

std::vector<std::string> names(const json& v, const std::string& path)
{
    if (!v.is_array()) fail(path, "expected an array of names");
    std::vector<std::string> out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        const std::string p = path + "[" + std::to_string(k) + "]";
        if (!v[k].is_string()) fail(p, "expected a string");
        out.push_back(v[k].get<std::string>());
    }
    return out;
}

template <class F>
auto located(const std::string& path, F&& f)
{
    try {
        return f();
    } catch (const InputError& e) {
        fail(path, e.what());
    } catch (const DomainError& e) {
        fail(path, e.what());
    }
}

FieldPresentation parse_field(const json& j)
{
    only_keys(j, {"symbols", "radical_bound"}, "field");
    std::vector<std::string> symbols = names(member(j, "symbols", "field"), "field.symbols");
    std::vector<std::uint32_t> bounds(symbols.size(), 1);
    if (auto it = j.find("radical_bound"); it != j.end()) {
        if (!it->is_object()) fail("field.radical_bound", "expected an object");
        for (const auto& [name, bound] : it->items()) {
            const std::string p = "field.radical_bound." + name;
            auto pos = std::find(symbols.begin(), symbols.end(), name);
            if (pos == symbols.end()) fail(p, "undeclared symbol");
            long b = integer(bound, p);
            if (b < 1) fail(p, "radical bound must be at least 1");
            bounds[static_cast<std::size_t>(pos - symbols.begin())] = static_cast<std::uint32_t>(b);
        }
    }
    return located("field", [&] { return FieldPresentation(symbols, bounds); });
}

LazySeries parse_series(const json& j, const FieldPresentation& field, const std::string& path, bool& certified)
{
    only_keys(j, {"terms", "tails", "certified_infinite"}, path);
    std::map<long, FieldElem> terms;
    std::vector<Tail> tails;
    if (auto it = j.find("terms"); it != j.end()) {
        if (!it->is_array()) fail(path + ".terms", "expected an array");
        for (std::size_t k = 0; k < it->size(); ++k) {
            const std::string p = path + ".terms[" + std::to_string(k) + "]";
            const json& t = (*it)[k];
            only_keys(t, {"c", "e"}, p);
            long e = integer(member(t, "e", p), p + ".e");
            if (e < 1) fail(p + ".e", "exponent must be at least 1");
            std::string c = text_of(member(t, "c", p), p + ".c");
            FieldElem value = located(p + ".c", [&] { return parse_field_element(c, field); });
            if (terms.count(e)) fail(p + ".e", "exponent " + std::to_string(e) + " appears twice");
            terms.emplace(e, std::move(value));
        }
    }
    if (auto it = j.find("tails"); it != j.end()) {
        if (!it->is_array()) fail(path + ".tails", "expected an array");
        for (std::size_t k = 0; k < it->size(); ++k) {
            const std::string p = path + ".tails[" + std::to_string(k) + "]";
            const json& t = (*it)[k];
            only_keys(t, {"coeff", "exp", "from"}, p);
            long from = 1;
            if (auto f = t.find("from"); f != t.end()) from = integer(*f, p + ".from");
            std::string coeff = text_of(member(t, "coeff", p), p + ".coeff");
            std::string exp = text_of(member(t, "exp", p), p + ".exp");
            auto [a, b] = located(p + ".exp", [&] { return parse_exponent_rule(exp); });
            if (a * from + b < 1) fail(p + ".exp", "first tail exponent must be at least 1");
            CoeffRule rule = located(p + ".coeff", [&] { return CoeffRule::parse(coeff, field, from); });
            tails.push_back({std::move(rule), a, b});
        }
    }
    if (terms.empty() && tails.empty()) fail(path, "needs at least one term or tail");
    certified = false;
    if (auto it = j.find("certified_infinite"); it != j.end()) {
        if (!it->is_boolean()) fail(path + ".certified_infinite", "expected a boolean");
        certified = it->get<bool>();
    }
    return located(path, [&] { return LazySeries::from_parts(std::move(terms), std::move(tails)); });
}

} // namespace

Document parse_document(std::string_view text, long precision)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) fail("$", "expected an object");
    only_keys(j, {"field", "variables", "series"}, "$");
    FieldPresentation field = parse_field(member(j, "field", "$"));
    std::vector<std::string> variables = names(member(j, "variables", "$"), "variables");
    std::set<std::string> reserved = {"j", "t", "factorial"};
    for (std::size_t k = 0; k < variables.size(); ++k) {
        const std::string p = "variables[" + std::to_string(k) + "]";
        if (reserved.count(variables[k])) fail(p, "\"" + variables[k] + "\" is reserved");
        if (field.find(variables[k])) fail(p, "\"" + variables[k] + "\" is also a field symbol");
    }
    for (const auto& s : field.symbols())
        if (reserved.count(s)) fail("field.symbols", "\"" + s + "\" is reserved");

    const json& series = member(j, "series", "$");
    if (!series.is_object()) fail("series", "expected an object keyed by variable name");
    for (const auto& [name, _] : series.items())
        if (std::find(variables.begin(), variables.end(), name) == variables.end())
            fail("series." + name, "not a declared variable");

    std::vector<LazySeries> images;
    std::vector<bool> certified;
    for (const auto& v : variables) {
        bool c = false;
        images.push_back(parse_series(member(series, v, "series"), field, "series." + v, c));
        certified.push_back(c);
    }
    return {Embedding(std::move(field), std::move(variables), std::move(images), precision), std::move(certified)};
}

Document load_document(const std::filesystem::path& path, long precision)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str(), precision);
}

} // namespace dval
