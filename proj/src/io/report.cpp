#include "dval/io/report.hpp"

#include <sstream>

#include "dval/error.hpp"

namespace dval {

namespace {

template <class... F>
struct overloaded : F... {
    using F::operator()...;
};
template <class... F>
overloaded(F...) -> overloaded<F...>;

constexpr long prefix_terms = 8;

std::string join(const std::vector<std::string>& parts, const std::string& sep)
{
    std::string out;
    for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? sep : "") + parts[k];
    return out;
}

std::string position_name(std::size_t p)
{
    return "Y" + std::to_string(p + 1);
}

OrderedJson elems(const std::vector<FieldElem>& xs, const Printer& print)
{
    OrderedJson out = OrderedJson::array();
    for (const auto& x : xs) out.push_back(print(x));
    return out;
}

std::string origin_name(const AnalysisReport& r, const ChainReport& c)
{
    return r.initial.variables()[c.origin];
}

} // namespace

const char* verdict_name(Verdict v)
{
    switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    default: return "unknown";
    }
}

const char* terminal_name(ResidueChain::Terminal t)
{
    switch (t) {
    case ResidueChain::Terminal::TranscendentalFound: return "transcendental_found";
    case ResidueChain::Terminal::DivisibilityBroken: return "divisibility_broken";
    case ResidueChain::Terminal::DepthExhausted: return "depth_exhausted";
    default: return "precision_exhausted";
    }
}

OrderedJson trace_to_json(const Trace& trace, const FieldPresentation& field)
{
    Printer print(field);
    OrderedJson out = OrderedJson::array();
    for (const auto& e : trace) {
        OrderedJson s;
        std::visit(overloaded{
                       [&](const Monoidal& m) {
                           s["kind"] = "monoidal";
                           s["i"] = m.target + 1;
                           s["j"] = m.divisor + 1;
                       },
                       [&](const Swap& m) {
                           s["kind"] = "swap";
                           s["i"] = m.a + 1;
                           s["j"] = m.b + 1;
                       },
                       [&](const CoordChange& m) {
                           s["kind"] = "coord";
                           s["i"] = m.target + 1;
                           s["j"] = 1;
                           s["b"] = print(m.coefficient);
                           s["m"] = m.exponent;
                       },
                   },
                   e.step);
        s["values_after"] = e.values_after;
        out.push_back(std::move(s));
    }
    return out;
}

Trace trace_from_json(const OrderedJson& j, const FieldPresentation& field)
{
    if (!j.is_array()) throw InputError("trace: expected an array");
    Trace trace;
    for (std::size_t k = 0; k < j.size(); ++k) {
        const std::string path = "trace[" + std::to_string(k) + "]";
        const auto& s = j[k];
        auto index = [&](const char* key) -> std::size_t {
            if (!s.contains(key) || !s[key].is_number_integer() || s[key].get<long>() < 1)
                throw InputError(path + "." + key + ": expected a positive integer");
            return s[key].get<std::size_t>() - 1;
        };
        if (!s.is_object() || !s.contains("kind") || !s["kind"].is_string())
            throw InputError(path + ": expected a step object with a kind");
        const std::string kind = s["kind"].get<std::string>();
        TraceEntry e{Swap{0, 0}, {}};
        if (kind == "monoidal") {
            e.step = Monoidal{index("i"), index("j")};
        } else if (kind == "swap") {
            e.step = Swap{index("i"), index("j")};
        } else if (kind == "coord") {
            if (index("j") != 0) throw InputError(path + ".j: coordinate changes pivot on variable 1");
            if (!s.contains("b") || !s["b"].is_string()) throw InputError(path + ".b: expected a coefficient");
            e.step = CoordChange{index("i"), parse_field_element(s["b"].get<std::string>(), field),
                                 static_cast<long>(index("m") + 1)};
        } else {
            throw InputError(path + ".kind: unknown step kind \"" + kind + "\"");
        }
        if (s.contains("values_after")) {
            if (!s["values_after"].is_array()) throw InputError(path + ".values_after: expected an array");
            for (const auto& v : s["values_after"]) {
                if (!v.is_number_integer()) throw InputError(path + ".values_after: expected integers");
                e.values_after.push_back(v.get<std::int64_t>());
            }
        }
        trace.push_back(std::move(e));
    }
    return trace;
}

std::string series_prefix(const LazySeries& s, const FieldPresentation& field, long upto)
{
    Printer print(field);
    std::vector<std::string> parts;
    for (long e = s.known_order_lower_bound(); e <= upto; ++e) {
        FieldElem c = s.coefficient(e);
        if (c.is_zero()) continue;
        std::string power = e == 0 ? "" : e == 1 ? "t" : "t^" + std::to_string(e);
        std::string coeff = print(c);
        bool simple = c.is_polynomial() && c.numerator().size() == 1;
        if (power.empty())
            parts.push_back(simple ? coeff : "(" + coeff + ")");
        else if (c == FieldElem(1))
            parts.push_back(power);
        else if (c == FieldElem(-1))
            parts.push_back("-" + power);
        else
            parts.push_back((simple ? coeff : "(" + coeff + ")") + "*" + power);
    }
    parts.push_back("O(t^" + std::to_string(upto + 1) + ")");
    std::string out = parts.front();
    for (std::size_t k = 1; k < parts.size(); ++k) {
        if (parts[k].front() == '-')
            out += " - " + parts[k].substr(1);
        else
            out += " + " + parts[k];
    }
    return out;
}

OrderedJson chains_to_json(const AnalysisReport& r)
{
    const FieldPresentation& field = r.initial.field();
    Printer print(field);
    OrderedJson out;
    OrderedJson order = OrderedJson::array();
    for (auto p : r.processing_order) order.push_back(p + 1);
    out["processing_order"] = order;

    OrderedJson chains = OrderedJson::array();
    OrderedJson algebraic = OrderedJson::array();
    for (const auto& c : r.chains) {
        OrderedJson cj;
        cj["position"] = c.chain.variable + 1;
        cj["variable"] = origin_name(r, c);
        OrderedJson steps = OrderedJson::array();
        std::vector<FieldElem> alg;
        for (const auto& s : c.chain.steps) {
            OrderedJson sj;
            sj["r"] = s.exponent;
            sj["residue"] = print(s.residue);
            sj["kind"] = s.kind == Classification::Algebraic ? "algebraic" : "transcendental";
            steps.push_back(std::move(sj));
            if (s.kind == Classification::Algebraic) alg.push_back(s.residue);
        }
        cj["steps"] = std::move(steps);
        cj["terminal"] = terminal_name(c.chain.terminal);
        if (c.chain.terminal == ResidueChain::Terminal::DivisibilityBroken) cj["broken_value"] = c.chain.broken_value;
        if (c.chain.terminal == ResidueChain::Terminal::DepthExhausted) cj["depth"] = c.chain.depth;
        chains.push_back(std::move(cj));
        OrderedJson aj;
        aj["variable"] = origin_name(r, c);
        aj["residues"] = elems(alg, print);
        algebraic.push_back(std::move(aj));
    }
    out["chains"] = std::move(chains);

    OrderedJson gens;
    gens["transcendental"] = elems(r.transcendental_generators, print);
    gens["algebraic"] = std::move(algebraic);
    out["generators"] = std::move(gens);

    OrderedJson tower = OrderedJson::array();
    for (std::size_t k = 0; k < r.field_tower.size(); ++k) {
        const auto& level = r.field_tower[k];
        OrderedJson lj;
        lj["level"] = "Delta_" + std::to_string(k + 2);
        lj["variable"] = origin_name(r, r.chains[k]);
        lj["transcendental"] = elems(level.transcendental, print);
        lj["algebraic"] = elems(level.algebraic, print);
        lj["complete"] = level.complete;
        tower.push_back(std::move(lj));
    }
    out["field_tower"] = std::move(tower);
    return out;
}

OrderedJson report_to_json(const AnalysisReport& r)
{
    const FieldPresentation& field = r.initial.field();
    const std::size_t n = r.initial.size();
    Printer old_names(field, r.initial.variables());
    Printer new_names(field, new_variable_names(n));

    OrderedJson out;
    OrderedJson values;
    values["initial"] = r.initial.values();
    if (r.final_embedding)
        values["final"] = r.final_embedding->values();
    else
        values["final"] = nullptr;
    out["values"] = std::move(values);
    out["trace"] = trace_to_json(r.trace, field);

    if (r.unit_element) {
        OrderedJson u;
        u["expression"] = old_names(r.unit_element->rational());
        u["value"] = value(r.initial, *r.unit_element).get();
        out["unit_element"] = std::move(u);
    } else {
        out["unit_element"] = nullptr;
    }

    OrderedJson residue = chains_to_json(r);
    out["processing_order"] = residue["processing_order"];
    out["chains"] = residue["chains"];
    out["generators"] = residue["generators"];
    out["field_tower"] = residue["field_tower"];
    out["dimension"] = r.dimension;
    out["dimension_exact"] = r.dimension_exact;

    OrderedJson of;
    of["verdict"] = verdict_name(r.verdict);
    if (r.final_embedding) {
        OrderedJson images;
        for (std::size_t k = 0; k < n; ++k)
            images[position_name(k)] = series_prefix(r.final_embedding->image(k), field,
                                                     std::min(prefix_terms, r.initial.precision()));
        of["final_embedding"] = std::move(images);
    }
    out["order_function"] = std::move(of);

    OrderedJson implicit = OrderedJson::array();
    for (const auto& ie : r.implicit_elements) {
        OrderedJson ij;
        ij["name"] = "W" + std::to_string(ie.position + 1);
        ij["position"] = ie.position + 1;
        ij["expression"] = new_names(ie.in_final.rational());
        ij["in_original"] = old_names(ie.in_original.rational());
        ij["value"] = ie.value_tuple;
        implicit.push_back(std::move(ij));
    }
    out["implicit_elements"] = std::move(implicit);
    out["diagnostics"] = r.diagnostics;
    return out;
}

std::string chains_to_text(const AnalysisReport& r)
{
    Printer print(r.initial.field());
    std::ostringstream os;
    for (std::size_t k = 0; k < r.chains.size(); ++k) {
        const auto& c = r.chains[k];
        os << "chain " << origin_name(r, c) << " (position " << c.chain.variable + 1 << "):";
        for (const auto& s : c.chain.steps)
            os << " (" << s.exponent << ", " << print(s.residue) << ", "
               << (s.kind == Classification::Algebraic ? "alg" : "trans") << ")";
        os << " -> " << terminal_name(c.chain.terminal);
        if (c.chain.terminal == ResidueChain::Terminal::DivisibilityBroken) os << " at value " << c.chain.broken_value;
        os << "\n";
    }
    std::vector<std::string> gens;
    for (const auto& g : r.transcendental_generators) gens.push_back(print(g));
    os << "transcendental generators: " << (gens.empty() ? "none" : join(gens, ", ")) << "\n";
    return os.str();
}

std::string report_to_text(const AnalysisReport& r)
{
    const FieldPresentation& field = r.initial.field();
    const std::size_t n = r.initial.size();
    Printer old_names(field, r.initial.variables());
    Printer new_names(field, new_variable_names(n));
    auto vec = [](const std::vector<std::int64_t>& v) {
        std::vector<std::string> s;
        for (auto x : v) s.push_back(std::to_string(x));
        return "(" + join(s, ", ") + ")";
    };

    std::ostringstream os;
    os << "initial values: " << vec(r.initial.values()) << "\n";
    os << "trace: " << r.trace.size() << " steps\n";
    Printer print(field);
    for (const auto& e : r.trace) {
        os << "  ";
        std::visit(overloaded{
                       [&](const Monoidal& m) { os << "monoidal X" << m.target + 1 << " = Y" << m.divisor + 1 << "*Y" << m.target + 1; },
                       [&](const Swap& m) { os << "swap " << m.a + 1 << " <-> " << m.b + 1; },
                       [&](const CoordChange& m) {
                           os << "coord X" << m.target + 1 << " = Y" << m.target + 1 << " + (" << print(m.coefficient)
                              << ")*Y1";
                           if (m.exponent != 1) os << "^" << m.exponent;
                       },
                   },
                   e.step);
        os << "  -> " << vec(e.values_after) << "\n";
    }
    if (r.final_embedding) os << "final values: " << vec(r.final_embedding->values()) << "\n";
    if (r.unit_element)
        os << "unit element: " << old_names(r.unit_element->rational()) << "  (value "
           << value(r.initial, *r.unit_element).to_string() << ")\n";
    os << chains_to_text(r);
    os << "dimension: " << r.dimension << (r.dimension_exact ? " (exact)" : " (lower bound)") << "\n";
    os << "order function: " << verdict_name(r.verdict) << "\n";
    if (r.final_embedding && r.verdict == Verdict::Yes)
        for (std::size_t k = 0; k < n; ++k)
            os << "  " << position_name(k) << " -> "
               << series_prefix(r.final_embedding->image(k), field, std::min(prefix_terms, r.initial.precision())) << "\n";
    for (const auto& ie : r.implicit_elements) {
        std::vector<std::string> tuple;
        for (int x : ie.value_tuple) tuple.push_back(std::to_string(x));
        os << "implicit W" << ie.position + 1 << " = " << new_names(ie.in_final.rational()) << "  = "
           << old_names(ie.in_original.rational()) << "  value (" << join(tuple, ", ") << ")\n";
    }
    for (const auto& d : r.diagnostics) os << "diagnostic: " << d << "\n";
    return os.str();
}

} // namespace dval
