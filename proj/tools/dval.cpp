#include <iostream>

#include <CLI11.hpp>

#include "dval/error.hpp"
#include "dval/io/document.hpp"
#include "dval/io/report.hpp"

using namespace dval;

namespace {

enum Exit { ok = 0, check_failed = 1, exhausted = 2, bad_input = 3 };

struct Flags {
    std::string file;
    std::string expr;
    long precision = default_precision;
    int depth = default_depth;
    int iterations = default_iterations;
    std::uint64_t seed = 0;
    int degree = 5;
    int trials = 100;
    bool transformed = false;
    std::string format = "text";
};

bool json_out(const Flags& f)
{
    return f.format == "json";
}

int run_value(const Flags& f)
{
    Document doc = load_document(f.file, f.precision);
    const Embedding& emb = doc.embedding;
    FieldExpr e = FieldExpr::parse(f.expr, emb.field(), emb.variables());
    Value v = value(emb, e);
    if (json_out(f)) {
        OrderedJson j = v.is_finite() ? OrderedJson(v.get()) : OrderedJson(v.to_string());
        std::cout << j.dump() << "\n";
    } else {
        std::cout << v.to_string() << "\n";
    }
    return v.is_exhausted() ? exhausted : ok;
}

int run_unit(const Flags& f)
{
    Document doc = load_document(f.file, f.precision);
    const Embedding& emb = doc.embedding;
    UnitResult u = unit_value_element(emb, f.iterations);
    Printer print(emb.field(), emb.variables());
    const std::string expr = print(u.element.rational());
    const Value v = value(emb, u.element);
    if (json_out(f)) {
        OrderedJson j;
        j["values"] = {{"initial", emb.values()}, {"final", u.embedding.values()}};
        j["trace"] = trace_to_json(u.trace, emb.field());
        j["unit_element"] = {{"expression", expr}, {"value", v.get()}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << expr << "\n" << "value " << v.to_string() << " after " << u.trace.size() << " steps\n";
    }
    return ok;
}

AnalysisReport run_analysis(const Flags& f, Document& doc)
{
    AnalysisOptions opts;
    opts.depth = f.depth;
    opts.iterations = f.iterations;
    opts.certified_infinite = doc.certified_infinite;
    return analyze(doc.embedding, opts);
}

int run_analyze(const Flags& f, bool chains_only)
{
    Document doc = load_document(f.file, f.precision);
    AnalysisReport r = run_analysis(f, doc);
    if (json_out(f))
        std::cout << (chains_only ? chains_to_json(r) : report_to_json(r)).dump(2) << "\n";
    else
        std::cout << (chains_only ? chains_to_text(r) : report_to_text(r));
    return r.exhausted ? exhausted : ok;
}

int run_check(const Flags& f)
{
    Document doc = load_document(f.file, f.precision);
    std::optional<Embedding> target = doc.embedding;
    if (f.transformed) {
        AnalysisReport r = run_analysis(f, doc);
        if (r.verdict != Verdict::Yes) {
            std::cerr << "check-order: the analysis verdict is " << verdict_name(r.verdict)
                      << "; there is no order-function embedding to check\n";
            return r.exhausted ? exhausted : check_failed;
        }
        target = r.final_embedding;
    }
    OrderCheck c = order_function_check(*target, f.degree, f.trials, f.seed);
    Printer print(target->field(), target->variables());
    if (json_out(f)) {
        OrderedJson j;
        j["passed"] = c.passed;
        j["trials"] = c.trials;
        if (c.counterexample) {
            j["counterexample"] = print(c.counterexample->rational());
            j["observed"] = c.observed->to_string();
            j["expected"] = c.expected;
        }
        std::cout << j.dump(2) << "\n";
    } else if (c.passed) {
        std::cout << "pass (" << c.trials << " trials)\n";
    } else {
        std::cout << "fail: " << print(c.counterexample->rational()) << " has value " << c.observed->to_string()
                  << ", expected " << c.expected << "\n";
    }
    return c.passed ? ok : check_failed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Rank-one discrete valuations presented by embeddings into Delta[[t]]"};
    app.require_subcommand(1);
    Flags f;

    auto common = [&](CLI::App* sub) {
        sub->add_option("file", f.file, "embedding document (JSON)")->required()->check(CLI::ExistingFile);
        sub->add_option("--precision", f.precision, "order search cap")->check(CLI::Range(1L, 1L << 20));
        sub->add_option("--iterations", f.iterations, "iteration cap")->check(CLI::Range(1, 1 << 20));
        sub->add_option("--format", f.format, "output format")->check(CLI::IsMember({"text", "json"}));
    };
    auto value_cmd = app.add_subcommand("value", "value of a field element");
    common(value_cmd);
    value_cmd->add_option("--expr", f.expr, "rational expression in the variables")->required();

    auto unit_cmd = app.add_subcommand("unit-element", "construct an element of value 1");
    common(unit_cmd);

    auto residues_cmd = app.add_subcommand("residues", "residue chains and generators");
    auto analyze_cmd = app.add_subcommand("analyze", "residue field, dimension and order-function verdict");
    auto check_cmd = app.add_subcommand("check-order", "randomized order-function check");
    for (auto* sub : {residues_cmd, analyze_cmd, check_cmd}) {
        common(sub);
        sub->add_option("--depth", f.depth, "residue chain depth")->check(CLI::Range(1, 1 << 16));
    }
    check_cmd->add_option("--seed", f.seed, "random seed");
    check_cmd->add_option("--degree", f.degree, "maximal total degree")->check(CLI::Range(0, 64));
    check_cmd->add_option("--trials", f.trials, "number of random polynomials")->check(CLI::Range(0, 1 << 20));
    check_cmd->add_flag("--transformed", f.transformed, "check the embedding produced by analyze");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? ok : bad_input;
    }

    try {
        if (value_cmd->parsed()) return run_value(f);
        if (unit_cmd->parsed()) return run_unit(f);
        if (residues_cmd->parsed()) return run_analyze(f, true);
        if (analyze_cmd->parsed()) return run_analyze(f, false);
        return run_check(f);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return bad_input;
    } catch (const PrecisionError& e) {
        std::cerr << "precision exhausted: " << e.what() << "\n";
        return exhausted;
    } catch (const IterationError& e) {
        std::cerr << "iteration cap reached: " << e.what() << "\n";
        return exhausted;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return bad_input;
    }
}
