#include <map>
#include <numeric>

#include "dval/error.hpp"
#include "internal.hpp"

namespace dval {

namespace {

using Terminal = ResidueChain::Terminal;

// W = Y_p - sum b_j Y_1^r_j over the current variables.
FieldExpr truncated_difference(const ResidueChain& chain, std::size_t symbols)
{
    FieldExpr w = FieldExpr::variable(chain.variable, symbols);
    const RatFunc pivot = RatFunc::variable(static_cast<VarIndex>(symbols));
    for (const auto& s : chain.steps) w = w - FieldExpr(s.residue * pivot.pow(s.exponent), symbols);
    return w;
}

} // namespace

AnalysisReport analyze(const Embedding& emb, const AnalysisOptions& opts)
{
    AnalysisReport rep{emb};
    const std::size_t n = emb.size();
    const std::size_t symbols = emb.field().size();
    auto certified = [&](std::size_t origin) {
        return origin < opts.certified_infinite.size() && opts.certified_infinite[origin];
    };

    Embedding cur = emb;
    for (int restarts = 0;; ++restarts) {
        if (restarts > opts.iterations) {
            rep.diagnostics.push_back("residue chains kept breaking divisibility after " +
                                      std::to_string(opts.iterations) + " restarts");
            rep.exhausted = true;
            return rep;
        }
        try {
            cur = detail::reach_unit(cur, rep.trace, opts.iterations);
        } catch (const IterationError& e) {
            rep.diagnostics.push_back(e.what());
            rep.exhausted = true;
            return rep;
        } catch (const PrecisionError& e) {
            rep.diagnostics.push_back(std::string("value-1 search: ") + e.what());
            rep.exhausted = true;
            return rep;
        }

        std::vector<std::size_t> origin(n);
        std::iota(origin.begin(), origin.end(), std::size_t{0});
        for (const auto& entry : rep.trace)
            if (auto* s = std::get_if<Swap>(&entry.step)) std::swap(origin[s->a], origin[s->b]);

        rep.unit_element = express_new_in_old(rep.trace, n, symbols).front();
        if (value(emb, *rep.unit_element) != Value::finite(1))
            throw DomainError("value-1 certificate failed for the analyzed embedding");

        rep.processing_order.clear();
        rep.chains.clear();
        rep.transcendental_generators.clear();
        rep.field_tower.clear();
        rep.implicit_elements.clear();

        // A transcendental residue over the prime field fixes the first chain.
        std::map<std::size_t, ResidueChain> over_prime;
        std::optional<std::size_t> first;
        for (std::size_t p = 1; p < n && !first; ++p) {
            ResidueChain c = extract_residue_chain(cur, p, {}, opts.depth);
            if (c.terminal == Terminal::TranscendentalFound) first = p;
            over_prime.emplace(p, std::move(c));
        }
        if (first) rep.processing_order.push_back(*first);
        for (std::size_t p = 1; p < n; ++p)
            if (!first || p != *first) rep.processing_order.push_back(p);

        bool restart = false;
        std::vector<FieldElem>& gens = rep.transcendental_generators;
        for (std::size_t p : rep.processing_order) {
            ResidueChain chain;
            auto cached = over_prime.find(p);
            // Residues never depend on the generators, only their classification.
            if (cached != over_prime.end() &&
                (gens.empty() || cached->second.terminal != Terminal::TranscendentalFound))
                chain = cached->second;
            else
                chain = extract_residue_chain(cur, p, gens, opts.depth);

            TowerLevel level{p, {}, {}, chain.terminal == Terminal::TranscendentalFound};
            for (const auto& s : chain.steps)
                (s.kind == Classification::Transcendental ? level.transcendental : level.algebraic).push_back(s.residue);

            try {
                switch (chain.terminal) {
                case Terminal::TranscendentalFound: {
                    for (const auto& s : chain.steps)
                        if (s.kind == Classification::Algebraic)
                            cur = record(cur, CoordChange{p, s.residue, s.exponent}, rep.trace);
                    for (long k = 1; k < chain.steps.back().exponent; ++k)
                        cur = record(cur, Monoidal{p, 0}, rep.trace);
                    gens.push_back(chain.steps.back().residue);
                    break;
                }
                case Terminal::DivisibilityBroken: {
                    for (const auto& s : chain.steps) cur = record(cur, CoordChange{p, s.residue, s.exponent}, rep.trace);
                    rep.diagnostics.push_back("chain at position " + std::to_string(p + 1) + " reached value " +
                                              std::to_string(chain.broken_value) +
                                              " not divisible by the pivot value; restarting");
                    restart = true;
                    break;
                }
                case Terminal::DepthExhausted:
                    rep.implicit_elements.push_back({p, truncated_difference(chain, symbols), {}, {}});
                    break;
                case Terminal::PrecisionExhausted:
                    rep.diagnostics.push_back("chain at position " + std::to_string(p + 1) + " (" +
                                              emb.variables()[origin[p]] + "): order not established within precision " +
                                              std::to_string(emb.precision()));
                    rep.exhausted = true;
                    break;
                }
            } catch (const PrecisionError& e) {
                rep.diagnostics.push_back("transforming position " + std::to_string(p + 1) + ": " + e.what());
                rep.exhausted = true;
                chain.terminal = Terminal::PrecisionExhausted;
                level.complete = false;
            }
            if (restart) break;
            rep.chains.push_back({std::move(chain), origin[p]});
            rep.field_tower.push_back(std::move(level));
        }
        if (restart) continue;

        rep.dimension = static_cast<int>(gens.size());
        rep.dimension_exact = true;
        bool all_found = true, certified_no = false;
        for (const auto& c : rep.chains) {
            if (c.chain.terminal != Terminal::TranscendentalFound) {
                all_found = false;
                rep.dimension_exact = false;
            }
            if (c.chain.terminal == Terminal::DepthExhausted && certified(c.origin)) certified_no = true;
        }
        rep.verdict = all_found ? Verdict::Yes : certified_no ? Verdict::No : Verdict::Unknown;

        const std::size_t m = static_cast<std::size_t>(rep.dimension) + 1;
        for (std::size_t w = 0; w < rep.implicit_elements.size(); ++w) {
            auto& ie = rep.implicit_elements[w];
            ie.in_original = pullback(rep.trace, ie.in_final, n);
            ie.value_tuple.assign(n - m + 1, 0);
            const std::size_t k = m + 1 + w; // 1-based index among Y_{m+1..n}
            if (n >= k) ie.value_tuple[n - k] = 1;
        }
        rep.final_embedding = cur.with_variables(new_variable_names(n));
        return rep;
    }
}

} // namespace dval
