#include "dval/algorithms/algorithms.hpp"
#include "dval/error.hpp"
#include "dval/field/jacobian.hpp"

namespace dval {

Classification transcendence_test(std::span<const FieldElem> generators, const FieldElem& candidate,
                                  const FieldPresentation& field)
{
    std::vector<FieldElem> all(generators.begin(), generators.end());
    const std::size_t base = jacobian_rank(all, field.size());
    all.push_back(candidate);
    return jacobian_rank(all, field.size()) == base + 1 ? Classification::Transcendental : Classification::Algebraic;
}

ResidueChain extract_residue_chain(const Embedding& emb, std::size_t i, std::span<const FieldElem> known_generators,
                                   int depth)
{
    if (i == 0 || i >= emb.size()) throw DomainError("residue chain needs a non-pivot variable");
    const long cap = emb.precision();
    const std::size_t symbols = emb.field().size();
    const std::int64_t alpha = emb.value(0);
    const FieldElem lead = emb.leading_coefficient(0);

    std::vector<FieldElem> gens(known_generators.begin(), known_generators.end());
    const std::size_t base_rank = jacobian_rank(gens, symbols);
    gens.emplace_back();

    ResidueChain chain;
    chain.variable = i;
    chain.depth = depth;
    LazySeries cur = emb.image(i);
    for (;;) {
        if (static_cast<int>(chain.steps.size()) >= depth) {
            chain.terminal = ResidueChain::Terminal::DepthExhausted;
            return chain;
        }
        Value v = cur.order(cap);
        if (!v.is_finite()) {
            chain.terminal = ResidueChain::Terminal::PrecisionExhausted;
            return chain;
        }
        if (v.get() % alpha != 0) {
            chain.terminal = ResidueChain::Terminal::DivisibilityBroken;
            chain.broken_value = v.get();
            return chain;
        }
        const long r = static_cast<long>(v.get() / alpha);
        FieldElem b = cur.coefficient(v.get()) / lead.pow(r);
        gens.back() = b;
        const bool trans = jacobian_rank(gens, symbols) == base_rank + 1;
        chain.steps.push_back({r, b, trans ? Classification::Transcendental : Classification::Algebraic});
        if (trans) {
            chain.terminal = ResidueChain::Terminal::TranscendentalFound;
            return chain;
        }
        cur = cur - integer_power(emb.image(0), r).scaled(b);
    }
}

} // namespace dval
