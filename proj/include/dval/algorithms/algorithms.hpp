#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dval/transform/transform.hpp"

namespace dval {

inline constexpr int default_depth = 12;
inline constexpr int default_iterations = 200;

// Euclidean equalization by monoidal steps (and swaps bringing the minimum
// value to position 0). Appends to `trace`; afterwards every value equals
// the gcd of the input values.
Embedding equalize_values(const Embedding& emb, Trace& trace);

struct UnitResult {
    Embedding embedding;
    Trace trace;
    FieldExpr element; // over the original variables
};

// Alternates equalization and coordinate changes until the pivot has value 1.
// The element's value under `emb` is checked to be exactly 1. Throws
// IterationError when the pivot value is still above 1 after `iterations`
// rounds.
UnitResult unit_value_element(const Embedding& emb, int iterations = default_iterations);

enum class Classification { Algebraic, Transcendental };

// Transcendental iff adding the candidate raises the Jacobian rank.
Classification transcendence_test(std::span<const FieldElem> generators, const FieldElem& candidate,
                                  const FieldPresentation& field);

struct ResidueStep {
    long exponent;
    FieldElem residue;
    Classification kind;
    friend bool operator==(const ResidueStep&, const ResidueStep&) = default;
};

struct ResidueChain {
    enum class Terminal { TranscendentalFound, DivisibilityBroken, DepthExhausted, PrecisionExhausted };

    std::size_t variable = 0;
    std::vector<ResidueStep> steps;
    Terminal terminal = Terminal::DepthExhausted;
    std::int64_t broken_value = 0; // DivisibilityBroken: the value not divisible by the pivot's
    int depth = 0;
};

// Residues of variable i against the pivot at position 0.
ResidueChain extract_residue_chain(const Embedding& emb, std::size_t i, std::span<const FieldElem> known_generators,
                                   int depth);

struct AnalysisOptions {
    int depth = default_depth;
    int iterations = default_iterations;
    // Per original variable: the user certifies the chain never terminates.
    std::vector<bool> certified_infinite;
};

enum class Verdict { Yes, No, Unknown };

struct ChainReport {
    ResidueChain chain;
    std::size_t origin; // original variable carried at this position
};

struct ImplicitElement {
    std::size_t position;
    FieldExpr in_final;    // W over the final variables
    FieldExpr in_original; // its pullback
    std::vector<int> value_tuple;
};

struct TowerLevel {
    std::size_t position;
    std::vector<FieldElem> transcendental;
    std::vector<FieldElem> algebraic;
    bool complete; // false when the chain stopped before a transcendental residue
};

struct AnalysisReport {
    Embedding initial;
    std::optional<Embedding> final_embedding;
    Trace trace;
    std::optional<FieldExpr> unit_element;
    std::vector<std::size_t> processing_order;
    std::vector<ChainReport> chains;
    std::vector<FieldElem> transcendental_generators;
    std::vector<TowerLevel> field_tower;
    int dimension = 0;
    bool dimension_exact = false;
    Verdict verdict = Verdict::Unknown;
    std::vector<ImplicitElement> implicit_elements;
    std::vector<std::string> diagnostics;
    bool exhausted = false; // a precision or iteration cap stopped part of the run
};

AnalysisReport analyze(const Embedding& emb, const AnalysisOptions& opts = {});

struct OrderCheck {
    bool passed = true;
    int trials = 0;
    std::optional<FieldExpr> counterexample;
    std::optional<Value> observed;
    std::int64_t expected = 0;
};

// Each variable must have value 1, then `trials` seeded random polynomials of
// total degree <= degree must have value equal to their least total degree.
// Values are computed in parallel. Throws PrecisionError when a trial's value
// cannot be established.
OrderCheck order_function_check(const Embedding& emb, int degree, int trials, std::uint64_t seed);

// Serial reference for order_function_check.
OrderCheck order_function_check_reference(const Embedding& emb, int degree, int trials, std::uint64_t seed);

// The random polynomials used by the order check, in trial order.
std::vector<FieldExpr> random_polynomials(std::size_t variables, std::size_t symbols, int degree, int count,
                                          std::uint64_t seed);

} // namespace dval
