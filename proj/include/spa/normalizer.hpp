#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "spa/presentation.hpp"

namespace spa {

enum class StepRule { Seed, Peel, Merge, Substitute, CycleCombine };

std::string step_rule_name(StepRule rule);

/// One inference recorded while chasing a presentation; `relation` is the
/// pair of terms the rule produced.
struct ViolationStep {
    StepRule rule;
    Relation relation;
};

/// Certificate that no semi-Peano quotient satisfies the input relations:
/// a derivation ending in two equated terms headed by distinct symbols.
struct Violation {
    std::vector<ViolationStep> steps;
    OpSymbol clash_lhs;
    OpSymbol clash_rhs;

    /// Numbered step list, one line per step, ending with "clash: f ≠ g".
    std::string to_text() const;
};

// ---------------------------------------------------------------------------
// peel: a single relation, classified after stripping the common prefix.

struct PeelTrivial {};
struct PeelMerge {
    GeneratorId lhs;
    GeneratorId rhs;
};
struct PeelCycle {
    GeneratorId generator;
    Word word;
};
struct PeelSubstitute {
    GeneratorId eliminated;  // eliminated = word(via)
    Word word;
    GeneratorId via;
};
struct PeelClash {
    OpSymbol lhs_head;
    OpSymbol rhs_head;
};
using PeelOutcome = std::variant<PeelTrivial, PeelMerge, PeelCycle, PeelSubstitute, PeelClash>;

PeelOutcome peel(const Relation& rel);

// ---------------------------------------------------------------------------
// reduce_cycles: the set {c = w(c) : w in words} collapses to a single cycle
// relation or certifies a clash. The weight sum |w| strictly decreases at
// every replacement, so the loop terminates.

using CycleReduction = std::variant<Word, Violation>;

CycleReduction reduce_cycles(const Signature& sig, std::span<const Word> words,
                             const GeneratorId& generator);
CycleReduction reduce_cycles(const Signature& sig, std::span<const Word> words);

// ---------------------------------------------------------------------------
// Normal forms.

/// The multiset of cycle words of the free-product decomposition, one per
/// factor, each in canonical-rotation form and sorted shortlex. The empty
/// word denotes a free factor P/1.
class NormalForm {
public:
    NormalForm(Signature signature, std::vector<Word> factors);

    const Signature& signature() const { return sig_; }
    const std::vector<Word>& factors() const { return factors_; }

    friend bool operator==(const NormalForm& a, const NormalForm& b) {
        return a.sig_ == b.sig_ && a.factors_ == b.factors_;
    }
    friend bool operator!=(const NormalForm& a, const NormalForm& b) { return !(a == b); }

private:
    Signature sig_;
    std::vector<Word> factors_;
};

std::size_t rank(const NormalForm& nf);

/// Decides isomorphism of the presented algebras: the factor multisets must
/// match, and factors are already rotation-canonical. Throws
/// std::invalid_argument when the signatures differ.
bool is_isomorphic(const NormalForm& a, const NormalForm& b);

/// A Peano (absolutely free) algebra is one whose factors are all 1.
bool is_peano(const NormalForm& nf);

/// Where factor i of the decomposition came from: the surviving input
/// generator anchoring it and its cycle word as anchored there (the
/// NormalForm stores canonical_rotation(cycle) instead).
struct FactorInfo {
    Word cycle;
    GeneratorId representative;
};

struct GeneratorImage {
    std::size_t factor;
    Word word;  // the generator maps to word(representative of that factor)
};

struct GeneratorAssignment {
    std::vector<FactorInfo> factors;  // parallel to NormalForm::factors()
    std::map<std::string, GeneratorImage> images;  // keyed by generator name
};

/// Derivation bookkeeping consumed by the oracle cross-check: every entry
/// carries a certificate length, the longest term appearing in the chain
/// that justifies it, so the checker knows which equalities must already be
/// visible inside a ball of a given bound.
struct DerivationCerts {
    struct SubStep {
        std::string eliminated;
        Word gamma;
        std::string target;
        std::size_t cert;
    };
    struct MergeStep {
        std::string kept;
        std::string absorbed;
        std::size_t cert;
    };
    std::vector<SubStep> substitutions;
    std::vector<MergeStep> merges;
    std::vector<std::size_t> factor_cycle_cert;  // parallel to factors
};

struct Decomposition {
    NormalForm form;
    GeneratorAssignment assignment;
    DerivationCerts certs;
};

using NormalizeResult = std::variant<Decomposition, Violation>;

/// Measure snapshot around each worklist event. The measure
/// (live generators, total relation weight) drops in the first component on
/// Merge/Substitute and in the second on Peel/CycleCombine reductions.
struct NormalizeEvent {
    StepRule rule;
    std::size_t live_before;
    std::size_t live_after;
    std::size_t weight_before;
    std::size_t weight_after;
};

/// Decides whether the presented algebra has a semi-Peano quotient and, if
/// so, computes its free-product decomposition into cyclic factors plus the
/// image of every input generator.
NormalizeResult normalize(const Presentation& p);
NormalizeResult normalize(const Presentation& p, std::vector<NormalizeEvent>* events);

}  // namespace spa
