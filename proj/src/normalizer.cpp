#include "spa/normalizer.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "spa/cyclic.hpp"

namespace spa {

std::string step_rule_name(StepRule rule) {
    switch (rule) {
        case StepRule::Seed: return "seed";
        case StepRule::Peel: return "peel";
        case StepRule::Merge: return "merge";
        case StepRule::Substitute: return "substitute";
        case StepRule::CycleCombine: return "cycle-combine";
    }
    return "?";
}

std::string Violation::to_text() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        out << (i + 1) << ". " << step_rule_name(steps[i].rule) << ": "
            << format_term(steps[i].relation.lhs) << " = " << format_term(steps[i].relation.rhs)
            << '\n';
    }
    out << "clash: " << clash_lhs.name() << " ≠ " << clash_rhs.name() << '\n';
    return out.str();
}

PeelOutcome peel(const Relation& rel) {
    const Word gamma = longest_common_prefix(rel.lhs.word(), rel.rhs.word());
    const Word u = rel.lhs.word().suffix_from(gamma.size());
    const Word v = rel.rhs.word().suffix_from(gamma.size());
    const GeneratorId& x = rel.lhs.generator();
    const GeneratorId& y = rel.rhs.generator();
    if (u.empty() && v.empty()) {
        if (x == y) return PeelTrivial{};
        return PeelMerge{x, y};
    }
    if (u.empty()) {
        if (x == y) return PeelCycle{x, v};
        return PeelSubstitute{x, v, y};
    }
    if (v.empty()) {
        if (x == y) return PeelCycle{x, u};
        return PeelSubstitute{y, u, x};
    }
    return PeelClash{u.letter(0), v.letter(0)};
}

namespace {

// Shared scratch state for normalize/reduce_cycles: the derivation log, the
// optional measure instrumentation, and the running measure itself.
struct Chase {
    std::vector<ViolationStep> log;
    std::vector<NormalizeEvent>* events = nullptr;
    std::size_t live = 0;
    std::size_t weight = 0;

    void step(StepRule rule, Term lhs, Term rhs) {
        log.push_back({rule, Relation{std::move(lhs), std::move(rhs)}});
    }
    void event(StepRule rule, std::size_t live_before, std::size_t weight_before) {
        if (events) events->push_back({rule, live_before, live, weight_before, weight});
    }
    Violation violation(const OpSymbol& f, const OpSymbol& g) const {
        return Violation{log, f, g};
    }
};

// Collapses two cycle words on one generator into one, or certifies a
// clash. Each round either drops a duplicate or replaces the longer word by
// the shorter's left quotient of it, so the total length strictly decreases.
std::variant<Word, Violation> combine_cycles(Chase& chase, const GeneratorId& gen, Word a,
                                             Word b) {
    const Word one(a.signature());
    while (true) {
        if (a == b) {
            const std::size_t wb = chase.weight;
            chase.weight -= b.size();
            chase.event(StepRule::CycleCombine, chase.live, wb);
            return a;
        }
        if (a.size() > b.size()) std::swap(a, b);
        chase.step(StepRule::CycleCombine, Term(a, gen), Term(b, gen));
        if (auto rest = strip_prefix(a, b)) {
            chase.step(StepRule::Peel, Term(one, gen), Term(*rest, gen));
            const std::size_t wb = chase.weight;
            chase.weight -= a.size();
            chase.event(StepRule::CycleCombine, chase.live, wb);
            b = std::move(*rest);
        } else {
            const Word gamma = longest_common_prefix(a, b);
            const Word u = a.suffix_from(gamma.size());
            const Word v = b.suffix_from(gamma.size());
            chase.step(StepRule::Peel, Term(u, gen), Term(v, gen));
            return chase.violation(u.letter(0), v.letter(0));
        }
    }
}

}  // namespace

CycleReduction reduce_cycles(const Signature& sig, std::span<const Word> words,
                             const GeneratorId& generator) {
    Chase chase;
    const Word one(sig);
    std::optional<Word> acc;
    for (const Word& w : words) {
        if (w.empty()) {
            throw std::invalid_argument("reduce_cycles: cycle words must be non-empty");
        }
        if (w.signature() != sig) {
            throw std::invalid_argument("reduce_cycles: word over a foreign signature");
        }
        chase.step(StepRule::Seed, Term(one, generator), Term(w, generator));
        chase.weight += w.size();
        if (!acc) {
            acc = w;
            continue;
        }
        auto combined = combine_cycles(chase, generator, std::move(*acc), w);
        if (auto* violation = std::get_if<Violation>(&combined)) return std::move(*violation);
        acc = std::move(std::get<Word>(combined));
    }
    return acc.value_or(one);
}

CycleReduction reduce_cycles(const Signature& sig, std::span<const Word> words) {
    return reduce_cycles(sig, words, GeneratorId("c"));
}

NormalForm::NormalForm(Signature signature, std::vector<Word> factors)
    : sig_(std::move(signature)), factors_(std::move(factors)) {
    for (Word& w : factors_) {
        if (w.signature() != sig_) {
            throw std::invalid_argument("factor word over a foreign signature");
        }
        w = canonical_rotation(w);
    }
    std::sort(factors_.begin(), factors_.end());
}

std::size_t rank(const NormalForm& nf) { return nf.factors().size(); }

bool is_isomorphic(const NormalForm& a, const NormalForm& b) {
    if (a.signature() != b.signature()) {
        throw std::invalid_argument("normal forms over different signatures");
    }
    return a.factors() == b.factors();
}

bool is_peano(const NormalForm& nf) {
    return std::all_of(nf.factors().begin(), nf.factors().end(),
                       [](const Word& w) { return w.empty(); });
}

namespace {

struct ResolvedTerm {
    Word word;
    std::uint32_t root;
    std::size_t cert;
};

struct Normalizer {
    const Presentation& pres;
    const Signature& sig;
    Chase chase;

    std::vector<std::uint32_t> parent;
    struct Assign {
        Word gamma;
        std::uint32_t target;
        std::size_t cert;
    };
    std::vector<std::optional<Assign>> assign;
    std::vector<std::optional<Word>> cycle;
    std::vector<std::size_t> class_cert;
    struct Pending {
        Term lhs;
        Term rhs;
        std::size_t base_cert;
        bool is_seed;
    };
    std::deque<Pending> queue;
    DerivationCerts certs;

    explicit Normalizer(const Presentation& p, std::vector<NormalizeEvent>* events)
        : pres(p), sig(p.signature()) {
        const std::size_t n = p.generators().size();
        parent.resize(n);
        std::iota(parent.begin(), parent.end(), 0);
        assign.resize(n);
        cycle.resize(n);
        class_cert.assign(n, 0);
        chase.events = events;
        chase.live = n;
        for (const Relation& r : p.relations()) {
            queue.push_back({r.lhs, r.rhs, 0, true});
            chase.weight += r.lhs.word().size() + r.rhs.word().size();
        }
    }

    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    const GeneratorId& gen(std::uint32_t i) const { return pres.generators()[i]; }

    ResolvedTerm resolve(const Term& t) {
        Word w = t.word();
        auto g = static_cast<std::uint32_t>(pres.generator_index(t.generator()));
        std::size_t cert = 0;
        while (true) {
            g = find(g);
            if (!assign[g]) break;
            const Assign& a = *assign[g];
            w = concat(w, a.gamma);
            cert = std::max(cert, a.cert);
            g = a.target;
        }
        cert = std::max({cert, class_cert[g], w.size()});
        return {std::move(w), g, cert};
    }

    // Adds a cycle relation root = w(root); nullopt means no clash.
    std::optional<Violation> add_cycle(std::uint32_t root, Word w, std::size_t cert) {
        class_cert[root] = std::max(class_cert[root], cert);
        if (!cycle[root]) {
            cycle[root] = std::move(w);
            return std::nullopt;
        }
        auto combined = combine_cycles(chase, gen(root), std::move(*cycle[root]), std::move(w));
        if (auto* violation = std::get_if<Violation>(&combined)) return std::move(*violation);
        cycle[root] = std::move(std::get<Word>(combined));
        return std::nullopt;
    }

    std::optional<Violation> merge(std::uint32_t ra, std::uint32_t rb, std::size_t cert) {
        if (rb < ra) std::swap(ra, rb);  // the earlier-declared generator survives
        chase.step(StepRule::Merge, Term(Word(sig), gen(ra)), Term(Word(sig), gen(rb)));
        parent[rb] = ra;
        const std::size_t lb = chase.live;
        --chase.live;
        chase.event(StepRule::Merge, lb, chase.weight);
        class_cert[ra] = std::max({class_cert[ra], class_cert[rb], cert});
        certs.merges.push_back({gen(ra).name(), gen(rb).name(), cert});
        if (cycle[rb]) {
            Word moved = std::move(*cycle[rb]);
            cycle[rb].reset();
            chase.step(StepRule::Substitute, Term(Word(sig), gen(ra)), Term(moved, gen(ra)));
            return add_cycle(ra, std::move(moved), class_cert[ra]);
        }
        return std::nullopt;
    }

    void substitute(std::uint32_t victim, Word gamma, std::uint32_t target, std::size_t cert) {
        assign[victim] = Assign{gamma, target, cert};
        certs.substitutions.push_back({gen(victim).name(), gamma, gen(target).name(), cert});
        const std::size_t lb = chase.live;
        --chase.live;
        chase.weight -= gamma.size();
        chase.event(StepRule::Substitute, lb, chase.weight + gamma.size());
        if (cycle[victim]) {
            Word moved = std::move(*cycle[victim]);
            cycle[victim].reset();
            chase.weight -= moved.size();
            // victim = gamma(target) turns victim = moved(victim) into a
            // relation over the target's class.
            Term lhs(gamma, gen(target));
            Term rhs(concat(moved, gamma), gen(target));
            chase.step(StepRule::Substitute, lhs, rhs);
            chase.weight += lhs.word().size() + rhs.word().size();
            queue.push_back({std::move(lhs), std::move(rhs),
                             std::max(cert, class_cert[victim]), false});
        }
    }

    std::optional<Violation> process(Pending pen) {
        if (pen.is_seed) chase.step(StepRule::Seed, pen.lhs, pen.rhs);
        ResolvedTerm lhs = resolve(pen.lhs);
        ResolvedTerm rhs = resolve(pen.rhs);
        const std::size_t cert = std::max({pen.base_cert, lhs.cert, rhs.cert});
        chase.weight += lhs.word.size() + rhs.word.size();
        chase.weight -= pen.lhs.word().size() + pen.rhs.word().size();
        if (lhs.word != pen.lhs.word() || rhs.word != pen.rhs.word() ||
            gen(lhs.root) != pen.lhs.generator() || gen(rhs.root) != pen.rhs.generator()) {
            chase.step(StepRule::Substitute, Term(lhs.word, gen(lhs.root)),
                       Term(rhs.word, gen(rhs.root)));
        }

        const Word gamma = longest_common_prefix(lhs.word, rhs.word);
        Word u = lhs.word.suffix_from(gamma.size());
        Word v = rhs.word.suffix_from(gamma.size());
        if (!gamma.empty()) {
            const std::size_t wb = chase.weight;
            chase.weight -= 2 * gamma.size();
            chase.step(StepRule::Peel, Term(u, gen(lhs.root)), Term(v, gen(rhs.root)));
            chase.event(StepRule::Peel, chase.live, wb);
        }

        if (u.empty() && v.empty()) {
            if (lhs.root == rhs.root) return std::nullopt;
            return merge(lhs.root, rhs.root, cert);
        }
        if (u.empty()) {
            if (lhs.root == rhs.root) return add_cycle(lhs.root, std::move(v), cert);
            substitute(lhs.root, std::move(v), rhs.root, cert);
            return std::nullopt;
        }
        if (v.empty()) {
            if (lhs.root == rhs.root) return add_cycle(lhs.root, std::move(u), cert);
            substitute(rhs.root, std::move(u), lhs.root, cert);
            return std::nullopt;
        }
        return chase.violation(u.letter(0), v.letter(0));
    }

    NormalizeResult run() {
        while (!queue.empty()) {
            Pending pen = std::move(queue.front());
            queue.pop_front();
            if (auto violation = process(std::move(pen))) return std::move(*violation);
        }

        const std::size_t n = pres.generators().size();
        struct FactorSlot {
            Word canonical;
            std::uint32_t root;
        };
        std::vector<FactorSlot> slots;
        for (std::uint32_t g = 0; g < n; ++g) {
            if (find(g) == g && !assign[g]) {
                Word reduced = cycle[g] ? *cycle[g] : Word(sig);
                slots.push_back({canonical_rotation(reduced), g});
            }
        }
        std::sort(slots.begin(), slots.end(), [](const FactorSlot& a, const FactorSlot& b) {
            if (a.canonical != b.canonical) return a.canonical < b.canonical;
            return a.root < b.root;
        });

        std::vector<Word> factor_words;
        GeneratorAssignment assignment;
        std::vector<std::uint32_t> root_to_factor(n, 0);
        for (std::size_t i = 0; i < slots.size(); ++i) {
            const std::uint32_t g = slots[i].root;
            factor_words.push_back(slots[i].canonical);
            assignment.factors.push_back(FactorInfo{cycle[g] ? *cycle[g] : Word(sig), gen(g)});
            certs.factor_cycle_cert.push_back(class_cert[g]);
            root_to_factor[g] = static_cast<std::uint32_t>(i);
        }
        for (std::uint32_t g = 0; g < n; ++g) {
            ResolvedTerm r = resolve(Term(Word(sig), gen(g)));
            const std::size_t f = root_to_factor[r.root];
            CyclicAlgebra anchor(sig, assignment.factors[f].cycle);
            assignment.images.emplace(gen(g).name(),
                                      GeneratorImage{f, canonicalize(anchor, r.word)});
        }
        return Decomposition{NormalForm(sig, std::move(factor_words)), std::move(assignment),
                             std::move(certs)};
    }
};

}  // namespace

NormalizeResult normalize(const Presentation& p, std::vector<NormalizeEvent>* events) {
    Normalizer n(p, events);
    return n.run();
}

NormalizeResult normalize(const Presentation& p) { return normalize(p, nullptr); }

}  // namespace spa
