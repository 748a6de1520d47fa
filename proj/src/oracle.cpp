#include "spa/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace spa {

namespace {

constexpr std::uint32_t kNone = 0xffffffffu;
constexpr std::uint64_t kUniverseCap = 80'000'000;

std::vector<std::uint8_t> word_digits(const Word& w) {
    std::vector<std::uint8_t> out;
    out.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        out.push_back(static_cast<std::uint8_t>(w.index_at(i)));
    }
    return out;
}

}  // namespace

BallClosure::BallClosure(const Presentation& p, unsigned bound)
    : pres_(p), bound_(bound), symbol_count_(static_cast<std::uint32_t>(p.signature().size())) {
    pow_.assign(bound_ + 2, 0);
    offset_.assign(bound_ + 2, 0);
    pow_[0] = 1;
    for (unsigned i = 1; i <= bound_ + 1; ++i) {
        pow_[i] = pow_[i - 1] * symbol_count_;
        if (pow_[i] > kUniverseCap) {
            throw std::invalid_argument("oracle ball too large for this signature and bound");
        }
    }
    offset_[0] = 0;
    for (unsigned i = 0; i <= bound_; ++i) offset_[i + 1] = offset_[i] + pow_[i];
    words_per_gen_ = offset_[bound_ + 1];
    universe_ = words_per_gen_ * p.generators().size();
    if (universe_ > kUniverseCap) {
        throw std::invalid_argument("oracle ball too large for this signature and bound");
    }

    const auto n = static_cast<std::uint32_t>(universe_);
    parent_.resize(n);
    std::iota(parent_.begin(), parent_.end(), 0);
    size_.assign(n, 1);
    head_.resize(n);
    tail_.resize(n);
    short_.resize(n);
    std::uint32_t id = 0;
    for (std::size_t g = 0; g < p.generators().size(); ++g) {
        for (unsigned len = 0; len <= bound_; ++len) {
            if (len == 0) {
                head_[id] = -1;
                tail_[id] = 0;
                short_[id] = (0 < bound_) ? id : kNone;
                ++id;
                continue;
            }
            const std::uint64_t tail_base = g * words_per_gen_ + offset_[len - 1];
            for (std::uint32_t h = 0; h < symbol_count_; ++h) {
                for (std::uint64_t rest = 0; rest < pow_[len - 1]; ++rest) {
                    head_[id] = static_cast<std::int32_t>(h);
                    tail_[id] = static_cast<std::uint32_t>(tail_base + rest);
                    short_[id] = (len < bound_) ? id : kNone;
                    ++id;
                }
            }
        }
    }

    for (const Relation& r : p.relations()) {
        work_.emplace_back(term_id(r.lhs), term_id(r.rhs));
    }
    run();
}

std::uint32_t BallClosure::term_id(const Term& t) const {
    if (t.word().signature() != pres_.signature()) {
        throw std::invalid_argument("term over a foreign signature");
    }
    const std::size_t g = pres_.generator_index(t.generator());
    const std::size_t len = t.word().size();
    if (len > bound_) {
        throw BoundExceeded("term '" + format_term(t) + "' does not fit the ball of bound " +
                            std::to_string(bound_));
    }
    std::uint64_t val = 0;
    for (std::size_t i = 0; i < len; ++i) val = val * symbol_count_ + t.word().index_at(i);
    return static_cast<std::uint32_t>(g * words_per_gen_ + offset_[len] + val);
}

Term BallClosure::term(std::uint32_t id) const {
    const std::uint64_t g = id / words_per_gen_;
    std::uint64_t code = id % words_per_gen_;
    unsigned len = 0;
    while (code >= offset_[len + 1]) ++len;
    std::uint64_t val = code - offset_[len];
    std::vector<std::uint32_t> letters(len);
    for (unsigned i = len; i-- > 0;) {
        letters[i] = static_cast<std::uint32_t>(val % symbol_count_);
        val /= symbol_count_;
    }
    return Term(Word(pres_.signature(), std::move(letters)),
                pres_.generators()[static_cast<std::size_t>(g)]);
}

std::uint32_t BallClosure::prepend(std::uint32_t symbol, std::uint32_t id) const {
    const std::uint64_t g = id / words_per_gen_;
    const std::uint64_t code = id % words_per_gen_;
    unsigned len = 0;
    while (code >= offset_[len + 1]) ++len;
    const std::uint64_t val = code - offset_[len];
    return static_cast<std::uint32_t>(g * words_per_gen_ + offset_[len + 1] +
                                      symbol * pow_[len] + val);
}

std::uint32_t BallClosure::find(std::uint32_t id) const {
    while (parent_[id] != id) id = parent_[id];
    return id;
}

void BallClosure::merge_work(std::uint32_t a, std::uint32_t b) {
    work_.emplace_back(a, b);
}

void BallClosure::run() {
    auto find_mut = [this](std::uint32_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    };

    while (!work_.empty()) {
        auto [a, b] = work_.back();
        work_.pop_back();
        std::uint32_t ra = find_mut(a);
        std::uint32_t rb = find_mut(b);
        if (ra == rb) continue;

        std::int32_t ha = head_[ra];
        std::int32_t hb = head_[rb];
        if (ha >= 0 && hb >= 0 && ha != hb) {
            // Two headed members with distinct heads are forced equal: no
            // balanced congruence extends this.
            const Term witness_a = term(prepend(static_cast<std::uint32_t>(ha), tail_[ra]));
            const Term witness_b = term(prepend(static_cast<std::uint32_t>(hb), tail_[rb]));
            std::vector<ViolationStep> steps;
            for (const Relation& r : pres_.relations()) {
                steps.push_back({StepRule::Seed, r});
            }
            steps.push_back({StepRule::Merge, Relation{witness_a, witness_b}});
            violation_ = Violation{std::move(steps),
                                   pres_.signature().at(static_cast<std::uint32_t>(ha)),
                                   pres_.signature().at(static_cast<std::uint32_t>(hb))};
            status_ = Status::Clash;
            work_.clear();
            return;
        }

        if (size_[ra] < size_[rb]) {
            std::swap(ra, rb);
            std::swap(ha, hb);
        }
        parent_[rb] = ra;
        size_[ra] += size_[rb];
        ++unions_;
        merged_.push_back(a);
        merged_.push_back(b);

        if (hb >= 0) {
            if (ha >= 0) {
                merge_work(tail_[ra], tail_[rb]);
            } else {
                head_[ra] = hb;
                tail_[ra] = tail_[rb];
            }
        }

        const std::uint32_t sa = short_[ra];
        const std::uint32_t sb = short_[rb];
        if (sb != kNone) {
            if (sa != kNone) {
                for (std::uint32_t f = 0; f < symbol_count_; ++f) {
                    merge_work(prepend(f, sa), prepend(f, sb));
                }
            } else {
                short_[ra] = sb;
            }
        }
    }

    std::sort(merged_.begin(), merged_.end());
    merged_.erase(std::unique(merged_.begin(), merged_.end()), merged_.end());
}

bool BallClosure::same_class(const Term& s, const Term& t) const {
    return find(term_id(s)) == find(term_id(t));
}

std::string BallClosure::report_text(std::size_t max_classes) const {
    std::ostringstream out;
    out << "ball bound: " << bound_ << '\n';
    out << "ball size: " << universe_ << '\n';
    out << "classes: " << class_count() << '\n';
    if (status_ == Status::Clash) {
        out << "status: clash: " << violation_->clash_lhs.name() << " ≠ "
            << violation_->clash_rhs.name() << '\n';
    } else {
        out << "status: consistent\n";
    }

    std::map<std::uint32_t, std::vector<std::uint32_t>> classes;
    for (std::uint32_t id : merged_) classes[find(id)].push_back(id);
    std::vector<const std::vector<std::uint32_t>*> ordered;
    ordered.reserve(classes.size());
    for (const auto& [root, members] : classes) ordered.push_back(&members);
    std::sort(ordered.begin(), ordered.end(),
              [](const auto* a, const auto* b) { return a->front() < b->front(); });

    out << "non-singleton classes: " << ordered.size() << '\n';
    std::size_t shown = 0;
    for (const auto* members : ordered) {
        if (shown++ == max_classes) {
            out << "  ...\n";
            break;
        }
        out << "  {";
        constexpr std::size_t kMaxMembers = 8;
        for (std::size_t i = 0; i < members->size() && i < kMaxMembers; ++i) {
            if (i) out << ", ";
            out << format_term(term((*members)[i]));
        }
        if (members->size() > kMaxMembers) out << ", ...";
        out << "}\n";
    }
    return out.str();
}

BallClosure ball_closure(const Presentation& p, unsigned bound) {
    return BallClosure(p, bound);
}

OracleAnswer oracle_equal(const Presentation& p, const Term& s, const Term& t, unsigned bound) {
    BallClosure bc = ball_closure(p, bound);
    bc.term_id(s);
    bc.term_id(t);
    if (bc.status() == BallClosure::Status::Clash) return OracleAnswer::Clash;
    return bc.same_class(s, t) ? OracleAnswer::Equal : OracleAnswer::NotMergedWithin;
}

namespace {

// Canonical image of a ball term under a decomposition, in digit form.
struct TermImage {
    std::uint32_t factor = 0;
    std::vector<std::uint8_t> word;

    friend bool operator==(const TermImage& a, const TermImage& b) {
        return a.factor == b.factor && a.word == b.word;
    }
};

void strip_cycle_suffix(std::vector<std::uint8_t>& w, const std::vector<std::uint8_t>& omega) {
    if (omega.empty()) return;
    while (w.size() >= omega.size() &&
           std::equal(omega.begin(), omega.end(), w.end() - omega.size())) {
        w.resize(w.size() - omega.size());
    }
}

}  // namespace

CrossCheckReport cross_check(const Presentation& p, unsigned bound,
                             const CrossCheckOptions& options) {
    CrossCheckReport report;
    report.bound = bound;

    BallClosure bc = ball_closure(p, bound);
    report.ball_size = bc.universe_size();
    report.class_count = bc.class_count();
    report.oracle_clash = bc.status() == BallClosure::Status::Clash;

    NormalizeResult norm = normalize(p);
    report.normalizer_rejects = std::holds_alternative<Violation>(norm);

    if (report.oracle_clash && !report.normalizer_rejects) {
        report.soundness_discrepancies.push_back(
            "oracle found a balance clash but the normalizer accepted the presentation");
    }
    if (report.oracle_clash || report.normalizer_rejects) return report;

    const auto& dec = std::get<Decomposition>(norm);
    const auto& gens = p.generators();

    // Per-generator image data: target factor and image word digits.
    std::vector<std::uint32_t> gen_factor(gens.size());
    std::vector<std::vector<std::uint8_t>> gen_image(gens.size());
    for (std::size_t g = 0; g < gens.size(); ++g) {
        const GeneratorImage& img = dec.assignment.images.at(gens[g].name());
        gen_factor[g] = static_cast<std::uint32_t>(img.factor);
        gen_image[g] = word_digits(img.word);
    }
    std::vector<std::vector<std::uint8_t>> factor_cycle;
    factor_cycle.reserve(dec.assignment.factors.size());
    for (const FactorInfo& f : dec.assignment.factors) {
        factor_cycle.push_back(word_digits(f.cycle));
    }

    auto image_of = [&](std::uint32_t id) {
        const Term t = bc.term(id);
        const std::size_t g = p.generator_index(t.generator());
        TermImage img;
        img.factor = gen_factor[g];
        img.word = word_digits(t.word());
        img.word.insert(img.word.end(), gen_image[g].begin(), gen_image[g].end());
        strip_cycle_suffix(img.word, factor_cycle[img.factor]);
        return img;
    };

    // Soundness: members of one oracle class must share their image.
    {
        std::map<std::uint32_t, std::pair<std::uint32_t, TermImage>> leaders;
        for (std::uint32_t id : bc.merged_terms()) {
            const std::uint32_t root = bc.find(id);
            TermImage img = image_of(id);
            auto [it, inserted] = leaders.emplace(root, std::make_pair(id, img));
            if (!inserted && !(it->second.second == img)) {
                if (report.soundness_discrepancies.size() < options.max_discrepancies) {
                    report.soundness_discrepancies.push_back(
                        "oracle merges '" + format_term(bc.term(it->second.first)) + "' and '" +
                        format_term(bc.term(id)) + "' but the decomposition separates them");
                }
            }
        }
    }

    if (!options.check_completeness) return report;

    // Completeness: equalities the decomposition declares must be visible to
    // the oracle whenever the whole witnessing chain fits the ball. Each
    // recorded derivation carries a certificate bound on its chain, and the
    // generating single-step pairs below connect every in-window pair by
    // transitivity inside the ball.
    const std::uint64_t wpg = bc.universe_size() / std::max<std::size_t>(gens.size(), 1);
    std::vector<std::uint64_t> pow(bound + 1, 1);
    for (unsigned i = 1; i <= bound; ++i) pow[i] = pow[i - 1] * p.signature().size();
    std::vector<std::uint64_t> offset(bound + 2, 0);
    for (unsigned i = 0; i <= bound; ++i) offset[i + 1] = offset[i] + pow[i];

    auto gen_index_of = [&](const std::string& name) {
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (gens[i].name() == name) return static_cast<std::uint32_t>(i);
        }
        throw std::logic_error("unknown generator in derivation record");
    };
    auto note_missed = [&](std::uint32_t ida, std::uint32_t idb) {
        if (report.completeness_discrepancies.size() < options.max_discrepancies) {
            report.completeness_discrepancies.push_back(
                "decomposition equates '" + format_term(bc.term(ida)) + "' and '" +
                format_term(bc.term(idb)) + "' inside the ball but the oracle separates them");
        }
    };

    for (const auto& m : dec.certs.merges) {
        if (m.cert > bound) continue;
        const std::uint64_t ga = gen_index_of(m.kept) * wpg;
        const std::uint64_t gb = gen_index_of(m.absorbed) * wpg;
        for (std::uint64_t code = 0; code < wpg; ++code) {
            const auto ida = static_cast<std::uint32_t>(ga + code);
            const auto idb = static_cast<std::uint32_t>(gb + code);
            if (bc.find(ida) != bc.find(idb)) note_missed(ida, idb);
        }
    }
    for (const auto& s : dec.certs.substitutions) {
        if (s.cert > bound || s.gamma.size() > bound) continue;
        const std::uint64_t gx = gen_index_of(s.eliminated) * wpg;
        const std::uint64_t gy = gen_index_of(s.target) * wpg;
        const std::size_t m = s.gamma.size();
        std::uint64_t gval = 0;
        for (std::size_t i = 0; i < m; ++i) gval = gval * p.signature().size() + s.gamma.index_at(i);
        for (unsigned len = 0; len + m <= bound; ++len) {
            for (std::uint64_t val = 0; val < pow[len]; ++val) {
                const auto ida = static_cast<std::uint32_t>(gx + offset[len] + val);
                const auto idb =
                    static_cast<std::uint32_t>(gy + offset[len + m] + val * pow[m] + gval);
                if (bc.find(ida) != bc.find(idb)) note_missed(ida, idb);
            }
        }
    }
    for (std::size_t f = 0; f < dec.assignment.factors.size(); ++f) {
        const Word& omega = dec.assignment.factors[f].cycle;
        if (omega.empty() || omega.size() > bound) continue;
        if (dec.certs.factor_cycle_cert[f] > bound) continue;
        const std::uint64_t g = gen_index_of(dec.assignment.factors[f].representative.name()) * wpg;
        const std::size_t m = omega.size();
        std::uint64_t oval = 0;
        for (std::size_t i = 0; i < m; ++i) oval = oval * p.signature().size() + omega.index_at(i);
        for (unsigned len = 0; len + m <= bound; ++len) {
            for (std::uint64_t val = 0; val < pow[len]; ++val) {
                const auto ida = static_cast<std::uint32_t>(g + offset[len] + val);
                const auto idb =
                    static_cast<std::uint32_t>(g + offset[len + m] + val * pow[m] + oval);
                if (bc.find(ida) != bc.find(idb)) note_missed(ida, idb);
            }
        }
    }
    return report;
}

std::string CrossCheckReport::to_text() const {
    std::ostringstream out;
    out << "cross-check bound: " << bound << '\n';
    out << "ball size: " << ball_size << '\n';
    out << "classes: " << class_count << '\n';
    out << "oracle: " << (oracle_clash ? "clash" : "consistent") << '\n';
    out << "normalizer: " << (normalizer_rejects ? "not semi-Peano" : "decomposition") << '\n';
    if (oracle_clash && normalizer_rejects) out << "verdict: both reject\n";
    out << "soundness discrepancies: " << soundness_discrepancies.size() << '\n';
    for (const auto& d : soundness_discrepancies) out << "  " << d << '\n';
    out << "completeness discrepancies: " << completeness_discrepancies.size() << '\n';
    for (const auto& d : completeness_discrepancies) out << "  " << d << '\n';
    out << "status: " << (consistent() ? "consistent" : "INCONSISTENT") << '\n';
    return out.str();
}

unsigned default_cross_check_bound(const Presentation& p) {
    std::size_t longest = 0;
    for (const Relation& r : p.relations()) {
        longest = std::max({longest, r.lhs.word().size(), r.rhs.word().size()});
    }
    return static_cast<unsigned>(2 * longest + 4);
}

}  // namespace spa
