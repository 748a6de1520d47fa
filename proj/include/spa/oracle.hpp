#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spa/normalizer.hpp"
#include "spa/presentation.hpp"

namespace spa {

struct BoundExceeded : std::runtime_error {
    explicit BoundExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Congruence closure over the ball of all terms of word length <= bound,
/// closed under the seed relations, the upward congruence rule
/// (u = v implies f u = f v when both fit the ball), the downward closed
/// rule (f u = f v implies u = v), and clashing on f u = g v with f != g.
///
/// The closure is a sound under-approximation of the least closed and
/// balanced congruence: every merge it performs is forced, but equalities
/// whose witnessing chains leave the ball are not found. The partition is
/// the unique least fixpoint, so it does not depend on processing order.
class BallClosure {
public:
    enum class Status { Consistent, Clash };

    Status status() const { return status_; }
    const std::optional<Violation>& violation() const { return violation_; }
    unsigned bound() const { return bound_; }
    std::uint64_t universe_size() const { return universe_; }
    std::uint64_t class_count() const { return universe_ - unions_; }

    /// Dense id of a ball term; throws BoundExceeded if the word is longer
    /// than the bound.
    std::uint32_t term_id(const Term& t) const;
    Term term(std::uint32_t id) const;
    std::uint32_t find(std::uint32_t id) const;
    bool same_class(const Term& s, const Term& t) const;

    /// Ids of every term living in a non-singleton class, sorted.
    const std::vector<std::uint32_t>& merged_terms() const { return merged_; }

    /// Ball size, class count, status and up to max_classes sample classes.
    std::string report_text(std::size_t max_classes = 20) const;

private:
    friend BallClosure ball_closure(const Presentation& p, unsigned bound);
    explicit BallClosure(const Presentation& p, unsigned bound);

    std::uint32_t prepend(std::uint32_t symbol, std::uint32_t id) const;
    void run();
    void merge_work(std::uint32_t a, std::uint32_t b);

    Presentation pres_;
    unsigned bound_;
    std::uint32_t symbol_count_;
    std::uint64_t words_per_gen_ = 0;
    std::uint64_t universe_ = 0;
    std::vector<std::uint64_t> pow_;     // symbol_count^i
    std::vector<std::uint64_t> offset_;  // number of words shorter than length i
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> size_;
    std::vector<std::int32_t> head_;      // head symbol of the class's headed members, -1 if none
    std::vector<std::uint32_t> tail_;     // tail term of one headed member (valid when head_ >= 0)
    std::vector<std::uint32_t> short_;    // a member with word length < bound, or NONE
    std::vector<std::pair<std::uint32_t, std::uint32_t>> work_;
    std::vector<std::uint32_t> merged_;
    std::uint64_t unions_ = 0;
    Status status_ = Status::Consistent;
    std::optional<Violation> violation_;
};

BallClosure ball_closure(const Presentation& p, unsigned bound);

enum class OracleAnswer { Equal, NotMergedWithin, Clash };

/// Ball-closure equality query. NotMergedWithin is inconclusive: it means no
/// witnessing chain fits the ball, not that the terms differ.
OracleAnswer oracle_equal(const Presentation& p, const Term& s, const Term& t, unsigned bound);

struct CrossCheckOptions {
    /// Also verify that equalities the decomposition declares are visible to
    /// the oracle whenever their witnessing chains fit the ball.
    bool check_completeness = true;
    std::size_t max_discrepancies = 20;
};

struct CrossCheckReport {
    unsigned bound = 0;
    std::uint64_t ball_size = 0;
    std::uint64_t class_count = 0;
    bool oracle_clash = false;
    bool normalizer_rejects = false;
    /// Soundness failures: oracle-equal terms the decomposition separates,
    /// or an oracle clash on a presentation the normalizer accepted.
    std::vector<std::string> soundness_discrepancies;
    /// Completeness failures: in-ball equalities the oracle missed.
    std::vector<std::string> completeness_discrepancies;

    bool consistent() const {
        return soundness_discrepancies.empty() && completeness_discrepancies.empty();
    }
    std::string to_text() const;
};

/// Runs normalize and ball_closure side by side and compares their verdicts.
CrossCheckReport cross_check(const Presentation& p, unsigned bound,
                             const CrossCheckOptions& options = {});

/// 2 * (longest relation word) + 4.
unsigned default_cross_check_bound(const Presentation& p);

}  // namespace spa
