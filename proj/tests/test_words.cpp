#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "spa/words.hpp"

using namespace spa;

namespace {

const Signature kFG{"f", "g"};
const Signature kFGH{"f", "g", "h"};

Word wd(const Signature& sig, const char* compact) {
    std::vector<std::uint32_t> idx;
    for (const char* c = compact; *c; ++c) idx.push_back(sig.index_of(std::string(1, *c)));
    return Word(sig, std::move(idx));
}

// Independent oracle: conjugacy by enumerating every rotation.
std::vector<Word> all_rotations(const Word& w) {
    std::vector<Word> out;
    const std::size_t n = w.size() ? w.size() : 1;
    for (std::size_t k = 0; k < n; ++k) out.push_back(w.rotated(k));
    return out;
}

bool rotations_contain(const Word& u, const Word& v) {
    for (const Word& r : all_rotations(u)) {
        if (r == v) return true;
    }
    return false;
}

Word least_rotation_oracle(const Word& w) {
    Word best = w;
    for (const Word& r : all_rotations(w)) {
        if (r < best) best = r;
    }
    return best;
}

std::vector<Word> words_up_to(const Signature& sig, std::size_t max_len) {
    std::vector<Word> out{Word(sig)};
    std::size_t start = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        const std::size_t end = out.size();
        for (std::size_t i = start; i < end; ++i) {
            for (std::uint32_t s = 0; s < sig.size(); ++s) {
                out.push_back(concat(out[i], Word(sig, std::vector<std::uint32_t>{s})));
            }
        }
        start = end;
    }
    return out;
}

Word random_word(std::mt19937& rng, const Signature& sig, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
    std::uniform_int_distribution<std::uint32_t> sym_dist(0, static_cast<std::uint32_t>(sig.size()) - 1);
    std::vector<std::uint32_t> idx(len_dist(rng));
    for (auto& i : idx) i = sym_dist(rng);
    return Word(sig, std::move(idx));
}

}  // namespace

TEST_CASE("symbols order lexicographically and signatures reject duplicates") {
    CHECK(OpSymbol("f") < OpSymbol("g"));
    CHECK(kFG.index_of("f") == 0);
    CHECK(kFG.index_of("g") == 1);
    CHECK_THROWS_AS(Signature({"f", "f"}), std::invalid_argument);
    CHECK_THROWS_AS(OpSymbol(""), std::invalid_argument);
    CHECK_THROWS_AS(OpSymbol("1f"), std::invalid_argument);
    CHECK(Signature({"g", "f"}) == kFG);
}

TEST_CASE("concat") {
    CHECK(concat(wd(kFGH, "fg"), wd(kFGH, "h")) == wd(kFGH, "fgh"));
    CHECK(concat(Word(kFGH), wd(kFGH, "fg")) == wd(kFGH, "fg"));
    CHECK(concat(wd(kFGH, "fg"), wd(kFGH, "fg")) == wd(kFGH, "fgfg"));
    CHECK(concat(wd(kFG, "fg"), wd(kFG, "fg")).size() == 4);
    CHECK_THROWS_AS(concat(wd(kFG, "f"), wd(kFGH, "f")), std::invalid_argument);
}

TEST_CASE("strip_prefix") {
    CHECK(strip_prefix(wd(kFGH, "fg"), wd(kFGH, "fgfgh")) == wd(kFGH, "fgh"));
    CHECK(strip_prefix(Word(kFG), wd(kFG, "gf")) == wd(kFG, "gf"));
    CHECK_FALSE(strip_prefix(wd(kFG, "f"), wd(kFG, "gf")).has_value());
    CHECK_FALSE(strip_prefix(wd(kFG, "ff"), wd(kFG, "f")).has_value());
}

TEST_CASE("strip_suffix") {
    CHECK(strip_suffix(wd(kFG, "fgfg"), wd(kFG, "fg")) == wd(kFG, "fg"));
    CHECK(strip_suffix(wd(kFG, "gff"), Word(kFG)) == wd(kFG, "gff"));
    CHECK_FALSE(strip_suffix(wd(kFG, "fg"), wd(kFG, "gg")).has_value());
}

TEST_CASE("longest_common_prefix") {
    CHECK(longest_common_prefix(wd(kFG, "fgf"), wd(kFG, "fgg")) == wd(kFG, "fg"));
    CHECK(longest_common_prefix(wd(kFG, "f"), wd(kFG, "g")) == Word(kFG));
    CHECK(longest_common_prefix(wd(kFG, "fg"), wd(kFG, "fgfg")) == wd(kFG, "fg"));
}

TEST_CASE("is_conjugate examples") {
    auto w = is_conjugate(wd(kFG, "fg"), wd(kFG, "gf"));
    REQUIRE(w.has_value());
    CHECK(w->alpha == wd(kFG, "f"));
    CHECK(w->beta == wd(kFG, "g"));

    // fggff vs fffgg: the rotation oracle confirms before we assert.
    CHECK(rotations_contain(wd(kFG, "fggff"), wd(kFG, "fffgg")));
    CHECK(is_conjugate(wd(kFG, "fggff"), wd(kFG, "fffgg")).has_value());

    CHECK_FALSE(rotations_contain(wd(kFG, "ffgg"), wd(kFG, "fgfg")));
    CHECK_FALSE(is_conjugate(wd(kFG, "ffgg"), wd(kFG, "fgfg")).has_value());

    auto e = is_conjugate(Word(kFG), Word(kFG));
    REQUIRE(e.has_value());
    CHECK(e->alpha.empty());
    CHECK(e->beta.empty());

    CHECK_FALSE(is_conjugate(wd(kFG, "f"), wd(kFG, "ff")).has_value());
}

TEST_CASE("canonical_rotation examples") {
    CHECK(least_rotation_oracle(wd(kFG, "fggff")) == wd(kFG, "fffgg"));
    CHECK(canonical_rotation(wd(kFG, "fggff")) == wd(kFG, "fffgg"));
    CHECK(canonical_rotation(wd(kFG, "gf")) == wd(kFG, "fg"));
    CHECK(canonical_rotation(Word(kFG)) == Word(kFG));
}

TEST_CASE("conjugacy, canonical rotation and the rotation oracle agree up to length 6") {
    const auto words = words_up_to(kFG, 6);
    std::vector<Word> canon;
    canon.reserve(words.size());
    for (const Word& w : words) canon.push_back(canonical_rotation(w));
    for (std::size_t i = 0; i < words.size(); ++i) {
        CHECK(canon[i] == least_rotation_oracle(words[i]));
        CHECK(canonical_rotation(canon[i]) == canon[i]);
        CHECK(canon[i].size() == words[i].size());
        for (std::size_t j = 0; j < words.size(); ++j) {
            const bool oracle = rotations_contain(words[i], words[j]);
            const auto witness = is_conjugate(words[i], words[j]);
            CHECK(witness.has_value() == oracle);
            CHECK((canon[i] == canon[j]) == oracle);
            if (witness) {
                CHECK(concat(witness->alpha, witness->beta) == words[i]);
                CHECK(concat(witness->beta, witness->alpha) == words[j]);
            }
        }
    }
}

TEST_CASE("strip round-trips on random words") {
    std::mt19937 rng(20240817);
    for (int round = 0; round < 2000; ++round) {
        const Signature& sig = round % 2 ? kFG : kFGH;
        Word u = random_word(rng, sig, 8);
        Word v = random_word(rng, sig, 8);
        CHECK(strip_prefix(u, concat(u, v)) == v);
        CHECK(strip_suffix(concat(u, v), v) == u);
    }
}

TEST_CASE("word parsing and rendering") {
    CHECK(wd(kFG, "fgff").str() == "f g f f");
    CHECK(Word(kFG).str() == "1");
    CHECK(Word::parse(kFG, "f g f f") == wd(kFG, "fgff"));
    CHECK(Word::parse(kFG, "1") == Word(kFG));
    CHECK(Word::parse(kFG, "  ") == Word(kFG));
    CHECK_THROWS_AS(Word::parse(kFG, "f q"), std::invalid_argument);
    CHECK_THROWS_AS(Word::parse(kFG, "1 f"), std::invalid_argument);
}

TEST_CASE("pow") {
    CHECK(pow(wd(kFG, "fg"), 3) == wd(kFG, "fgfgfg"));
    CHECK(pow(wd(kFG, "fg"), 0) == Word(kFG));
}
