#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "spa/words.hpp"

namespace spa {

/// A generator of an absolutely free algebra Free(X).
class GeneratorId {
public:
    explicit GeneratorId(std::string name);

    const std::string& name() const { return name_; }

    friend bool operator==(const GeneratorId& a, const GeneratorId& b) { return a.name_ == b.name_; }
    friend bool operator!=(const GeneratorId& a, const GeneratorId& b) { return !(a == b); }
    friend bool operator<(const GeneratorId& a, const GeneratorId& b) { return a.name_ < b.name_; }

private:
    std::string name_;
};

/// An element word(generator) of Free(X). Free(X) is absolutely free, so
/// two terms denote the same element iff they are componentwise equal.
class Term {
public:
    Term(Word word, GeneratorId generator);

    const Word& word() const { return word_; }
    const GeneratorId& generator() const { return gen_; }

    friend bool operator==(const Term& a, const Term& b) {
        return a.word_ == b.word_ && a.gen_ == b.gen_;
    }
    friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

private:
    Word word_;
    GeneratorId gen_;
};

struct Relation {
    Term lhs;
    Term rhs;
};

/// A finite presentation: a signature, an ordered set of generators and a
/// list of ground relations over Free(generators).
class Presentation {
public:
    Presentation(Signature signature, std::vector<GeneratorId> generators,
                 std::vector<Relation> relations);

    const Signature& signature() const { return sig_; }
    const std::vector<GeneratorId>& generators() const { return gens_; }
    const std::vector<Relation>& relations() const { return rels_; }

    bool has_generator(std::string_view name) const;
    std::size_t generator_index(const GeneratorId& g) const;

private:
    Signature sig_;
    std::vector<GeneratorId> gens_;
    std::vector<Relation> rels_;
};

struct ParseError : std::runtime_error {
    ParseError(int line, int column, const std::string& message);
    int line;
    int column;
};

/// Reads the presentation file format:
///
///   # comment to end of line
///   ops f g          declares operation symbols (cumulative)
///   gens c d         declares generators (cumulative)
///   rel c = f g c    adds a relation; a term is op names ending in a generator
///
/// Blank lines are ignored and declarations must precede use.
Presentation parse_presentation(std::string_view text);

/// Parses a term ("f g c") against already-declared symbols and generators.
Term parse_term(std::string_view text, const Presentation& p);

std::string format_term(const Term& t);
std::string format_presentation(const Presentation& p);

}  // namespace spa
