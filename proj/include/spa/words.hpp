#pragma once

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace spa {

/// A named unary operation symbol. Symbols compare lexicographically by
/// name; that order is the one "least rotation" refers to everywhere.
class OpSymbol {
public:
    explicit OpSymbol(std::string name);

    const std::string& name() const { return name_; }

    friend bool operator==(const OpSymbol& a, const OpSymbol& b) { return a.name_ == b.name_; }
    friend bool operator!=(const OpSymbol& a, const OpSymbol& b) { return !(a == b); }
    friend bool operator<(const OpSymbol& a, const OpSymbol& b) { return a.name_ < b.name_; }

private:
    std::string name_;
};

/// An ordered finite set of operation symbols. Immutable; copies share the
/// underlying symbol table, so passing signatures around by value is cheap.
class Signature {
public:
    explicit Signature(std::vector<OpSymbol> symbols);
    Signature(std::initializer_list<std::string> names);

    std::size_t size() const { return symbols_->size(); }
    const OpSymbol& at(std::uint32_t index) const { return (*symbols_)[index]; }
    bool contains(const OpSymbol& s) const;
    /// Index of a symbol in the sorted table; throws std::invalid_argument
    /// if the symbol is not part of this signature.
    std::uint32_t index_of(const OpSymbol& s) const;
    std::uint32_t index_of(std::string_view name) const;

    const std::vector<OpSymbol>& symbols() const { return *symbols_; }

    friend bool operator==(const Signature& a, const Signature& b);
    friend bool operator!=(const Signature& a, const Signature& b) { return !(a == b); }

private:
    std::shared_ptr<const std::vector<OpSymbol>> symbols_;
};

/// An element of the free monoid over a signature. The leftmost letter is
/// the outermost operation: the word "f g" acts on x as f(g(x)). The empty
/// word is the monoid identity and renders as "1".
class Word {
public:
    explicit Word(Signature sig);
    Word(Signature sig, std::vector<OpSymbol> letters);
    Word(Signature sig, std::vector<std::uint32_t> letter_indices);

    /// Parses a whitespace-separated list of symbol names; "1" means the
    /// empty word.
    static Word parse(const Signature& sig, std::string_view text);

    const Signature& signature() const { return sig_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    std::uint32_t index_at(std::size_t i) const { return letters_[i]; }
    OpSymbol letter(std::size_t i) const { return sig_.at(letters_[i]); }
    const std::vector<std::uint32_t>& letter_indices() const { return letters_; }

    Word prefix(std::size_t n) const;
    Word suffix_from(std::size_t n) const;
    /// The rotation that moves the first k letters to the back.
    Word rotated(std::size_t k) const;

    std::string str() const;

    friend bool operator==(const Word& a, const Word& b);
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
    /// Shortlex: by length first, then lexicographically by symbol order.
    /// Only meaningful for words over equal signatures.
    friend bool operator<(const Word& a, const Word& b);

private:
    Signature sig_;
    std::vector<std::uint32_t> letters_;
};

/// Monoid product. Throws std::invalid_argument on a signature mismatch.
Word concat(const Word& u, const Word& v);

/// phi \ psi: the unique word with phi * (phi \ psi) = psi, or nullopt if
/// phi is not a prefix of psi.
std::optional<Word> strip_prefix(const Word& phi, const Word& psi);

/// phi / psi: the unique word with (phi / psi) * psi = phi, or nullopt if
/// psi is not a suffix of phi.
std::optional<Word> strip_suffix(const Word& phi, const Word& psi);

Word longest_common_prefix(const Word& u, const Word& v);

/// Split certifying that two words are conjugate: u = alpha * beta and
/// v = beta * alpha.
struct ConjugacyWitness {
    Word alpha;
    Word beta;
};

/// Decides conjugacy: u and v are conjugate iff they have equal length and
/// v occurs as a factor of u * u. Returns a witness split on success.
std::optional<ConjugacyWitness> is_conjugate(const Word& u, const Word& v);

/// The lexicographically least rotation of w; idempotent.
Word canonical_rotation(const Word& w);

Word pow(const Word& w, std::size_t n);

}  // namespace spa
