#include "spa/words.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace spa {

namespace {

bool valid_identifier(std::string_view s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    }
    return true;
}

}  // namespace

OpSymbol::OpSymbol(std::string name) : name_(std::move(name)) {
    if (!valid_identifier(name_)) {
        throw std::invalid_argument("invalid operation symbol name: '" + name_ + "'");
    }
}

Signature::Signature(std::vector<OpSymbol> symbols) {
    std::sort(symbols.begin(), symbols.end());
    for (std::size_t i = 1; i < symbols.size(); ++i) {
        if (symbols[i] == symbols[i - 1]) {
            throw std::invalid_argument("duplicate operation symbol: '" + symbols[i].name() + "'");
        }
    }
    symbols_ = std::make_shared<const std::vector<OpSymbol>>(std::move(symbols));
}

Signature::Signature(std::initializer_list<std::string> names) {
    std::vector<OpSymbol> symbols;
    symbols.reserve(names.size());
    for (const auto& n : names) symbols.emplace_back(n);
    *this = Signature(std::move(symbols));
}

bool Signature::contains(const OpSymbol& s) const {
    return std::binary_search(symbols_->begin(), symbols_->end(), s);
}

std::uint32_t Signature::index_of(const OpSymbol& s) const {
    auto it = std::lower_bound(symbols_->begin(), symbols_->end(), s);
    if (it == symbols_->end() || *it != s) {
        throw std::invalid_argument("symbol '" + s.name() + "' is not in the signature");
    }
    return static_cast<std::uint32_t>(it - symbols_->begin());
}

std::uint32_t Signature::index_of(std::string_view name) const {
    return index_of(OpSymbol(std::string(name)));
}

bool operator==(const Signature& a, const Signature& b) {
    if (a.symbols_ == b.symbols_) return true;
    return *a.symbols_ == *b.symbols_;
}

Word::Word(Signature sig) : sig_(std::move(sig)) {}

Word::Word(Signature sig, std::vector<OpSymbol> letters) : sig_(std::move(sig)) {
    letters_.reserve(letters.size());
    for (const auto& s : letters) letters_.push_back(sig_.index_of(s));
}

Word::Word(Signature sig, std::vector<std::uint32_t> letter_indices)
    : sig_(std::move(sig)), letters_(std::move(letter_indices)) {
    for (auto i : letters_) {
        if (i >= sig_.size()) throw std::invalid_argument("letter index out of range");
    }
}

Word Word::parse(const Signature& sig, std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<std::uint32_t> letters;
    std::string tok;
    bool saw_one = false;
    while (in >> tok) {
        if (tok == "1") {
            saw_one = true;
            continue;
        }
        letters.push_back(sig.index_of(tok));
    }
    if (saw_one && !letters.empty()) {
        throw std::invalid_argument("'1' cannot be mixed with symbols in a word");
    }
    return Word(sig, std::move(letters));
}

Word Word::prefix(std::size_t n) const {
    return Word(sig_, std::vector<std::uint32_t>(letters_.begin(), letters_.begin() + n));
}

Word Word::suffix_from(std::size_t n) const {
    return Word(sig_, std::vector<std::uint32_t>(letters_.begin() + n, letters_.end()));
}

Word Word::rotated(std::size_t k) const {
    if (letters_.empty()) return *this;
    k %= letters_.size();
    std::vector<std::uint32_t> out(letters_.begin() + k, letters_.end());
    out.insert(out.end(), letters_.begin(), letters_.begin() + k);
    return Word(sig_, std::move(out));
}

std::string Word::str() const {
    if (letters_.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) out += ' ';
        out += sig_.at(letters_[i]).name();
    }
    return out;
}

bool operator==(const Word& a, const Word& b) {
    return a.sig_ == b.sig_ && a.letters_ == b.letters_;
}

bool operator<(const Word& a, const Word& b) {
    if (a.letters_.size() != b.letters_.size()) return a.letters_.size() < b.letters_.size();
    return a.letters_ < b.letters_;
}

Word concat(const Word& u, const Word& v) {
    if (u.signature() != v.signature()) {
        throw std::invalid_argument("cannot concatenate words over different signatures");
    }
    std::vector<std::uint32_t> out = u.letter_indices();
    out.insert(out.end(), v.letter_indices().begin(), v.letter_indices().end());
    return Word(u.signature(), std::move(out));
}

std::optional<Word> strip_prefix(const Word& phi, const Word& psi) {
    if (phi.signature() != psi.signature()) {
        throw std::invalid_argument("words over different signatures");
    }
    if (phi.size() > psi.size()) return std::nullopt;
    for (std::size_t i = 0; i < phi.size(); ++i) {
        if (phi.index_at(i) != psi.index_at(i)) return std::nullopt;
    }
    return psi.suffix_from(phi.size());
}

std::optional<Word> strip_suffix(const Word& phi, const Word& psi) {
    if (phi.signature() != psi.signature()) {
        throw std::invalid_argument("words over different signatures");
    }
    if (psi.size() > phi.size()) return std::nullopt;
    const std::size_t cut = phi.size() - psi.size();
    for (std::size_t i = 0; i < psi.size(); ++i) {
        if (phi.index_at(cut + i) != psi.index_at(i)) return std::nullopt;
    }
    return phi.prefix(cut);
}

Word longest_common_prefix(const Word& u, const Word& v) {
    if (u.signature() != v.signature()) {
        throw std::invalid_argument("words over different signatures");
    }
    std::size_t n = 0;
    const std::size_t limit = std::min(u.size(), v.size());
    while (n < limit && u.index_at(n) == v.index_at(n)) ++n;
    return u.prefix(n);
}

std::optional<ConjugacyWitness> is_conjugate(const Word& u, const Word& v) {
    if (u.signature() != v.signature()) {
        throw std::invalid_argument("words over different signatures");
    }
    if (u.size() != v.size()) return std::nullopt;
    const std::size_t n = u.size();
    if (n == 0) return ConjugacyWitness{u, u};
    // v must occur as a factor of u*u; an occurrence at offset i yields the
    // split u = alpha beta, v = beta alpha with |alpha| = i.
    for (std::size_t i = 0; i < n; ++i) {
        bool match = true;
        for (std::size_t j = 0; j < n; ++j) {
            if (u.index_at((i + j) % n) != v.index_at(j)) {
                match = false;
                break;
            }
        }
        if (match) return ConjugacyWitness{u.prefix(i), u.suffix_from(i)};
    }
    return std::nullopt;
}

Word canonical_rotation(const Word& w) {
    Word best = w;
    for (std::size_t k = 1; k < w.size(); ++k) {
        Word r = w.rotated(k);
        if (r < best) best = r;
    }
    return best;
}

Word pow(const Word& w, std::size_t n) {
    std::vector<std::uint32_t> out;
    out.reserve(w.size() * n);
    for (std::size_t i = 0; i < n; ++i) {
        out.insert(out.end(), w.letter_indices().begin(), w.letter_indices().end());
    }
    return Word(w.signature(), std::move(out));
}

}  // namespace spa
