#include "spa/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

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

struct Token {
    std::string text;
    int column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (line[i] == '=') {
            ++i;
        } else {
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
                   line[i] != '=') {
                ++i;
            }
        }
        out.push_back({std::string(line.substr(start, i - start)), static_cast<int>(start) + 1});
    }
    return out;
}

}  // namespace

GeneratorId::GeneratorId(std::string name) : name_(std::move(name)) {
    if (!valid_identifier(name_)) {
        throw std::invalid_argument("invalid generator name: '" + name_ + "'");
    }
}

Term::Term(Word word, GeneratorId generator)
    : word_(std::move(word)), gen_(std::move(generator)) {}

Presentation::Presentation(Signature signature, std::vector<GeneratorId> generators,
                           std::vector<Relation> relations)
    : sig_(std::move(signature)), gens_(std::move(generators)), rels_(std::move(relations)) {
    std::set<std::string> seen;
    for (const auto& g : gens_) {
        if (!seen.insert(g.name()).second) {
            throw std::invalid_argument("duplicate generator: '" + g.name() + "'");
        }
        for (const auto& s : sig_.symbols()) {
            if (s.name() == g.name()) {
                throw std::invalid_argument("name '" + g.name() +
                                            "' used both as symbol and generator");
            }
        }
    }
    for (const auto& r : rels_) {
        for (const Term* t : {&r.lhs, &r.rhs}) {
            if (t->word().signature() != sig_) {
                throw std::invalid_argument("relation term over a foreign signature");
            }
            if (!has_generator(t->generator().name())) {
                throw std::invalid_argument("relation references undeclared generator '" +
                                            t->generator().name() + "'");
            }
        }
    }
}

bool Presentation::has_generator(std::string_view name) const {
    return std::any_of(gens_.begin(), gens_.end(),
                       [&](const GeneratorId& g) { return g.name() == name; });
}

std::size_t Presentation::generator_index(const GeneratorId& g) const {
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (gens_[i] == g) return i;
    }
    throw std::invalid_argument("generator '" + g.name() + "' is not declared");
}

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      line(line),
      column(column) {}

namespace {

struct ParserState {
    std::vector<OpSymbol> ops;
    std::vector<GeneratorId> gens;
    // Names declared after a 'rel' line must not validate that line, so
    // lookups are bounded by a watermark taken when the line was read.
    std::size_t op_limit = 0;
    std::size_t gen_limit = 0;

    bool is_op(const std::string& name) const {
        return std::any_of(ops.begin(), ops.begin() + op_limit,
                           [&](const OpSymbol& s) { return s.name() == name; });
    }
    bool is_gen(const std::string& name) const {
        return std::any_of(gens.begin(), gens.begin() + gen_limit,
                           [&](const GeneratorId& g) { return g.name() == name; });
    }
};

Term parse_term_tokens(const ParserState& st, const Signature& sig,
                       const std::vector<Token>& toks, std::size_t begin, std::size_t end,
                       int line) {
    if (begin == end) throw ParseError(line, 1, "empty term");
    std::vector<std::uint32_t> letters;
    for (std::size_t i = begin; i + 1 < end; ++i) {
        const Token& t = toks[i];
        if (st.is_gen(t.text)) {
            throw ParseError(line, t.column,
                             "generator '" + t.text + "' may only end a term");
        }
        if (!st.is_op(t.text)) {
            throw ParseError(line, t.column, "unknown symbol '" + t.text + "'");
        }
        letters.push_back(sig.index_of(t.text));
    }
    const Token& last = toks[end - 1];
    if (!st.is_gen(last.text)) {
        if (st.is_op(last.text)) {
            throw ParseError(line, last.column,
                             "term must end in a generator, got symbol '" + last.text + "'");
        }
        throw ParseError(line, last.column, "unknown symbol '" + last.text + "'");
    }
    return Term(Word(sig, std::move(letters)), GeneratorId(last.text));
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
    ParserState st;
    struct RawRelation {
        std::vector<Token> toks;
        std::size_t eq;
        int line;
        std::size_t op_limit;
        std::size_t gen_limit;
    };
    std::vector<RawRelation> raw_rels;

    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string& directive = toks[0].text;
        if (directive == "ops" || directive == "gens") {
            if (toks.size() == 1) {
                throw ParseError(lineno, toks[0].column, "'" + directive + "' needs at least one name");
            }
            for (std::size_t i = 1; i < toks.size(); ++i) {
                const Token& t = toks[i];
                if (!valid_identifier(t.text)) {
                    throw ParseError(lineno, t.column, "invalid name '" + t.text + "'");
                }
                if (st.is_op(t.text) || st.is_gen(t.text)) {
                    throw ParseError(lineno, t.column, "duplicate declaration of '" + t.text + "'");
                }
                if (directive == "ops") {
                    st.ops.emplace_back(t.text);
                    st.op_limit = st.ops.size();
                } else {
                    st.gens.emplace_back(t.text);
                    st.gen_limit = st.gens.size();
                }
            }
        } else if (directive == "rel") {
            std::size_t eq = 0;
            int eq_count = 0;
            for (std::size_t i = 1; i < toks.size(); ++i) {
                if (toks[i].text == "=") {
                    eq = i;
                    ++eq_count;
                }
            }
            if (eq_count != 1) {
                throw ParseError(lineno, toks[0].column,
                                 "'rel' needs exactly one '=' between two terms");
            }
            raw_rels.push_back({std::move(toks), eq, lineno, st.ops.size(), st.gens.size()});
        } else {
            throw ParseError(lineno, toks[0].column, "unknown directive '" + directive + "'");
        }
    }

    Signature sig(st.ops);
    std::vector<Relation> rels;
    rels.reserve(raw_rels.size());
    for (const auto& rr : raw_rels) {
        st.op_limit = rr.op_limit;
        st.gen_limit = rr.gen_limit;
        Term lhs = parse_term_tokens(st, sig, rr.toks, 1, rr.eq, rr.line);
        Term rhs = parse_term_tokens(st, sig, rr.toks, rr.eq + 1, rr.toks.size(), rr.line);
        rels.push_back({std::move(lhs), std::move(rhs)});
    }
    return Presentation(sig, std::move(st.gens), std::move(rels));
}

Term parse_term(std::string_view text, const Presentation& p) {
    ParserState st;
    st.ops = p.signature().symbols();
    st.gens = p.generators();
    st.op_limit = st.ops.size();
    st.gen_limit = st.gens.size();
    auto toks = tokenize(text);
    return parse_term_tokens(st, p.signature(), toks, 0, toks.size(), 1);
}

std::string format_term(const Term& t) {
    if (t.word().empty()) return t.generator().name();
    return t.word().str() + " " + t.generator().name();
}

std::string format_presentation(const Presentation& p) {
    std::ostringstream out;
    if (p.signature().size() > 0) {
        out << "ops";
        for (const auto& s : p.signature().symbols()) out << ' ' << s.name();
        out << '\n';
    }
    if (!p.generators().empty()) {
        out << "gens";
        for (const auto& g : p.generators()) out << ' ' << g.name();
        out << '\n';
    }
    for (const auto& r : p.relations()) {
        out << "rel " << format_term(r.lhs) << " = " << format_term(r.rhs) << '\n';
    }
    return out.str();
}

}  // namespace spa
