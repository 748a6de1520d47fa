#include "spa/cyclic.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace spa {

CyclicAlgebra::CyclicAlgebra(Signature signature, Word omega)
    : sig_(std::move(signature)), omega_(std::move(omega)) {
    if (omega_.signature() != sig_) {
        throw std::invalid_argument("omega is not a word over the algebra's signature");
    }
}

Word canonicalize(const CyclicAlgebra& a, Word w) {
    if (a.omega().empty()) return w;
    while (true) {
        auto stripped = strip_suffix(w, a.omega());
        if (!stripped) return w;
        w = std::move(*stripped);
    }
}

bool equal(const CyclicAlgebra& a, const Word& u, const Word& v) {
    return canonicalize(a, u) == canonicalize(a, v);
}

Element::Element(CyclicAlgebra algebra, Word rep)
    : algebra_(std::move(algebra)), rep_(canonicalize(algebra_, std::move(rep))) {}

Element apply(const CyclicAlgebra& a, const OpSymbol& f, const Element& x) {
    if (!a.signature().contains(f)) {
        throw std::invalid_argument("unknown symbol '" + f.name() + "'");
    }
    if (x.algebra() != a) {
        throw std::invalid_argument("element does not belong to this algebra");
    }
    Word image = concat(Word(a.signature(), std::vector<OpSymbol>{f}), x.rep());
    return Element(a, std::move(image));
}

Element generator(const CyclicAlgebra& a) { return Element(a, Word(a.signature())); }

bool on_cycle(const CyclicAlgebra& a, const Element& x) {
    if (a.is_free()) throw FreeAlgebraHasNoCycle();
    if (x.rep().size() >= a.omega().size()) return false;
    return strip_suffix(a.omega(), x.rep()).has_value();
}

bool subalgebra_is_free(const CyclicAlgebra& a, const Element& x) {
    if (a.is_free()) return true;
    return !on_cycle(a, x);
}

bool is_fixed_by(const CyclicAlgebra& a, const Word& chi, const Element& x) {
    return equal(a, concat(chi, x.rep()), x.rep());
}

Isomorphism::Isomorphism(CyclicAlgebra source, CyclicAlgebra target, IsoWitness witness)
    : source_(std::move(source)), target_(std::move(target)), witness_(std::move(witness)) {
    if (concat(witness_.beta, witness_.alpha) != source_.omega() ||
        concat(witness_.alpha, witness_.beta) != target_.omega()) {
        throw std::invalid_argument(
            "witness does not split the cycle words: need beta*alpha = source omega "
            "and alpha*beta = target omega");
    }
}

Element Isomorphism::operator()(const Element& x) const {
    if (x.algebra() != source_) {
        throw std::invalid_argument("element does not belong to the source algebra");
    }
    return Element(target_, concat(x.rep(), witness_.beta));
}

Isomorphism iso(CyclicAlgebra source, CyclicAlgebra target, IsoWitness witness) {
    return Isomorphism(std::move(source), std::move(target), std::move(witness));
}

Element epi_power(const Word& omega, unsigned p, unsigned q, const Element& x) {
    if (q < 1 || p < q || p % q != 0) {
        throw std::invalid_argument("epi_power needs p >= q >= 1 with q dividing p");
    }
    CyclicAlgebra source(omega.signature(), pow(omega, p));
    if (x.algebra() != source) {
        throw std::invalid_argument("element does not belong to P/omega^p");
    }
    CyclicAlgebra target(omega.signature(), pow(omega, q));
    return Element(target, x.rep());
}

namespace {

std::string node_id(const Word& rep) {
    if (rep.empty()) return "GEN";
    std::string out;
    for (std::size_t i = 0; i < rep.size(); ++i) {
        if (i) out += '_';
        out += rep.letter(i).name();
    }
    return out;
}

std::string compact(const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) out += w.letter(i).name();
    return out;
}

}  // namespace

std::string graph_dot(const CyclicAlgebra& a, std::size_t depth) {
    if (depth < a.omega().size()) {
        throw std::invalid_argument("graph depth must be at least |omega|");
    }
    const Signature& sig = a.signature();

    // All canonical representatives up to the requested length, generated in
    // (length, lex) order so the output is byte-stable.
    std::vector<Word> vertices;
    std::vector<Word> current{Word(sig)};
    vertices.push_back(current.front());
    for (std::size_t len = 1; len <= depth; ++len) {
        std::vector<Word> next;
        for (const Word& w : current) {
            for (std::uint32_t s = 0; s < sig.size(); ++s) {
                Word longer = concat(w, Word(sig, std::vector<std::uint32_t>{s}));
                next.push_back(std::move(longer));
            }
        }
        std::sort(next.begin(), next.end());
        for (const Word& w : next) {
            if (a.is_free() || !strip_suffix(w, a.omega()).has_value()) {
                vertices.push_back(w);
            }
        }
        current = std::move(next);
    }
    // Words ending in omega are not canonical, but they still extend to
    // longer canonical words, so `current` keeps every word of each length.

    std::ostringstream out;
    out << "digraph \"P/" << compact(a.omega()) << "\" {\n";
    for (const Word& v : vertices) {
        out << "  \"" << node_id(v) << "\" [label=\"" << v.str() << "\"";
        if (v.size() == depth) out << ", peripheries=2";
        out << "];\n";
    }
    for (const Word& v : vertices) {
        Element x(a, v);
        for (std::uint32_t s = 0; s < sig.size(); ++s) {
            Element y = apply(a, sig.at(s), x);
            if (y.rep().size() <= depth) {
                out << "  \"" << node_id(v) << "\" -> \"" << node_id(y.rep()) << "\" [label=\""
                    << sig.at(s).name() << "\"];\n";
            }
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace spa
