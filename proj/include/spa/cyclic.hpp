#pragma once

#include <stdexcept>
#include <string>

#include "spa/words.hpp"

namespace spa {

/// The cyclic algebra P/omega: the free mono-generated algebra over a
/// signature, divided by the single relation a = omega(a) on its canonical
/// generator a. omega = 1 gives the free algebra itself.
///
/// The handle anchors the generator of omega as written; rotating omega
/// moves the anchor, which is why isomorphisms between conjugate handles
/// take an explicit witness instead of canonicalizing internally.
class CyclicAlgebra {
public:
    CyclicAlgebra(Signature signature, Word omega);

    const Signature& signature() const { return sig_; }
    const Word& omega() const { return omega_; }
    bool is_free() const { return omega_.empty(); }

    friend bool operator==(const CyclicAlgebra& a, const CyclicAlgebra& b) {
        return a.sig_ == b.sig_ && a.omega_ == b.omega_;
    }
    friend bool operator!=(const CyclicAlgebra& a, const CyclicAlgebra& b) { return !(a == b); }

private:
    Signature sig_;
    Word omega_;
};

/// Greedily strips omega from the right of w until it no longer ends with
/// omega. The result is the shortest word in w's equality class, which is
/// {rep omega^n : n >= 0}.
Word canonicalize(const CyclicAlgebra& a, Word w);

/// Word problem in P/omega: do u(a) and v(a) denote the same element?
bool equal(const CyclicAlgebra& a, const Word& u, const Word& v);

/// An element of P/omega, held by its canonical representative.
class Element {
public:
    Element(CyclicAlgebra algebra, Word rep);

    const CyclicAlgebra& algebra() const { return algebra_; }
    const Word& rep() const { return rep_; }

    friend bool operator==(const Element& a, const Element& b) {
        return a.algebra_ == b.algebra_ && a.rep_ == b.rep_;
    }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }
    /// Orders by representative (shortlex); elements must share an algebra.
    friend bool operator<(const Element& a, const Element& b) { return a.rep_ < b.rep_; }

private:
    CyclicAlgebra algebra_;
    Word rep_;
};

Element apply(const CyclicAlgebra& a, const OpSymbol& f, const Element& x);
Element generator(const CyclicAlgebra& a);

struct FreeAlgebraHasNoCycle : std::logic_error {
    FreeAlgebraHasNoCycle() : std::logic_error("P/1 is free and has no cycle") {}
};

/// True iff x lies on the unique cycle of P/omega, i.e. its representative
/// is a proper suffix of omega. Throws FreeAlgebraHasNoCycle when omega = 1.
bool on_cycle(const CyclicAlgebra& a, const Element& x);

/// The subalgebra generated by x is absolutely free iff no non-empty word
/// fixes x; for omega != 1 that is exactly "x is not on the cycle".
bool subalgebra_is_free(const CyclicAlgebra& a, const Element& x);

bool is_fixed_by(const CyclicAlgebra& a, const Word& chi, const Element& x);

/// Certificate for an isomorphism P/(beta alpha) -> P/(alpha beta).
struct IsoWitness {
    Word alpha;
    Word beta;
};

/// The isomorphism Phi(rep(a)) = (rep beta)(b) between conjugate cyclic
/// algebras, built from a witness with beta alpha = source omega and
/// alpha beta = target omega.
class Isomorphism {
public:
    Isomorphism(CyclicAlgebra source, CyclicAlgebra target, IsoWitness witness);

    const CyclicAlgebra& source() const { return source_; }
    const CyclicAlgebra& target() const { return target_; }
    const IsoWitness& witness() const { return witness_; }

    Element operator()(const Element& x) const;

private:
    CyclicAlgebra source_;
    CyclicAlgebra target_;
    IsoWitness witness_;
};

Isomorphism iso(CyclicAlgebra source, CyclicAlgebra target, IsoWitness witness);

/// The quotient map P/omega^p -> P/omega^q for q dividing p; surjective and
/// operation-preserving. Throws std::invalid_argument unless q >= 1 divides p
/// and x lives in P/omega^p.
Element epi_power(const Word& omega, unsigned p, unsigned q, const Element& x);

/// DOT rendering of the ball of elements with representatives of length at
/// most depth. Vertices are listed by (length, lex); edges x -f-> apply(f,x)
/// appear whenever the target also fits the ball. Boundary vertices (length
/// exactly depth) get peripheries=2 since their out-edges are truncated.
/// Requires depth >= |omega|.
std::string graph_dot(const CyclicAlgebra& a, std::size_t depth);

}  // namespace spa
