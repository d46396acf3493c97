#pragma once

// Morphisms to K[X] and QSym: Phi_lambda, Psi_mu, the unique double bialgebra
// morphism Phi (chromatic polynomial on graphs), the infinitesimal character
// phi, and the Aguiar-Bergeron-Sottile morphism to QSym.

#include <map>
#include <string>

#include "dbialg/engine.hpp"
#include "dbialg/graph.hpp"
#include "dbialg/poly.hpp"
#include "dbialg/word.hpp"

namespace dbialg {

/// Phi_lambda(x) = sum_k lambda^{⊗k}∘reduced^{(k-1)}(x) H_k(X)
template <class C>
typename Engine<C>::PolyMap phi_lambda(const Engine<C>& e, const typename Engine<C>::Form& lambda) {
    if (lambda(e.carrier().unit()) != Scalar(1)) throw PreconditionError("Phi_lambda needs lambda(1) = 1");
    return e.template make<Poly>([&e, lambda](const typename C::Basis& b) {
        Poly r;
        for (int k = 0; k <= e.grade(b); ++k) {
            const Scalar v = e.tensor_power(lambda, b, k);
            if (!v.is_zero()) r += hilbert(k) * v;
        }
        return r;
    });
}

/// Psi_mu(x) = sum_k mu^{⊗k}∘reduced^{(k-1)}(x) X^k/k!
template <class C>
typename Engine<C>::PolyMap psi_mu(const Engine<C>& e, const typename Engine<C>::Form& mu) {
    if (!mu(e.carrier().unit()).is_zero()) throw PreconditionError("Psi_mu needs mu(1) = 0");
    return e.template make<Poly>([&e, mu](const typename C::Basis& b) {
        Poly r;
        for (int k = 0; k <= e.grade(b); ++k) {
            const Scalar v = e.tensor_power(mu, b, k);
            if (!v.is_zero()) r += Poly::monomial(k, v / factorial(k));
        }
        return r;
    });
}

/// The unique double bialgebra morphism to K[X].
template <class C>
typename Engine<C>::PolyMap unique_Phi(const Engine<C>& e) {
    return phi_lambda(e, e.counit_delta());
}

/// phi(x) = Phi(x)'(0)
template <class C>
typename Engine<C>::Form phi_inf(const Engine<C>& e) {
    auto big_phi = unique_Phi(e);
    return e.form([big_phi](const typename C::Basis& b) { return big_phi(b).coeff(1); });
}

/// lambda -> Phi <- lambda
template <class C>
typename Engine<C>::PolyMap character_to_polymorphism(const Engine<C>& e, const typename Engine<C>::Form& lambda) {
    return e.coaction(unique_Phi(e), lambda);
}

/// Psi -> eps_delta∘Psi, i.e. evaluation at X = 1.
template <class C>
typename Engine<C>::Form polymorphism_to_character(const Engine<C>& e, const typename Engine<C>::PolyMap& psi) {
    return e.form([psi](const typename C::Basis& b) { return psi(b).eval(Scalar(1)); });
}

template <class C>
struct HomogeneousPsi {
    typename Engine<C>::PolyMap map;
    /// True when mu vanishes outside grade 1 up to the engine cap.
    bool homogeneous;
};

template <class C>
HomogeneousPsi<C> homogeneous_psi(const Engine<C>& e, const typename Engine<C>::Form& mu) {
    bool grade_one = true;
    for (const auto& b : e.basis_upto(e.cap()))
        if (e.grade(b) != 1 && !mu(b).is_zero()) {
            grade_one = false;
            break;
        }
    return {psi_mu(e, mu), grade_one};
}

/// x -> sum over reduced^{(n-1)}(x) = x1⊗...⊗xn of lambda(x1)...lambda(xn)
/// times the composition (grade(x1),...,grade(xn)).
template <class C>
LinearMap<typename C::Basis, WordElem> abs_qsym(const Engine<C>& e, const typename Engine<C>::Form& lambda) {
    if (lambda(e.carrier().unit()) != Scalar(1)) throw PreconditionError("the QSym morphism needs lambda(1) = 1");
    return e.template make<WordElem>([&e, lambda](const typename C::Basis& b) {
        WordElem r;
        if (e.grade(b) == 0) {
            r.add(Word{}, Scalar(1));
            return r;
        }
        for (int k = 1; k <= e.grade(b); ++k)
            for (const auto& [legs, c] : e.reduced_iter(b, k - 1)) {
                Scalar v = c;
                Word comp;
                for (const auto& leg : legs) {
                    v *= lambda(leg);
                    if (v.is_zero()) break;
                    comp.push_back(e.grade(leg));
                }
                if (!v.is_zero()) r.add(comp, v);
            }
        return r;
    });
}

/// Phi_QSym: a composition of length n goes to H_n(X).
Poly qsym_to_poly(const WordElem& x);

// ---- graph-specific ---------------------------------------------------------

/// Deletion-contraction, always on the lexicographically smallest canonical
/// edge; memoized on canonical forms. Thread-safe.
Poly chromatic_dc(const Graph& g);

/// A character on graphs from its values on connected graphs.
Engine<GraphCarrier>::Form graph_character(const Engine<GraphCarrier>& e,
                                           std::function<Scalar(const Graph&)> on_connected);

/// The ⋆-inverse of a character with lambda(•) != 0, by recursion on the
/// number of edges.
Engine<GraphCarrier>::Form circ_inverse(const Engine<GraphCarrier>& e, const Engine<GraphCarrier>::Form& lambda);

struct Hypothesis3Report {
    WordElem phi_k2;
    /// delta_QSym(Phi(K2))
    Tensor2<Word> delta_of_phi;
    /// (Phi⊗Phi)(delta(K2))
    Tensor2<Word> phi_of_delta;
    Tensor2<Word> difference;
    bool differs() const { return !difference.is_zero(); }
};

/// Shows that the homogeneous morphism H_G -> QSym attached to eps_delta does
/// not intertwine the internal coproducts, using K2.
Hypothesis3Report hypothesis3_witness();

}  // namespace dbialg
