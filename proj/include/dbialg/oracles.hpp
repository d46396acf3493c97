#pragma once

// Brute-force reference computations. Nothing here goes through the carrier
// memo tables or the convolution engine; graphs are only canonicalized to
// name the results.

#include <cstdint>
#include <functional>

#include "dbialg/graph.hpp"
#include "dbialg/poly.hpp"
#include "dbialg/word.hpp"

namespace dbialg::oracle {

/// Proper colorings V -> [k] (OpenMP-parallel; the serial one is the reference).
std::uint64_t count_proper_colorings(const Graph& g, int k);
std::uint64_t count_proper_colorings_serial(const Graph& g, int k);

/// sum over packed valid colorations f of H_{max f}
Poly packed_valid_expansion(const Graph& g);

/// Chromatic polynomial by Lagrange interpolation of coloring counts at 0..n.
Poly chromatic_by_interpolation(const Graph& g);

/// Subset coproduct and contraction-restriction coproduct, expanded directly
/// on labeled vertex sets.
Tensor2<Graph> graph_Delta(const Graph& g);
Tensor2<Graph> graph_delta(const Graph& g);

/// k-fold iterated reduced subset coproduct: one term per ordered partition
/// of V into k+1 nonempty blocks.
TensorN<Graph> graph_reduced_iter(const Graph& g, int k);

/// Quasishuffle by the recursion
/// au ⧢ bv = a(u ⧢ bv) + b(au ⧢ v) + (a+b)(u ⧢ v).
WordElem quasishuffle_rec(const Word& x, const Word& y, const Semigroup& sg);
/// Internal coproduct from block decompositions, using quasishuffle_rec.
Tensor2<Word> word_delta(const Word& w, const Semigroup& sg);

/// sum_{a⊗b} c f(a) g(b) for an explicitly expanded coproduct.
template <class B>
Scalar convolution_by_definition(const std::function<Scalar(const B&)>& f, const std::function<Scalar(const B&)>& g,
                                 const Tensor2<B>& coproduct) {
    Scalar s(0);
    for (const auto& [ab, c] : coproduct) s += f(ab.first) * g(ab.second) * c;
    return s;
}

}  // namespace dbialg::oracle
