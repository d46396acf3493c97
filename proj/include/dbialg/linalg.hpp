#pragma once

// Exact linear algebra for primitive-element computations.

#include <map>
#include <vector>

#include "dbialg/engine.hpp"

namespace dbialg {

using Matrix = std::vector<std::vector<Scalar>>;

/// Basis of {v : M v = 0} for a rows x cols matrix, by Gaussian elimination
/// over the rationals.
std::vector<std::vector<Scalar>> nullspace(Matrix m, std::size_t cols);

/// A basis of the primitive elements (kernel of the reduced coproduct) among
/// the grade-n basis elements.
template <class C>
std::vector<LinComb<typename C::Basis>> primitive_basis(const Engine<C>& e, int n) {
    using B = typename C::Basis;
    const std::vector<B> basis = e.carrier().basis(n);
    std::map<std::pair<B, B>, std::size_t> row_of;
    std::vector<Tensor2<B>> images;
    for (const B& b : basis) {
        images.push_back(e.reduced_coproduct(b));
        for (const auto& [xy, c] : images.back()) row_of.try_emplace(xy, row_of.size());
    }
    Matrix m(row_of.size(), std::vector<Scalar>(basis.size()));
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (const auto& [xy, c] : images[j]) m[row_of.at(xy)][j] = c;
    std::vector<LinComb<B>> out;
    for (const auto& v : nullspace(std::move(m), basis.size())) {
        LinComb<B> x;
        for (std::size_t j = 0; j < v.size(); ++j) x.add(basis[j], v[j]);
        out.push_back(std::move(x));
    }
    return out;
}

}  // namespace dbialg
