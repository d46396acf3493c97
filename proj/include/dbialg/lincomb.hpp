#pragma once

// Finite linear combinations over an ordered key type. Elements of a carrier
// are LinComb<Basis>; tensors are combinations of pairs, triples, or vectors
// of basis elements.

#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "dbialg/rational.hpp"

namespace dbialg {

template <class K>
class LinComb {
  public:
    using key_type = K;
    using map_type = std::map<K, Scalar>;

    LinComb() = default;
    explicit LinComb(K k, Scalar c = Scalar(1)) { add(std::move(k), std::move(c)); }

    void add(const K& k, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /// this += c * other
    void add_scaled(const LinComb& other, const Scalar& c) {
        if (c.is_zero()) return;
        for (const auto& [k, v] : other.terms_) add(k, v * c);
    }

    Scalar coeff(const K& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const map_type& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    LinComb& operator+=(const LinComb& o) { add_scaled(o, Scalar(1)); return *this; }
    LinComb& operator-=(const LinComb& o) { add_scaled(o, Scalar(-1)); return *this; }
    LinComb& operator*=(const Scalar& s) {
        if (s.is_zero()) { terms_.clear(); return *this; }
        for (auto& [k, v] : terms_) v *= s;
        return *this;
    }
    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator*(LinComb a, const Scalar& s) { return a *= s; }
    friend LinComb operator*(const Scalar& s, LinComb a) { return a *= s; }
    LinComb operator-() const { return *this * Scalar(-1); }

    friend bool operator==(const LinComb&, const LinComb&) = default;

    /// Applies a key map and collects terms.
    template <class F>
    auto map_keys(F&& f) const {
        using K2 = std::decay_t<decltype(f(std::declval<const K&>()))>;
        LinComb<K2> r;
        for (const auto& [k, v] : terms_) r.add(f(k), v);
        return r;
    }

  private:
    map_type terms_;
};

template <class B>
using Tensor2 = LinComb<std::pair<B, B>>;
template <class B>
using Tensor3 = LinComb<std::tuple<B, B, B>>;
/// Tensor of arbitrary arity; legs are stored left to right.
template <class B>
using TensorN = LinComb<std::vector<B>>;

/// Swaps the legs of a 2-tensor.
template <class B>
Tensor2<B> flip(const Tensor2<B>& t) {
    return t.map_keys([](const std::pair<B, B>& p) { return std::pair<B, B>(p.second, p.first); });
}

}  // namespace dbialg
