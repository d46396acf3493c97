#pragma once

// Exhaustive checks of the double bialgebra axioms on a carrier, up to a
// grade bound.
//
// The iterated tensors get large (three-fold δ on words of length 5 runs to a
// few hundred thousand terms), so the checks run on interned basis ids with
// machine-integer coefficients. Every carrier in the library has integer
// structure constants; a fractional one is reported as an error rather than
// silently rounded.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "dbialg/engine.hpp"

namespace dbialg {

struct AxiomResult {
    std::string name;
    bool passed = true;
    long checked = 0;
    /// Rendering of the first failing input, if any.
    std::string counterexample;
};

namespace detail {

/// m_{13,24} on Tensor2 with the carrier product.
template <class C>
Tensor2<typename C::Basis> tensor_product(const C& c, const Tensor2<typename C::Basis>& s,
                                          const Tensor2<typename C::Basis>& t) {
    Tensor2<typename C::Basis> r;
    for (const auto& [ab, k] : s)
        for (const auto& [xy, j] : t)
            for (const auto& [p, kp] : c.product(ab.first, xy.first))
                for (const auto& [q, kq] : c.product(ab.second, xy.second)) r.add({p, q}, k * j * kp * kq);
    return r;
}

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("axiom check: coefficient overflow");
    return r;
}

inline long long integral(const Scalar& s) {
    if (!s.is_integer()) throw std::domain_error("axiom check needs integer structure constants, got " + s.str());
    return s.to_long();
}

constexpr int kIdBits = 21;

/// Sparse integer vector over packed id tuples; compare after normalize().
/// Sort-and-merge beats a hash map here: most terms are distinct.
class Accumulator {
  public:
    void add(std::uint64_t key, long long k) {
        if (k != 0) terms_.emplace_back(key, k);
    }
    void normalize() {
        std::sort(terms_.begin(), terms_.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        std::size_t out = 0;
        for (std::size_t i = 0; i < terms_.size();) {
            const std::uint64_t key = terms_[i].first;
            long long s = 0;
            for (; i < terms_.size() && terms_[i].first == key; ++i)
                if (__builtin_add_overflow(s, terms_[i].second, &s))
                    throw std::overflow_error("axiom check: coefficient overflow");
            if (s != 0) terms_[out++] = {key, s};
        }
        terms_.resize(out);
    }
    bool operator==(const Accumulator& o) const { return terms_ == o.terms_; }
    void clear() { terms_.clear(); }

  private:
    std::vector<std::pair<std::uint64_t, long long>> terms_;
};

inline std::uint64_t pack(std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0) {
    return (a << (2 * kIdBits)) | (b << kIdBits) | c;
}

/// Basis elements as dense ids, with both coproducts and the product cached
/// in id form.
template <class C>
class IndexedCarrier {
  public:
    using B = typename C::Basis;
    struct Term {
        int a, b;
        long long k;
    };
    using Co = std::vector<Term>;
    using Lin = std::vector<std::pair<int, long long>>;

    explicit IndexedCarrier(const C& c) : c_(c) {}

    int id(const B& b) {
        auto [it, fresh] = ids_.try_emplace(b, static_cast<int>(elems_.size()));
        if (fresh) {
            if (elems_.size() >= (std::size_t{1} << kIdBits)) throw std::length_error("axiom check: too many basis elements");
            elems_.push_back(b);
            co_.emplace_back();
            ico_.emplace_back();
        }
        return it->second;
    }
    const B& elem(int i) const { return elems_[static_cast<std::size_t>(i)]; }

    const Co& coproduct(int i) { return cached(co_, i, [this](const B& b) { return c_.coproduct(b); }); }
    const Co& internal(int i) { return cached(ico_, i, [this](const B& b) { return c_.internal_coproduct(b); }); }

    const Lin& product(int x, int y) {
        auto it = prod_.find({x, y});
        if (it != prod_.end()) return it->second;
        Lin r;
        for (const auto& [p, k] : c_.product(elem(x), elem(y))) r.emplace_back(id(p), integral(k));
        return prod_.emplace(std::pair(x, y), std::move(r)).first->second;
    }

    long long counit(int i) { return integral(c_.counit(elem(i))); }
    long long internal_counit(int i) { return integral(c_.internal_counit(elem(i))); }

  private:
    template <class F>
    const Co& cached(std::vector<std::unique_ptr<Co>>& cache, int i, F f) {
        auto& slot = cache[static_cast<std::size_t>(i)];
        if (!slot) {
            Co terms;
            const B b = elem(i);
            for (const auto& [xy, k] : f(b)) terms.push_back({id(xy.first), id(xy.second), integral(k)});
            cache[static_cast<std::size_t>(i)] = std::make_unique<Co>(std::move(terms));
        }
        return *cache[static_cast<std::size_t>(i)];
    }

    const C& c_;
    std::map<B, int> ids_;
    std::deque<B> elems_;
    std::vector<std::unique_ptr<Co>> co_, ico_;
    std::map<std::pair<int, int>, Lin> prod_;
};

}  // namespace detail

/// The five axioms on every basis element of grade <= max_grade (pairs for the
/// product compatibilities have total grade <= max_grade).
template <DoubleBialgebra C>
std::vector<AxiomResult> check_axioms(const C& c, int max_grade) {
    using B = typename C::Basis;
    using detail::pack;
    detail::IndexedCarrier<C> ix(c);
    detail::Accumulator lhs, rhs;

    std::vector<int> all;
    for (int n = 0; n <= max_grade; ++n)
        for (const B& b : c.basis(n)) all.push_back(ix.id(b));
    const int unit = ix.id(c.unit());

    AxiomResult co1{"Delta coassociative and counital", true, 0, ""};
    AxiomResult co2{"delta coassociative and counital", true, 0, ""};
    AxiomResult mult{"Delta and delta multiplicative, counits multiplicative", true, 0, ""};
    AxiomResult coint{"cointeraction (Delta⊗Id)∘delta = m_{1,3,24}∘(delta⊗delta)∘Delta", true, 0, ""};
    AxiomResult comod{"eps_Delta comodule morphism (eps_Delta⊗Id)∘delta = 1·eps_Delta", true, 0, ""};

    auto fail = [](AxiomResult& r, const std::string& what) {
        if (r.passed) r.counterexample = what;
        r.passed = false;
    };
    auto same = [&] {
        lhs.normalize();
        rhs.normalize();
        const bool ok = lhs == rhs;
        lhs.clear();
        rhs.clear();
        return ok;
    };

    auto coalgebra_ok = [&](int i, bool internal) {
        auto co = [&](int j) -> const auto& { return internal ? ix.internal(j) : ix.coproduct(j); };
        auto eps = [&](int j) { return internal ? ix.internal_counit(j) : ix.counit(j); };
        for (const auto& t : co(i)) {
            for (const auto& u : co(t.a)) lhs.add(pack(u.a, u.b, t.b), detail::checked_mul(t.k, u.k));
            for (const auto& u : co(t.b)) rhs.add(pack(t.a, u.a, u.b), detail::checked_mul(t.k, u.k));
        }
        if (!same()) return false;
        for (const auto& t : co(i)) {
            lhs.add(pack(t.b), detail::checked_mul(eps(t.a), t.k));
            rhs.add(pack(t.a), detail::checked_mul(eps(t.b), t.k));
        }
        lhs.normalize();
        rhs.normalize();
        detail::Accumulator self;
        self.add(pack(i), 1);
        const bool ok = lhs == self && rhs == self;
        lhs.clear();
        rhs.clear();
        return ok;
    };

    for (int i : all) {
        const std::string name = c.render(ix.elem(i));
        ++co1.checked;
        if (!coalgebra_ok(i, false)) fail(co1, name);
        ++co2.checked;
        if (!coalgebra_ok(i, true)) fail(co2, name);

        ++coint.checked;
        for (const auto& t : ix.internal(i))
            for (const auto& u : ix.coproduct(t.a)) lhs.add(pack(u.a, u.b, t.b), detail::checked_mul(t.k, u.k));
        for (const auto& t : ix.coproduct(i))
            for (const auto& x : ix.internal(t.a))
                for (const auto& y : ix.internal(t.b)) {
                    const long long k = detail::checked_mul(detail::checked_mul(t.k, x.k), y.k);
                    for (const auto& [p, kp] : ix.product(x.b, y.b)) rhs.add(pack(x.a, y.a, p), detail::checked_mul(k, kp));
                }
        if (!same()) fail(coint, name);

        ++comod.checked;
        for (const auto& t : ix.internal(i)) lhs.add(pack(t.b), detail::checked_mul(ix.counit(t.a), t.k));
        rhs.add(pack(unit), ix.counit(i));
        if (!same()) fail(comod, name);
    }

    auto tensor_product = [&](const auto& s, const auto& t) {
        for (const auto& x : s)
            for (const auto& y : t) {
                const long long k = detail::checked_mul(x.k, y.k);
                for (const auto& [p, kp] : ix.product(x.a, y.a))
                    for (const auto& [q, kq] : ix.product(x.b, y.b))
                        rhs.add(pack(p, q), detail::checked_mul(detail::checked_mul(k, kp), kq));
            }
    };

    for (int x : all)
        for (int y : all) {
            if (c.grade(ix.elem(x)) + c.grade(ix.elem(y)) > max_grade || ix.elem(y) < ix.elem(x)) continue;
            ++mult.checked;
            const auto xy = ix.product(x, y);
            bool ok = true;
            for (const auto& [p, k] : xy)
                for (const auto& t : ix.coproduct(p)) lhs.add(pack(t.a, t.b), detail::checked_mul(k, t.k));
            tensor_product(ix.coproduct(x), ix.coproduct(y));
            ok = same();
            for (const auto& [p, k] : xy)
                for (const auto& t : ix.internal(p)) lhs.add(pack(t.a, t.b), detail::checked_mul(k, t.k));
            tensor_product(ix.internal(x), ix.internal(y));
            ok = same() && ok;
            long long e1 = 0, e2 = 0;
            for (const auto& [p, k] : xy) {
                e1 += detail::checked_mul(ix.counit(p), k);
                e2 += detail::checked_mul(ix.internal_counit(p), k);
            }
            ok = ok && e1 == ix.counit(x) * ix.counit(y) && e2 == ix.internal_counit(x) * ix.internal_counit(y);
            if (!ok) fail(mult, c.render(ix.elem(x)) + " · " + c.render(ix.elem(y)));
        }

    return {co1, co2, mult, coint, comod};
}

}  // namespace dbialg
