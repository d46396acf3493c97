#pragma once

// Generic convolution calculus over a graded connected double bialgebra:
// linear maps on the basis, the two convolutions, Theta, the character
// coaction, truncated series, exp/log, antipodes and the eulerian idempotent.
//
// Every map is total on basis elements up to the engine's grade cap and
// throws GradeOverflow above it. Series truncate exactly at the grade because
// iterated reduced coproducts vanish beyond it.
//
// Maps memoize their values and are not synchronized: confine each map (and
// the engine that made it) to one thread. Maps hold a pointer to their engine,
// which must outlive them.

#include <concepts>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dbialg/lincomb.hpp"
#include "dbialg/poly.hpp"
#include "dbialg/word.hpp"

namespace dbialg {

struct GradeOverflow : std::out_of_range {
    GradeOverflow(int grade, int cap)
        : std::out_of_range("grade " + std::to_string(grade) + " exceeds the grade cap " + std::to_string(cap) +
                            "; raise --max-grade"),
          grade(grade), cap(cap) {}
    int grade;
    int cap;
};

struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

template <class C>
concept DoubleBialgebra = requires(const C& c, const typename C::Basis& b, int n) {
    { c.unit() } -> std::convertible_to<typename C::Basis>;
    { c.grade(b) } -> std::convertible_to<int>;
    { c.product(b, b) } -> std::convertible_to<LinComb<typename C::Basis>>;
    { c.coproduct(b) } -> std::convertible_to<Tensor2<typename C::Basis>>;
    { c.internal_coproduct(b) } -> std::convertible_to<Tensor2<typename C::Basis>>;
    { c.counit(b) } -> std::convertible_to<Scalar>;
    { c.internal_counit(b) } -> std::convertible_to<Scalar>;
    { c.basis(n) } -> std::convertible_to<std::vector<typename C::Basis>>;
    { c.render(b) } -> std::convertible_to<std::string>;
};

/// A linear map defined by its values on basis elements.
template <class B, class V>
class LinearMap {
  public:
    using Rule = std::function<V(const LinearMap&, const B&)>;

    LinearMap() = default;
    LinearMap(Rule rule, std::function<int(const B&)> grade, int cap)
        : s_(std::make_shared<State>(State{std::move(rule), std::move(grade), cap, {}})) {}

    const V& operator()(const B& b) const {
        auto it = s_->memo.find(b);
        if (it != s_->memo.end()) return it->second;
        const int g = s_->grade(b);
        if (g > s_->cap) throw GradeOverflow(g, s_->cap);
        V v = s_->rule(*this, b);
        return s_->memo.emplace(b, std::move(v)).first->second;
    }

    V apply(const LinComb<B>& x) const {
        V r{};
        for (const auto& [b, c] : x) r += (*this)(b) * c;
        return r;
    }

    int cap() const { return s_->cap; }
    bool valid() const { return static_cast<bool>(s_); }

  private:
    struct State {
        Rule rule;
        std::function<int(const B&)> grade;
        int cap;
        std::map<B, V> memo;
    };
    std::shared_ptr<State> s_;
};

/// Target algebras for convolution products.
struct ScalarAlgebra {
    using value_type = Scalar;
    Scalar one() const { return Scalar(1); }
    Scalar mul(const Scalar& a, const Scalar& b) const { return a * b; }
};

struct PolyAlgebra {
    using value_type = Poly;
    Poly one() const { return Poly(1); }
    Poly mul(const Poly& a, const Poly& b) const { return a * b; }
};

template <class C>
struct CarrierAlgebra {
    using value_type = LinComb<typename C::Basis>;
    const C* c;
    value_type one() const { return value_type(c->unit()); }
    value_type mul(const value_type& x, const value_type& y) const {
        value_type r;
        for (const auto& [a, ca] : x)
            for (const auto& [b, cb] : y) r.add_scaled(c->product(a, b), ca * cb);
        return r;
    }
};

/// QSym (compositions under the quasishuffle product) as a target algebra.
struct QSymAlgebra {
    using value_type = WordElem;
    WordElem one() const { return WordElem(Word{}); }
    WordElem mul(const WordElem& a, const WordElem& b) const { return quasishuffle(a, b, Semigroup::qsym()); }
};

inline bool is_zero_value(const Scalar& s) { return s.is_zero(); }
inline bool is_zero_value(const Poly& p) { return p.is_zero(); }
template <class K>
bool is_zero_value(const LinComb<K>& x) { return x.is_zero(); }

/// lambda(k,l,p) = sum_{i<=k, j<=l} (-1)^{(k-i)+(l-j)} C(k,i) C(l,j) C(ij,p)
inline Scalar lambda_coeff(int k, int l, int p) {
    Scalar s(0);
    for (int i = 0; i <= k; ++i)
        for (int j = 0; j <= l; ++j)
            s += sign_power((k - i) + (l - j)) * binomial(k, i) * binomial(l, j) * binomial(static_cast<long>(i) * j, p);
    return s;
}

template <DoubleBialgebra C>
class Engine {
  public:
    using B = typename C::Basis;
    using Elem = LinComb<B>;
    using Form = LinearMap<B, Scalar>;
    using Endo = LinearMap<B, Elem>;
    using PolyMap = LinearMap<B, Poly>;

    Engine(const C& carrier, int cap) : c_(&carrier), cap_(cap) {
        if (cap < 0) throw std::invalid_argument("grade cap must be nonnegative");
    }
    Engine(const Engine&) = delete;
    Engine& operator=(const Engine&) = delete;

    const C& carrier() const { return *c_; }
    int cap() const { return cap_; }
    int grade(const B& b) const { return c_->grade(b); }
    CarrierAlgebra<C> algebra() const { return {c_}; }

    void check_grade(const B& b) const {
        if (grade(b) > cap_) throw GradeOverflow(grade(b), cap_);
    }

    // ---- elements ---------------------------------------------------------

    Elem one() const { return Elem(c_->unit()); }
    Elem mul(const Elem& x, const Elem& y) const { return algebra().mul(x, y); }

    Tensor2<B> coproduct(const Elem& x) const {
        Tensor2<B> r;
        for (const auto& [b, c] : x) r.add_scaled(c_->coproduct(b), c);
        return r;
    }
    Tensor2<B> internal_coproduct(const Elem& x) const {
        Tensor2<B> r;
        for (const auto& [b, c] : x) r.add_scaled(c_->internal_coproduct(b), c);
        return r;
    }

    /// Delta(b) - b⊗1 - 1⊗b on positive grade, zero on the unit.
    Tensor2<B> reduced_coproduct(const B& b) const {
        if (grade(b) == 0) return {};
        Tensor2<B> r = c_->coproduct(b);
        r.add({b, c_->unit()}, Scalar(-1));
        r.add({c_->unit(), b}, Scalar(-1));
        return r;
    }

    /// k-fold iterated reduced coproduct of a basis element, with k+1 legs.
    const TensorN<B>& reduced_iter(const B& b, int k) const {
        const auto key = std::make_pair(b, k);
        auto it = iter_memo_.find(key);
        if (it != iter_memo_.end()) return it->second;
        TensorN<B> r;
        if (k < grade(b)) {
            if (k == 0) {
                r.add({b}, Scalar(1));
            } else {
                for (const auto& [xy, c] : reduced_coproduct(b))
                    for (const auto& [legs, d] : reduced_iter(xy.first, k - 1)) {
                        auto v = legs;
                        v.push_back(xy.second);
                        r.add(v, c * d);
                    }
            }
        }
        return iter_memo_.emplace(key, std::move(r)).first->second;
    }

    TensorN<B> reduced_coproduct_iter(const Elem& x, int k) const {
        TensorN<B> r;
        for (const auto& [b, c] : x) r.add_scaled(reduced_iter(b, k), c);
        return r;
    }

    // ---- maps -------------------------------------------------------------

    template <class V>
    LinearMap<B, V> make_recursive(typename LinearMap<B, V>::Rule rule) const {
        const C* c = c_;
        return LinearMap<B, V>(std::move(rule), [c](const B& b) { return c->grade(b); }, cap_);
    }

    template <class V>
    LinearMap<B, V> make(std::function<V(const B&)> rule) const {
        return make_recursive<V>([rule = std::move(rule)](const LinearMap<B, V>&, const B& b) { return rule(b); });
    }

    Form form(std::function<Scalar(const B&)> rule) const { return make<Scalar>(std::move(rule)); }
    Endo endo(std::function<Elem(const B&)> rule) const { return make<Elem>(std::move(rule)); }

    Form counit_Delta() const {
        const C* c = c_;
        return form([c](const B& b) { return c->counit(b); });
    }
    Form counit_delta() const {
        const C* c = c_;
        return form([c](const B& b) { return c->internal_counit(b); });
    }
    Form zero_form() const {
        return form([](const B&) { return Scalar(0); });
    }
    Endo identity() const {
        return endo([](const B& b) { return Elem(b); });
    }
    /// nu∘eps_Delta, the unit of *.
    Endo unit_endo() const {
        const C* c = c_;
        return endo([c](const B& b) { return Elem(c->unit(), c->counit(b)); });
    }
    /// Id - nu∘eps_Delta
    Endo rho() const {
        const Engine* e = this;
        return endo([e](const B& b) { return e->grade(b) == 0 ? Elem() : Elem(b); });
    }

    template <class V>
    LinearMap<B, V> add(const LinearMap<B, V>& f, const LinearMap<B, V>& g) const {
        return make<V>([f, g](const B& b) { return f(b) + g(b); });
    }
    template <class V>
    LinearMap<B, V> sub(const LinearMap<B, V>& f, const LinearMap<B, V>& g) const {
        return make<V>([f, g](const B& b) { return f(b) - g(b); });
    }
    template <class V>
    LinearMap<B, V> scale(const LinearMap<B, V>& f, const Scalar& s) const {
        return make<V>([f, s](const B& b) { return f(b) * s; });
    }

    /// f∘g for an endomorphism g.
    template <class V>
    LinearMap<B, V> compose(const LinearMap<B, V>& f, const Endo& g) const {
        return make<V>([f, g](const B& b) { return f.apply(g(b)); });
    }

    // ---- convolutions -----------------------------------------------------

    /// f * g = m∘(f⊗g)∘Delta
    template <class A>
    LinearMap<B, typename A::value_type> star(const LinearMap<B, typename A::value_type>& f,
                                              const LinearMap<B, typename A::value_type>& g, const A& alg) const {
        using V = typename A::value_type;
        const C* c = c_;
        return make<V>([c, f, g, alg](const B& b) {
            V r{};
            for (const auto& [xy, k] : c->coproduct(b)) r += alg.mul(f(xy.first), g(xy.second)) * k;
            return r;
        });
    }
    Form star(const Form& f, const Form& g) const { return star(f, g, ScalarAlgebra{}); }
    Endo star(const Endo& f, const Endo& g) const { return star(f, g, algebra()); }

    /// (f⊗lambda)∘delta; f may take values in any module over the scalars.
    template <class V>
    LinearMap<B, V> coaction(const LinearMap<B, V>& f, const Form& lambda) const {
        const C* c = c_;
        return make<V>([c, f, lambda](const B& b) {
            V r{};
            for (const auto& [xy, k] : c->internal_coproduct(b)) {
                const Scalar w = lambda(xy.second) * k;
                if (!w.is_zero()) r += f(xy.first) * w;
            }
            return r;
        });
    }

    /// lambda ⋆ mu = (lambda⊗mu)∘delta
    Form circ(const Form& lambda, const Form& mu) const { return coaction(lambda, mu); }

    /// Theta(lambda) = (lambda⊗Id)∘delta
    Endo theta(const Form& lambda) const {
        const C* c = c_;
        return endo([c, lambda](const B& b) {
            Elem r;
            for (const auto& [xy, k] : c->internal_coproduct(b)) r.add(xy.second, lambda(xy.first) * k);
            return r;
        });
    }

    /// m^{(k-1)}∘f^{⊗k}∘reduced^{(k-1)}(b); for k = 0 this is eps_Delta(b)·1.
    template <class A>
    typename A::value_type tensor_power(const LinearMap<B, typename A::value_type>& f, const B& b, int k,
                                        const A& alg) const {
        using V = typename A::value_type;
        if (k == 0) return alg.one() * c_->counit(b);
        V r{};
        for (const auto& [legs, c] : reduced_iter(b, k - 1)) {
            V acc = f(legs[0]);
            for (std::size_t i = 1; i < legs.size() && !is_zero_value(acc); ++i) acc = alg.mul(acc, f(legs[i]));
            r += acc * c;
        }
        return r;
    }
    Scalar tensor_power(const Form& f, const B& b, int k) const { return tensor_power(f, b, k, ScalarAlgebra{}); }

    // ---- series -----------------------------------------------------------

    /// ev_f(P) = sum_k a_k f^{*k}; requires f(1) = 0.
    template <class A>
    LinearMap<B, typename A::value_type> ev_series(const LinearMap<B, typename A::value_type>& f, SeriesCoeffs p,
                                                   const A& alg) const {
        using V = typename A::value_type;
        if (!is_zero_value(f(c_->unit())))
            throw PreconditionError("series evaluation needs a map vanishing on the unit");
        const Engine* e = this;
        return make<V>([e, f, p = std::move(p), alg](const B& b) {
            V r = alg.one() * (p(0) * e->c_->counit(b));
            for (int k = 1; k <= e->grade(b); ++k) {
                const Scalar a = p(k);
                if (!a.is_zero()) r += e->tensor_power(f, b, k, alg) * a;
            }
            return r;
        });
    }
    Form ev_series(const Form& f, SeriesCoeffs p) const { return ev_series(f, std::move(p), ScalarAlgebra{}); }
    Endo ev_series(const Endo& f, SeriesCoeffs p) const { return ev_series(f, std::move(p), algebra()); }

    Form exp_form(const Form& mu) const {
        if (!mu(c_->unit()).is_zero()) throw PreconditionError("exp needs mu(1) = 0");
        return ev_series(mu, series::exp());
    }
    Form log_form(const Form& lambda) const {
        if (lambda(c_->unit()) != Scalar(1)) throw PreconditionError("log needs lambda(1) = 1");
        return ev_series(sub(lambda, counit_Delta()), series::log1p());
    }
    /// Inverse for *: sum_k (-1)^k (lambda - eps_Delta)^{*k}.
    Form star_inverse(const Form& lambda) const {
        if (lambda(c_->unit()) != Scalar(1)) throw PreconditionError("*-inversion needs lambda(1) = 1");
        return ev_series(sub(lambda, counit_Delta()), series::inv1p());
    }

    // ---- antipodes and the eulerian idempotent ----------------------------

    /// S(b) = sum_k (-1)^k m^{(k-1)} reduced^{(k-1)}(b), S(1) = 1.
    Endo antipode_takeuchi() const {
        const Engine* e = this;
        return endo([e](const B& b) {
            if (e->grade(b) == 0) return e->one();
            Elem r;
            for (int k = 1; k <= e->grade(b); ++k)
                for (const auto& [legs, c] : e->reduced_iter(b, k - 1)) {
                    Elem acc(legs[0]);
                    for (std::size_t i = 1; i < legs.size(); ++i) acc = e->mul(acc, Elem(legs[i]));
                    r.add_scaled(acc, c * sign_power(k));
                }
            return r;
        });
    }
    /// S = Theta(eps_delta^{*-1})
    Endo antipode_via_delta() const { return theta(star_inverse(counit_delta())); }
    /// ln(Id) = ev_rho(ln(1+T))
    Endo eulerian() const { return ev_series(rho(), series::log1p()); }
    /// phi = ln(eps_delta)
    Form phi() const { return log_form(counit_delta()); }

    // ---- comparison and sampling ------------------------------------------

    std::vector<B> basis_upto(int max_grade) const {
        std::vector<B> out;
        for (int n = 0; n <= max_grade; ++n)
            for (auto& b : c_->basis(n)) out.push_back(std::move(b));
        return out;
    }

    /// First basis element (grade <= max_grade) where f and g differ.
    template <class V>
    std::optional<B> first_difference(const LinearMap<B, V>& f, const LinearMap<B, V>& g, int max_grade) const {
        for (const B& b : basis_upto(max_grade))
            if (!(f(b) == g(b))) return b;
        return std::nullopt;
    }
    template <class V>
    bool equal(const LinearMap<B, V>& f, const LinearMap<B, V>& g, int max_grade) const {
        return !first_difference(f, g, max_grade).has_value();
    }

    /// lambda(1) = 1 and lambda(xy) = lambda(x)lambda(y) on basis pairs of
    /// total grade <= max_grade.
    bool is_character(const Form& lambda, int max_grade) const {
        if (lambda(c_->unit()) != Scalar(1)) return false;
        for (int i = 1; i <= max_grade; ++i)
            for (int j = i; i + j <= max_grade; ++j)
                for (const B& x : c_->basis(i))
                    for (const B& y : c_->basis(j))
                        if (lambda.apply(c_->product(x, y)) != lambda(x) * lambda(y)) return false;
        return true;
    }

    /// mu(1) = 0 and mu(xy) = 0 on basis pairs of positive grades summing to <= max_grade.
    bool is_infinitesimal(const Form& mu, int max_grade) const {
        if (!mu(c_->unit()).is_zero()) return false;
        for (int i = 1; i <= max_grade; ++i)
            for (int j = i; i + j <= max_grade; ++j)
                for (const B& x : c_->basis(i))
                    for (const B& y : c_->basis(j))
                        if (!mu.apply(c_->product(x, y)).is_zero()) return false;
        return true;
    }

    /// Deterministic pseudo-random values in {-5..5}/{1..4} on positive grades;
    /// `at_unit` is the value on the unit.
    Form random_form(std::uint64_t seed, Scalar at_unit) const {
        const C* c = c_;
        return form([c, seed, at_unit](const B& b) {
            if (c->grade(b) == 0) return at_unit;
            std::seed_seq seq{seed, static_cast<std::uint64_t>(std::hash<std::string>{}(c->render(b)))};
            std::mt19937_64 rng(seq);
            std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
            const long n = num(rng);
            return Scalar(n, den(rng));
        });
    }

    /// kappa∘eulerian vanishes on the unit and on products of positive-grade
    /// elements of a commutative carrier, so it is an infinitesimal character.
    Form infinitesimal_from(const Form& kappa) const { return compose(kappa, eulerian()); }
    Form random_infinitesimal(std::uint64_t seed) const { return infinitesimal_from(random_form(seed, Scalar(0))); }
    Form random_character(std::uint64_t seed) const { return exp_form(random_infinitesimal(seed)); }

  private:
    const C* c_;
    int cap_;
    mutable std::map<std::pair<B, int>, TensorN<B>> iter_memo_;
};

}  // namespace dbialg
