#pragma once

// Quasishuffle double bialgebras over a commutative semigroup of letters.
// With unbounded positive-integer letters this is QSym on compositions.

#include <functional>
#include <map>
#include <memory>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dbialg/lincomb.hpp"
#include "dbialg/poly.hpp"

namespace dbialg {

struct MalformedWord : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Letters are positive integers. With cap == 0 the operation is ordinary
/// addition (QSym); otherwise letters live in {1..cap} and add with saturation.
struct Semigroup {
    int cap = 0;

    int plus(int a, int b) const;
    bool valid(int letter) const { return letter >= 1 && (cap == 0 || letter <= cap); }
    bool bounded() const { return cap > 0; }
    std::string name() const { return cap == 0 ? "qsym" : "semigroup:" + std::to_string(cap); }

    static Semigroup qsym() { return {}; }
    static Semigroup capped(int cap);
};

using Word = std::vector<int>;
using WordElem = LinComb<Word>;

/// 1-based values; g[i] is the image of i+1.
using Surjection = std::vector<int>;

/// Surjections onto [max] increasing on [1..k] and on [k+1..k+l].
std::vector<Surjection> qsh_surjections(int k, int l);
/// All surjections [n] -> [l] for l = 1..n (the empty map when n = 0).
std::vector<Surjection> all_surjections(int n);

/// Word whose j-th letter is the semigroup sum of the w_i with g(i) = j.
Word merge_letters(const Word& w, const Surjection& g, const Semigroup& sg);

WordElem quasishuffle(const Word& x, const Word& y, const Semigroup& sg);
WordElem quasishuffle(const WordElem& x, const WordElem& y, const Semigroup& sg);
WordElem shuffle(const Word& x, const Word& y);
WordElem shuffle(const WordElem& x, const WordElem& y);

Tensor2<Word> deconcat(const Word& w);
Tensor2<Word> internal_delta(const Word& w, const Semigroup& sg);

struct WordCounits {
    Scalar counit_Delta;
    Scalar counit_delta;
};
WordCounits word_counits(const WordElem& x);

int descents(const Surjection& g);
/// X^{d+1} (1+X)^{n-1-d}
Poly weight_poly(const Surjection& g);

/// Coefficient generator k -> a_k of a formal series in T.
using SeriesCoeffs = std::function<Scalar(int)>;

namespace series {
SeriesCoeffs t_power(int k);
SeriesCoeffs exp();
/// ln(1+T)
SeriesCoeffs log1p();
/// 1/(1+T)
SeriesCoeffs inv1p();
}  // namespace series

/// <sum a_k T^k, sum b_k X^k> = sum a_k b_k
Scalar pairing(const SeriesCoeffs& q, const Poly& p);
/// Exact value of the integral of t^p (1+t)^q over [-1, 0].
Scalar descent_integral(int p, int q);

WordElem theta_word(const SeriesCoeffs& q, const Word& w, const Semigroup& sg);
WordElem antipode_word(const Word& w, const Semigroup& sg);
WordElem eulerian_word(const Word& w, const Semigroup& sg);

/// The morphism (T(V), quasishuffle) -> (T(V), shuffle) built from the
/// length-one part of the eulerian idempotent, tabulated on words up to max_len.
class HoffmanEmbedding {
  public:
    HoffmanEmbedding(int max_len, Semigroup sg);
    /// Throws std::out_of_range beyond max_len.
    const WordElem& operator()(const Word& w) const;
    WordElem apply(const WordElem& x) const;
    int max_len() const { return max_len_; }
    /// phi(v1..vn) = (-1)^{n-1}/n (v1+...+vn)
    WordElem phi(const Word& w) const;

  private:
    int max_len_;
    Semigroup sg_;
    mutable std::map<Word, WordElem> table_;
};

/// "(2,1,1)"; "()" is the empty word.
Word parse_word(std::string_view text, const Semigroup& sg);
std::string render_word(const Word& w);

/// Every word of length n over letters 1..alphabet.
std::vector<Word> words_of_length(int n, int alphabet);

/// The quasishuffle double bialgebra as an engine carrier. Basis enumeration
/// uses letters 1..cap for a capped semigroup and 1..alphabet for QSym.
class WordCarrier {
  public:
    using Basis = Word;

    explicit WordCarrier(Semigroup sg, int alphabet = 3);

    const Semigroup& semigroup() const { return sg_; }
    int alphabet() const { return alphabet_; }

    Word unit() const { return {}; }
    int grade(const Word& w) const { return static_cast<int>(w.size()); }
    WordElem product(const Word& a, const Word& b) const { return quasishuffle(a, b, sg_); }
    const Tensor2<Word>& coproduct(const Word& w) const;
    const Tensor2<Word>& internal_coproduct(const Word& w) const;
    Scalar counit(const Word& w) const { return w.empty() ? Scalar(1) : Scalar(0); }
    Scalar internal_counit(const Word& w) const { return w.size() <= 1 ? Scalar(1) : Scalar(0); }
    std::vector<Word> basis(int n) const { return words_of_length(n, alphabet_); }
    std::string name() const { return sg_.name(); }
    std::string render(const Word& w) const { return render_word(w); }

  private:
    Semigroup sg_;
    int alphabet_;
    mutable std::shared_mutex mu_;
    mutable std::map<Word, std::unique_ptr<Tensor2<Word>>> delta_memo_;
    mutable std::map<Word, std::unique_ptr<Tensor2<Word>>> idelta_memo_;
};

}  // namespace dbialg
