#include "dbialg/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <mutex>

namespace dbialg {

int Semigroup::plus(int a, int b) const {
    if (cap == 0) {
        if (a > std::numeric_limits<int>::max() - b) throw std::overflow_error("letter sum overflows");
        return a + b;
    }
    return std::min(a + b, cap);
}

Semigroup Semigroup::capped(int cap) {
    if (cap < 1) throw std::invalid_argument("semigroup cap must be positive");
    return Semigroup{cap};
}

namespace {

// Walks the lattice of (k,l)-quasishuffles: each step places the next letter
// of x, the next letter of y, or both, into a new slot.
void qsh_walk(int k, int l, int i, int j, int slot, Surjection& s, bool with_merges, std::vector<Surjection>& out) {
    if (i == k && j == l) {
        out.push_back(s);
        return;
    }
    if (i < k) {
        s[static_cast<std::size_t>(i)] = slot;
        qsh_walk(k, l, i + 1, j, slot + 1, s, with_merges, out);
    }
    if (j < l) {
        s[static_cast<std::size_t>(k + j)] = slot;
        qsh_walk(k, l, i, j + 1, slot + 1, s, with_merges, out);
    }
    if (with_merges && i < k && j < l) {
        s[static_cast<std::size_t>(i)] = slot;
        s[static_cast<std::size_t>(k + j)] = slot;
        qsh_walk(k, l, i + 1, j + 1, slot + 1, s, with_merges, out);
    }
}

std::vector<Surjection> walks(int k, int l, bool with_merges) {
    if (k < 0 || l < 0) throw std::invalid_argument("negative word length");
    std::vector<Surjection> out;
    Surjection s(static_cast<std::size_t>(k + l));
    qsh_walk(k, l, 0, 0, 1, s, with_merges, out);
    return out;
}

Word concat(const Word& a, const Word& b) {
    Word r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

}  // namespace

std::vector<Surjection> qsh_surjections(int k, int l) { return walks(k, l, true); }

std::vector<Surjection> all_surjections(int n) {
    std::vector<Surjection> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    // Enumerate all maps [n] -> [n] and keep those whose image is an initial segment.
    Surjection g(static_cast<std::size_t>(n), 1);
    while (true) {
        const int l = *std::max_element(g.begin(), g.end());
        std::vector<bool> hit(static_cast<std::size_t>(l) + 1, false);
        for (int v : g) hit[static_cast<std::size_t>(v)] = true;
        if (std::all_of(hit.begin() + 1, hit.end(), [](bool b) { return b; })) out.push_back(g);
        int i = n - 1;
        while (i >= 0 && g[static_cast<std::size_t>(i)] == n) g[static_cast<std::size_t>(i--)] = 1;
        if (i < 0) break;
        ++g[static_cast<std::size_t>(i)];
    }
    return out;
}

Word merge_letters(const Word& w, const Surjection& g, const Semigroup& sg) {
    if (g.size() != w.size()) throw std::invalid_argument("surjection and word lengths differ");
    const int l = g.empty() ? 0 : *std::max_element(g.begin(), g.end());
    Word r(static_cast<std::size_t>(l), 0);
    for (std::size_t i = 0; i < w.size(); ++i) {
        int& slot = r[static_cast<std::size_t>(g[i] - 1)];
        slot = slot == 0 ? w[i] : sg.plus(slot, w[i]);
    }
    return r;
}

WordElem quasishuffle(const Word& x, const Word& y, const Semigroup& sg) {
    const Word xy = concat(x, y);
    WordElem r;
    for (const auto& s : qsh_surjections(static_cast<int>(x.size()), static_cast<int>(y.size())))
        r.add(merge_letters(xy, s, sg), Scalar(1));
    return r;
}

WordElem quasishuffle(const WordElem& x, const WordElem& y, const Semigroup& sg) {
    WordElem r;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) r.add_scaled(quasishuffle(a, b, sg), ca * cb);
    return r;
}

WordElem shuffle(const Word& x, const Word& y) {
    const Word xy = concat(x, y);
    const Semigroup unused;
    WordElem r;
    for (const auto& s : walks(static_cast<int>(x.size()), static_cast<int>(y.size()), false))
        r.add(merge_letters(xy, s, unused), Scalar(1));
    return r;
}

WordElem shuffle(const WordElem& x, const WordElem& y) {
    WordElem r;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) r.add_scaled(shuffle(a, b), ca * cb);
    return r;
}

Tensor2<Word> deconcat(const Word& w) {
    Tensor2<Word> r;
    for (std::size_t k = 0; k <= w.size(); ++k)
        r.add({Word(w.begin(), w.begin() + static_cast<long>(k)), Word(w.begin() + static_cast<long>(k), w.end())},
              Scalar(1));
    return r;
}

Tensor2<Word> internal_delta(const Word& w, const Semigroup& sg) {
    Tensor2<Word> r;
    if (w.empty()) {
        r.add({Word{}, Word{}}, Scalar(1));
        return r;
    }
    const std::size_t n = w.size();
    // Bit i of `cuts` set means a block boundary after position i.
    for (std::uint32_t cuts = 0; cuts < (1U << (n - 1)); ++cuts) {
        Word sums;
        WordElem right(Word{});
        std::size_t start = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (i + 1 == n || ((cuts >> i) & 1U)) {
                Word block(w.begin() + static_cast<long>(start), w.begin() + static_cast<long>(i + 1));
                int s = block[0];
                for (std::size_t j = 1; j < block.size(); ++j) s = sg.plus(s, block[j]);
                sums.push_back(s);
                right = quasishuffle(right, WordElem(block), sg);
                start = i + 1;
            }
        }
        for (const auto& [v, c] : right) r.add({sums, v}, c);
    }
    return r;
}

WordCounits word_counits(const WordElem& x) {
    WordCounits c{Scalar(0), Scalar(0)};
    for (const auto& [w, v] : x) {
        if (w.empty()) c.counit_Delta += v;
        if (w.size() <= 1) c.counit_delta += v;
    }
    return c;
}

int descents(const Surjection& g) {
    int d = 0;
    for (std::size_t i = 0; i + 1 < g.size(); ++i)
        if (g[i] >= g[i + 1]) ++d;
    return d;
}

Poly weight_poly(const Surjection& g) {
    const int n = static_cast<int>(g.size());
    if (n == 0) throw std::invalid_argument("weight polynomial of the empty surjection");
    const int d = descents(g);
    Poly p = Poly::monomial(d + 1);
    const Poly one_plus_x{Scalar(1), Scalar(1)};
    for (int i = 0; i < n - 1 - d; ++i) p *= one_plus_x;
    return p;
}

namespace series {

SeriesCoeffs t_power(int k) {
    return [k](int j) { return j == k ? Scalar(1) : Scalar(0); };
}

SeriesCoeffs exp() {
    return [](int j) { return factorial(j).inverse(); };
}

SeriesCoeffs log1p() {
    return [](int j) { return j == 0 ? Scalar(0) : sign_power(j + 1) / Scalar(j); };
}

SeriesCoeffs inv1p() {
    return [](int j) { return sign_power(j); };
}

}  // namespace series

Scalar pairing(const SeriesCoeffs& q, const Poly& p) {
    Scalar s(0);
    for (int k = 0; k <= p.degree(); ++k) {
        const Scalar& b = p.coeffs()[static_cast<std::size_t>(k)];
        if (!b.is_zero()) s += q(k) * b;
    }
    return s;
}

Scalar descent_integral(int p, int q) {
    // Expand (1+t)^q and integrate each monomial of t^p(1+t)^q over [-1, 0].
    Scalar s(0);
    for (int j = 0; j <= q; ++j) s += binomial(q, j) * sign_power(p + j) / Scalar(p + j + 1);
    return s;
}

WordElem theta_word(const SeriesCoeffs& q, const Word& w, const Semigroup& sg) {
    if (w.empty()) throw std::invalid_argument("theta_word needs a nonempty word");
    WordElem r;
    for (const auto& g : all_surjections(static_cast<int>(w.size())))
        r.add(merge_letters(w, g, sg), pairing(q, weight_poly(g)));
    return r;
}

WordElem antipode_word(const Word& w, const Semigroup& sg) {
    if (w.empty()) return WordElem(Word{});
    const int n = static_cast<int>(w.size());
    WordElem r;
    for (const auto& g : all_surjections(n))
        if (descents(g) == n - 1) r.add(merge_letters(w, g, sg), sign_power(n));
    return r;
}

WordElem eulerian_word(const Word& w, const Semigroup& sg) {
    if (w.empty()) return {};
    const int n = static_cast<int>(w.size());
    WordElem r;
    for (const auto& g : all_surjections(n)) {
        const int d = descents(g);
        r.add(merge_letters(w, g, sg), sign_power(d) * factorial(d) * factorial(n - 1 - d) / factorial(n));
    }
    return r;
}

HoffmanEmbedding::HoffmanEmbedding(int max_len, Semigroup sg) : max_len_(max_len), sg_(sg) {
    if (max_len < 1) throw std::invalid_argument("hoffman embedding needs max_len >= 1");
}

WordElem HoffmanEmbedding::phi(const Word& w) const {
    if (w.empty()) return {};
    int s = w[0];
    for (std::size_t i = 1; i < w.size(); ++i) s = sg_.plus(s, w[i]);
    const long n = static_cast<long>(w.size());
    return WordElem(Word{s}, sign_power(n - 1) / Scalar(n));
}

const WordElem& HoffmanEmbedding::operator()(const Word& w) const {
    if (static_cast<int>(w.size()) > max_len_)
        throw std::out_of_range("word longer than the embedding table (" + std::to_string(max_len_) + ")");
    auto it = table_.find(w);
    if (it != table_.end()) return it->second;
    // Sum over deconcatenations into nonempty blocks of phi(w1)...phi(wk).
    WordElem r;
    if (w.empty()) {
        r.add(Word{}, Scalar(1));
    } else {
        const std::size_t n = w.size();
        for (std::uint32_t cuts = 0; cuts < (1U << (n - 1)); ++cuts) {
            Word out;
            Scalar c(1);
            std::size_t start = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (i + 1 == n || ((cuts >> i) & 1U)) {
                    const auto term = *phi(Word(w.begin() + static_cast<long>(start), w.begin() + static_cast<long>(i + 1))).begin();
                    out.push_back(term.first[0]);
                    c *= term.second;
                    start = i + 1;
                }
            }
            r.add(out, c);
        }
    }
    return table_.emplace(w, std::move(r)).first->second;
}

WordElem HoffmanEmbedding::apply(const WordElem& x) const {
    WordElem r;
    for (const auto& [w, c] : x) r.add_scaled((*this)(w), c);
    return r;
}

Word parse_word(std::string_view text, const Semigroup& sg) {
    auto bad = [&](const std::string& why) {
        return MalformedWord("malformed word \"" + std::string(text) + "\": " + why);
    };
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') throw bad("expected a parenthesized list like (2,1,1)");
    const std::string_view body = std::string_view(s).substr(1, s.size() - 2);
    Word w;
    if (body.empty()) return w;
    std::size_t pos = 0;
    while (true) {
        const auto comma = body.find(',', pos);
        const std::string_view item = body.substr(pos, comma == std::string_view::npos ? body.size() - pos : comma - pos);
        int v = 0;
        auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || ec != std::errc() || p != item.data() + item.size()) throw bad("bad letter '" + std::string(item) + "'");
        if (!sg.valid(v)) throw bad("letter " + std::to_string(v) + " is outside " + sg.name());
        w.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return w;
}

std::string render_word(const Word& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i]);
    }
    return s + ")";
}

std::vector<Word> words_of_length(int n, int alphabet) {
    std::vector<Word> out;
    if (n < 0 || alphabet < 1) return out;
    Word w(static_cast<std::size_t>(n), 1);
    while (true) {
        out.push_back(w);
        int i = n - 1;
        while (i >= 0 && w[static_cast<std::size_t>(i)] == alphabet) w[static_cast<std::size_t>(i--)] = 1;
        if (i < 0) break;
        ++w[static_cast<std::size_t>(i)];
    }
    return out;
}

WordCarrier::WordCarrier(Semigroup sg, int alphabet) : sg_(sg), alphabet_(sg.bounded() ? sg.cap : alphabet) {
    if (alphabet_ < 1) throw std::invalid_argument("alphabet bound must be positive");
}

const Tensor2<Word>& WordCarrier::coproduct(const Word& w) const {
    {
        std::shared_lock lock(mu_);
        auto it = delta_memo_.find(w);
        if (it != delta_memo_.end()) return *it->second;
    }
    auto t = std::make_unique<Tensor2<Word>>(deconcat(w));
    std::unique_lock lock(mu_);
    return *delta_memo_.try_emplace(w, std::move(t)).first->second;
}

const Tensor2<Word>& WordCarrier::internal_coproduct(const Word& w) const {
    {
        std::shared_lock lock(mu_);
        auto it = idelta_memo_.find(w);
        if (it != idelta_memo_.end()) return *it->second;
    }
    auto t = std::make_unique<Tensor2<Word>>(internal_delta(w, sg_));
    std::unique_lock lock(mu_);
    return *idelta_memo_.try_emplace(w, std::move(t)).first->second;
}

}  // namespace dbialg
