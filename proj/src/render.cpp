#include "dbialg/render.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace dbialg {

namespace {

bool word_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

std::vector<std::pair<Graph, Scalar>> sorted_terms(const GraphElem& x) {
    std::vector<std::pair<Graph, Scalar>> v(x.begin(), x.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first.str() < b.first.str(); });
    return v;
}

std::vector<std::pair<std::pair<Graph, Graph>, Scalar>> sorted_terms(const Tensor2<Graph>& t) {
    std::vector<std::pair<std::pair<Graph, Graph>, Scalar>> v(t.begin(), t.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        return std::pair(a.first.first.str(), a.first.second.str()) < std::pair(b.first.first.str(), b.first.second.str());
    });
    return v;
}

std::vector<std::pair<Word, Scalar>> sorted_terms(const WordElem& x) {
    std::vector<std::pair<Word, Scalar>> v(x.begin(), x.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return word_less(a.first, b.first); });
    return v;
}

std::vector<std::pair<std::pair<Word, Word>, Scalar>> sorted_terms(const Tensor2<Word>& t) {
    std::vector<std::pair<std::pair<Word, Word>, Scalar>> v(t.begin(), t.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        if (a.first.first != b.first.first) return word_less(a.first.first, b.first.first);
        return word_less(a.first.second, b.first.second);
    });
    return v;
}

// Joins c_i t_i into "t1 - 2t2 + 1/2t3".
template <class Terms, class Name>
std::string join(const Terms& terms, Name name) {
    std::string s;
    for (const auto& [key, c] : terms) {
        const bool neg = c.sign() < 0;
        const Scalar a = neg ? -c : c;
        if (s.empty()) s += neg ? "-" : "";
        else s += neg ? " - " : " + ";
        if (a != Scalar(1)) s += a.str();
        s += name(key);
    }
    return s.empty() ? "0" : s;
}

std::string bracket(const Graph& g) { return "[" + g.str() + "]"; }

}  // namespace

Json to_json(const Scalar& s) { return s.str(); }

Json to_json(const Poly& p) {
    Json a = Json::array();
    for (const Scalar& c : p.coeffs()) a.push_back(c.str());
    return a;
}

Json to_json(const GraphElem& x) {
    Json a = Json::array();
    for (const auto& [g, c] : sorted_terms(x)) a.push_back({{"graph", g.str()}, {"coeff", c.str()}});
    return a;
}

Json to_json(const Tensor2<Graph>& t) {
    Json a = Json::array();
    for (const auto& [lr, c] : sorted_terms(t))
        a.push_back({{"left", lr.first.str()}, {"right", lr.second.str()}, {"coeff", c.str()}});
    return a;
}

Json to_json(const WordElem& x) {
    Json a = Json::array();
    for (const auto& [w, c] : sorted_terms(x)) a.push_back({{"word", w}, {"coeff", c.str()}});
    return a;
}

Json to_json(const Tensor2<Word>& t) {
    Json a = Json::array();
    for (const auto& [lr, c] : sorted_terms(t))
        a.push_back({{"left", lr.first}, {"right", lr.second}, {"coeff", c.str()}});
    return a;
}

Json to_json(const GZReport& r) {
    return {{"graph", r.graph.str()},
            {"phi_chr", r.phi_chr.str()},
            {"phi_tilde", r.phi_tilde},
            {"sign", r.sign},
            {"ok", r.ok}};
}

std::string to_text(const GraphElem& x) { return join(sorted_terms(x), bracket); }

std::string to_text(const Tensor2<Graph>& t) {
    return join(sorted_terms(t), [](const auto& lr) { return bracket(lr.first) + " ⊗ " + bracket(lr.second); });
}

std::string to_text(const WordElem& x) { return join(sorted_terms(x), render_word); }

std::string to_text(const Tensor2<Word>& t) {
    return join(sorted_terms(t), [](const auto& lr) { return render_word(lr.first) + " ⊗ " + render_word(lr.second); });
}

}  // namespace dbialg
