#include "dbialg/oracles.hpp"

#include <algorithm>
#include <functional>
#include <vector>

namespace dbialg::oracle {

namespace {

using Adj = std::vector<std::vector<int>>;

Adj adjacency_lists(const Graph& g) {
    Adj a(static_cast<std::size_t>(g.vertex_count()));
    for (auto [i, j] : g.edges()) {
        a[static_cast<std::size_t>(i)].push_back(j);
        a[static_cast<std::size_t>(j)].push_back(i);
    }
    return a;
}

bool proper(const std::vector<Edge>& edges, const std::vector<int>& color) {
    for (auto [i, j] : edges)
        if (color[static_cast<std::size_t>(i)] == color[static_cast<std::size_t>(j)]) return false;
    return true;
}

// Decodes `code` as n base-k digits.
void decode(long long code, int k, std::vector<int>& digits) {
    for (auto& d : digits) {
        d = static_cast<int>(code % k);
        code /= k;
    }
}

long long power(int k, int n) {
    long long r = 1;
    for (int i = 0; i < n; ++i) r *= k;
    return r;
}

// Graph induced on the vertices with label[v] == which, relabeled in order.
Graph induced_by_label(const Graph& g, const std::vector<int>& label, int which) {
    std::vector<int> index(label.size(), -1);
    int m = 0;
    for (std::size_t v = 0; v < label.size(); ++v)
        if (label[v] == which) index[v] = m++;
    std::vector<Edge> edges;
    for (auto [i, j] : g.edges()) {
        const int a = index[static_cast<std::size_t>(i)], b = index[static_cast<std::size_t>(j)];
        if (a >= 0 && b >= 0) edges.emplace_back(a, b);
    }
    return canonicalize(m, edges);
}

bool block_connected(const Adj& adj, const std::vector<int>& label, int which) {
    std::vector<int> members;
    for (std::size_t v = 0; v < label.size(); ++v)
        if (label[v] == which) members.push_back(static_cast<int>(v));
    if (members.empty()) return false;
    std::vector<bool> seen(label.size(), false);
    std::vector<int> stack{members.front()};
    seen[static_cast<std::size_t>(members.front())] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int u : adj[static_cast<std::size_t>(v)])
            if (!seen[static_cast<std::size_t>(u)] && label[static_cast<std::size_t>(u)] == which) {
                seen[static_cast<std::size_t>(u)] = true;
                ++reached;
                stack.push_back(u);
            }
    }
    return reached == members.size();
}

// Every set partition as a block label per vertex, blocks numbered by first
// appearance.
void set_partitions(int n, int v, int blocks, std::vector<int>& label, const std::function<void(int)>& visit) {
    if (v == n) {
        visit(blocks);
        return;
    }
    for (int b = 0; b <= blocks; ++b) {
        label[static_cast<std::size_t>(v)] = b;
        set_partitions(n, v + 1, b == blocks ? blocks + 1 : blocks, label, visit);
    }
}

}  // namespace

std::uint64_t count_proper_colorings_serial(const Graph& g, int k) {
    const int n = g.vertex_count();
    if (n == 0) return 1;
    if (k <= 0) return 0;
    const auto edges = g.edges();
    std::vector<int> color(static_cast<std::size_t>(n));
    std::uint64_t count = 0;
    for (long long code = 0; code < power(k, n); ++code) {
        decode(code, k, color);
        if (proper(edges, color)) ++count;
    }
    return count;
}

std::uint64_t count_proper_colorings(const Graph& g, int k) {
    const int n = g.vertex_count();
    if (n == 0) return 1;
    if (k <= 0) return 0;
    const auto edges = g.edges();
    const long long total = power(k, n);
    unsigned long long count = 0;
#pragma omp parallel reduction(+ : count) if (total > 4096)
    {
        std::vector<int> color(static_cast<std::size_t>(n));
#pragma omp for schedule(static)
        for (long long code = 0; code < total; ++code) {
            decode(code, k, color);
            if (proper(edges, color)) ++count;
        }
    }
    return count;
}

Poly packed_valid_expansion(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return Poly(1);
    const auto edges = g.edges();
    Poly r;
    std::vector<int> color(static_cast<std::size_t>(n));
    for (int m = 1; m <= n; ++m) {
        long long packed = 0;
        for (long long code = 0; code < power(m, n); ++code) {
            decode(code, m, color);
            std::vector<bool> used(static_cast<std::size_t>(m), false);
            for (int c : color) used[static_cast<std::size_t>(c)] = true;
            bool surjective = true;
            for (bool u : used) surjective = surjective && u;
            if (surjective && proper(edges, color)) ++packed;
        }
        r += hilbert(m) * Scalar(static_cast<long>(packed));
    }
    return r;
}

Poly chromatic_by_interpolation(const Graph& g) {
    const int n = g.vertex_count();
    Poly r;
    for (int i = 0; i <= n; ++i) {
        Poly basis(1);
        Scalar denom(1);
        for (int j = 0; j <= n; ++j) {
            if (j == i) continue;
            basis *= Poly{Scalar(-j), Scalar(1)};
            denom *= Scalar(i - j);
        }
        r += basis * (Scalar(static_cast<long>(count_proper_colorings_serial(g, i))) / denom);
    }
    return r;
}

Tensor2<Graph> graph_Delta(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> label(static_cast<std::size_t>(n));
    Tensor2<Graph> r;
    for (long long code = 0; code < power(2, n); ++code) {
        decode(code, 2, label);
        r.add({induced_by_label(g, label, 1), induced_by_label(g, label, 0)}, Scalar(1));
    }
    return r;
}

Tensor2<Graph> graph_delta(const Graph& g) {
    const int n = g.vertex_count();
    const Adj adj = adjacency_lists(g);
    const auto edges = g.edges();
    std::vector<int> label(static_cast<std::size_t>(n));
    Tensor2<Graph> r;
    set_partitions(n, 0, 0, label, [&](int blocks) {
        for (int b = 0; b < blocks; ++b)
            if (!block_connected(adj, label, b)) return;
        std::vector<Edge> quotient, restriction;
        for (auto [i, j] : edges) {
            const int a = label[static_cast<std::size_t>(i)], c = label[static_cast<std::size_t>(j)];
            if (a == c) {
                restriction.emplace_back(i, j);
            } else {
                const Edge e{std::min(a, c), std::max(a, c)};
                if (std::find(quotient.begin(), quotient.end(), e) == quotient.end()) quotient.push_back(e);
            }
        }
        r.add({canonicalize(blocks, quotient), canonicalize(n, restriction)}, Scalar(1));
    });
    return r;
}

TensorN<Graph> graph_reduced_iter(const Graph& g, int k) {
    const int n = g.vertex_count();
    const int parts = k + 1;
    TensorN<Graph> r;
    if (n == 0 || parts > n) return r;
    std::vector<int> label(static_cast<std::size_t>(n));
    for (long long code = 0; code < power(parts, n); ++code) {
        decode(code, parts, label);
        std::vector<int> size(static_cast<std::size_t>(parts), 0);
        for (int b : label) ++size[static_cast<std::size_t>(b)];
        bool nonempty = true;
        for (int s : size) nonempty = nonempty && s > 0;
        if (!nonempty) continue;
        std::vector<Graph> legs;
        for (int b = 0; b < parts; ++b) legs.push_back(induced_by_label(g, label, b));
        r.add(legs, Scalar(1));
    }
    return r;
}

WordElem quasishuffle_rec(const Word& x, const Word& y, const Semigroup& sg) {
    if (x.empty()) return WordElem(y);
    if (y.empty()) return WordElem(x);
    const Word xt(x.begin() + 1, x.end()), yt(y.begin() + 1, y.end());
    WordElem r;
    auto prepend = [&r](int a, const WordElem& tail) {
        for (const auto& [w, c] : tail) {
            Word v{a};
            v.insert(v.end(), w.begin(), w.end());
            r.add(v, c);
        }
    };
    prepend(x[0], quasishuffle_rec(xt, y, sg));
    prepend(y[0], quasishuffle_rec(x, yt, sg));
    prepend(sg.plus(x[0], y[0]), quasishuffle_rec(xt, yt, sg));
    return r;
}

Tensor2<Word> word_delta(const Word& w, const Semigroup& sg) {
    Tensor2<Word> r;
    if (w.empty()) {
        r.add({Word{}, Word{}}, Scalar(1));
        return r;
    }
    // Recursion on the first block w[0..i).
    std::function<void(std::size_t, Word, WordElem)> go = [&](std::size_t start, Word sums, WordElem right) {
        if (start == w.size()) {
            for (const auto& [v, c] : right) r.add({sums, v}, c);
            return;
        }
        for (std::size_t end = start + 1; end <= w.size(); ++end) {
            const Word block(w.begin() + static_cast<long>(start), w.begin() + static_cast<long>(end));
            int s = block[0];
            for (std::size_t j = 1; j < block.size(); ++j) s = sg.plus(s, block[j]);
            Word sums2 = sums;
            sums2.push_back(s);
            WordElem right2;
            for (const auto& [v, c] : right) right2.add_scaled(quasishuffle_rec(v, block, sg), c);
            go(end, sums2, right2);
        }
    };
    go(0, {}, WordElem(Word{}));
    return r;
}

}  // namespace dbialg::oracle
