#include "dbialg/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <mutex>
#include <set>
#include <unordered_map>

namespace dbialg {

namespace {

std::uint64_t prefix_mask(int labels) {
    const int bits = labels * (labels - 1) / 2;
    return bits >= 64 ? ~0ULL : ((1ULL << bits) - 1);
}

// Lexicographic comparison of edge codes restricted to `mask`, reading bit 0
// first and treating a set bit as larger.
int compare_code(std::uint64_t a, std::uint64_t b, std::uint64_t mask) {
    const std::uint64_t d = (a ^ b) & mask;
    if (d == 0) return 0;
    const std::uint64_t low = d & (~d + 1);
    return (a & low) ? 1 : -1;
}

// Branch and bound over labelings that list vertices by nonincreasing degree;
// keeps the lexicographically greatest edge code.
struct CanonSearch {
    int n = 0;
    std::uint32_t adj[kMaxGraphVertices] = {};
    int deg[kMaxGraphVertices] = {};
    int slot_deg[kMaxGraphVertices] = {};
    int perm[kMaxGraphVertices] = {};
    std::uint64_t best = 0;
    bool have = false;

    void run(int t, std::uint32_t used, std::uint64_t code) {
        if (t == n) {
            if (!have || compare_code(code, best, ~0ULL) > 0) {
                best = code;
                have = true;
            }
            return;
        }
        const std::uint64_t mask = prefix_mask(t + 1);
        for (int v = 0; v < n; ++v) {
            if ((used >> v) & 1U) continue;
            if (deg[v] != slot_deg[t]) continue;
            std::uint64_t c = code;
            for (int i = 0; i < t; ++i)
                if ((adj[perm[i]] >> v) & 1U) c |= 1ULL << edge_bit(i, t);
            if (have && compare_code(c, best, mask) < 0) continue;
            perm[t] = v;
            run(t + 1, used | (1U << v), c);
        }
    }
};

std::uint64_t canonical_code(const LabeledGraph& g) {
    CanonSearch s;
    s.n = g.n;
    for (int v = 0; v < g.n; ++v) {
        s.adj[v] = g.neighbors(v);
        s.deg[v] = std::popcount(s.adj[v]);
    }
    std::copy(s.deg, s.deg + g.n, s.slot_deg);
    std::sort(s.slot_deg, s.slot_deg + g.n, std::greater<>());
    s.run(0, 0, 0);
    return s.best;
}

// Function-local so canonicalization works during static initialization.
struct CanonMemo {
    std::shared_mutex mu;
    std::unordered_map<std::uint64_t, std::uint64_t> codes;
};
CanonMemo& canon_memo() {
    static CanonMemo memo;
    return memo;
}
constexpr std::size_t kCanonMemoLimit = 1U << 22;

std::uint64_t memo_key(const LabeledGraph& g) {
    return g.edges | (static_cast<std::uint64_t>(g.n) << 56);
}

}  // namespace

bool LabeledGraph::has_edge(int i, int j) const {
    if (i == j || i < 0 || j < 0 || i >= n || j >= n) return false;
    if (i > j) std::swap(i, j);
    return (edges >> edge_bit(i, j)) & 1ULL;
}

std::uint32_t LabeledGraph::neighbors(int v) const {
    std::uint32_t r = 0;
    for (int u = 0; u < n; ++u)
        if (has_edge(u, v)) r |= 1U << u;
    return r;
}

int LabeledGraph::edge_count() const { return std::popcount(edges); }

std::vector<Edge> LabeledGraph::edge_list() const {
    std::vector<Edge> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((edges >> edge_bit(i, j)) & 1ULL) out.emplace_back(i, j);
    return out;
}

int Graph::edge_count() const { return std::popcount(edges_); }
std::vector<Edge> Graph::edges() const { return labeled().edge_list(); }
bool Graph::is_connected() const { return dbialg::is_connected(labeled()); }

std::string Graph::str() const {
    std::string s = std::to_string(n_) + ";";
    bool first = true;
    for (auto [i, j] : edges()) {
        s += first ? " " : ",";
        s += std::to_string(i) + "-" + std::to_string(j);
        first = false;
    }
    return s;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

int parse_int(std::string_view s, std::string_view whole) {
    s = trim(s);
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || p != s.data() + s.size())
        throw MalformedGraph("malformed graph \"" + std::string(whole) + "\": bad integer '" + std::string(s) + "'");
    return v;
}

}  // namespace

Graph Graph::parse(std::string_view text) {
    const auto semi = text.find(';');
    const std::string_view head = semi == std::string_view::npos ? text : text.substr(0, semi);
    const std::string_view tail = semi == std::string_view::npos ? std::string_view{} : text.substr(semi + 1);
    const int n = parse_int(head, text);
    std::vector<Edge> edges;
    std::string_view rest = trim(tail);
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const std::string_view item = trim(rest.substr(0, comma));
        const auto dash = item.find('-');
        if (dash == std::string_view::npos)
            throw MalformedGraph("malformed graph \"" + std::string(text) + "\": edge '" + std::string(item) +
                                 "' is not of the form u-v");
        edges.emplace_back(parse_int(item.substr(0, dash), text), parse_int(item.substr(dash + 1), text));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
        if (trim(rest).empty()) throw MalformedGraph("malformed graph \"" + std::string(text) + "\": trailing comma");
    }
    return canonicalize(n, edges);
}

Graph canonical_form(const LabeledGraph& g) {
    const std::uint64_t key = memo_key(g);
    CanonMemo& memo = canon_memo();
    {
        std::shared_lock lock(memo.mu);
        auto it = memo.codes.find(key);
        if (it != memo.codes.end()) return Graph(g.n, it->second);
    }
    const std::uint64_t code = canonical_code(g);
    std::unique_lock lock(memo.mu);
    if (memo.codes.size() >= kCanonMemoLimit) memo.codes.clear();
    memo.codes.emplace(key, code);
    return Graph(g.n, code);
}

Graph canonicalize(int vertex_count, std::span<const Edge> edges) {
    if (vertex_count < 0) throw MalformedGraph("negative vertex count");
    if (vertex_count > kMaxGraphVertices)
        throw MalformedGraph("graphs are limited to " + std::to_string(kMaxGraphVertices) + " vertices");
    LabeledGraph g{vertex_count, 0};
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
            throw MalformedGraph("edge " + std::to_string(u) + "-" + std::to_string(v) + " references a vertex outside 0.." +
                                 std::to_string(vertex_count - 1));
        if (u == v) throw MalformedGraph("loop at vertex " + std::to_string(u));
        const std::uint64_t bit = 1ULL << edge_bit(std::min(u, v), std::max(u, v));
        if (g.edges & bit) throw MalformedGraph("repeated edge " + std::to_string(u) + "-" + std::to_string(v));
        g.edges |= bit;
    }
    return canonical_form(g);
}

namespace graphs {

Graph empty() { return Graph{}; }
Graph dot() { return edgeless(1); }
Graph edgeless(int n) { return canonicalize(n, {}); }

Graph complete(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return canonicalize(n, e);
}

Graph path(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return canonicalize(n, e);
}

Graph cycle(int n) {
    if (n < 3) throw MalformedGraph("a cycle needs at least 3 vertices");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return canonicalize(n, e);
}

Graph star(int leaves) {
    std::vector<Edge> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return canonicalize(leaves + 1, e);
}

Graph paw() {
    const Edge e[] = {{0, 1}, {1, 2}, {0, 2}, {2, 3}};
    return canonicalize(4, e);
}

Graph diamond() {
    const Edge e[] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
    return canonicalize(4, e);
}

}  // namespace graphs

Graph disjoint_union(const Graph& g, const Graph& h) {
    const int n = g.vertex_count() + h.vertex_count();
    if (n > kMaxGraphVertices)
        throw MalformedGraph("disjoint union exceeds " + std::to_string(kMaxGraphVertices) + " vertices");
    LabeledGraph u{n, g.edge_mask()};
    const int off = g.vertex_count();
    for (auto [i, j] : h.edges()) u.edges |= 1ULL << edge_bit(i + off, j + off);
    return canonical_form(u);
}

GraphElem product(const GraphElem& x, const GraphElem& y) {
    GraphElem r;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) r.add(disjoint_union(a, b), ca * cb);
    return r;
}

LabeledGraph induced_subgraph(const LabeledGraph& g, std::uint32_t subset) {
    int relabel[kMaxGraphVertices];
    int m = 0;
    for (int v = 0; v < g.n; ++v) relabel[v] = ((subset >> v) & 1U) ? m++ : -1;
    LabeledGraph r{m, 0};
    for (auto [i, j] : g.edge_list())
        if (relabel[i] >= 0 && relabel[j] >= 0) r.edges |= 1ULL << edge_bit(relabel[i], relabel[j]);
    return r;
}

namespace {

// Vertices reachable from the lowest vertex of `within`.
std::uint32_t reach(const std::uint32_t* adj, std::uint32_t within) {
    if (within == 0) return 0;
    std::uint32_t seen = within & (~within + 1);
    std::uint32_t frontier = seen;
    while (frontier) {
        std::uint32_t next = 0;
        for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
        next &= within & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

void adjacency(const LabeledGraph& g, std::uint32_t* adj) {
    for (int v = 0; v < g.n; ++v) adj[v] = 0;
    for (auto [i, j] : g.edge_list()) {
        adj[i] |= 1U << j;
        adj[j] |= 1U << i;
    }
}

}  // namespace

bool is_connected(const LabeledGraph& g) {
    if (g.n == 0) return false;
    std::uint32_t adj[kMaxGraphVertices];
    adjacency(g, adj);
    const std::uint32_t all = (1U << g.n) - 1;
    return reach(adj, all) == all;
}

std::vector<std::uint32_t> component_masks(const LabeledGraph& g) {
    std::uint32_t adj[kMaxGraphVertices];
    adjacency(g, adj);
    std::vector<std::uint32_t> out;
    std::uint32_t left = g.n ? (1U << g.n) - 1 : 0;
    while (left) {
        const std::uint32_t c = reach(adj, left);
        out.push_back(c);
        left &= ~c;
    }
    return out;
}

std::vector<Graph> connected_components(const Graph& g) {
    std::vector<Graph> out;
    for (std::uint32_t c : component_masks(g.labeled())) out.push_back(canonical_form(induced_subgraph(g.labeled(), c)));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ConnPartition> connected_partitions(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<ConnPartition> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    std::uint32_t adj[kMaxGraphVertices];
    adjacency(g.labeled(), adj);
    // Restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    std::vector<std::uint32_t> blocks;
    while (true) {
        int nb = 0;
        for (int v : a) nb = std::max(nb, v + 1);
        blocks.assign(static_cast<std::size_t>(nb), 0);
        for (int v = 0; v < n; ++v) blocks[static_cast<std::size_t>(a[static_cast<std::size_t>(v)])] |= 1U << v;
        bool ok = true;
        for (std::uint32_t b : blocks)
            if (reach(adj, b) != b) { ok = false; break; }
        if (ok) out.push_back({blocks});
        // next string
        int i = n - 1;
        for (; i > 0; --i) {
            int mx = 0;
            for (int j = 0; j < i; ++j) mx = std::max(mx, a[static_cast<std::size_t>(j)]);
            if (a[static_cast<std::size_t>(i)] <= mx) {
                ++a[static_cast<std::size_t>(i)];
                for (int j = i + 1; j < n; ++j) a[static_cast<std::size_t>(j)] = 0;
                break;
            }
        }
        if (i == 0) break;
    }
    return out;
}

namespace {

std::vector<int> block_of(const LabeledGraph& g, const ConnPartition& p) {
    std::vector<int> b(static_cast<std::size_t>(g.n), -1);
    for (std::size_t k = 0; k < p.blocks.size(); ++k)
        for (std::uint32_t m = p.blocks[k]; m; m &= m - 1) b[static_cast<std::size_t>(std::countr_zero(m))] = static_cast<int>(k);
    return b;
}

}  // namespace

LabeledGraph contract_partition(const LabeledGraph& g, const ConnPartition& p) {
    const auto b = block_of(g, p);
    LabeledGraph r{static_cast<int>(p.blocks.size()), 0};
    for (auto [i, j] : g.edge_list()) {
        const int x = b[static_cast<std::size_t>(i)], y = b[static_cast<std::size_t>(j)];
        if (x != y) r.edges |= 1ULL << edge_bit(std::min(x, y), std::max(x, y));
    }
    return r;
}

LabeledGraph restrict_partition(const LabeledGraph& g, const ConnPartition& p) {
    const auto b = block_of(g, p);
    LabeledGraph r{g.n, 0};
    for (auto [i, j] : g.edge_list())
        if (b[static_cast<std::size_t>(i)] == b[static_cast<std::size_t>(j)]) r.edges |= 1ULL << edge_bit(i, j);
    return r;
}

Tensor2<Graph> coproduct_Delta(const Graph& g) {
    const LabeledGraph lg = g.labeled();
    const std::uint32_t all = g.vertex_count() ? (1U << g.vertex_count()) - 1 : 0;
    Tensor2<Graph> r;
    for (std::uint32_t s = 0;; ++s) {
        r.add({canonical_form(induced_subgraph(lg, s)), canonical_form(induced_subgraph(lg, all & ~s))}, Scalar(1));
        if (s == all) break;
    }
    return r;
}

Tensor2<Graph> coproduct_delta(const Graph& g) {
    const LabeledGraph lg = g.labeled();
    Tensor2<Graph> r;
    for (const auto& p : connected_partitions(g))
        r.add({canonical_form(contract_partition(lg, p)), canonical_form(restrict_partition(lg, p))}, Scalar(1));
    return r;
}

Scalar counit_Delta(const GraphElem& x) { return x.coeff(Graph{}); }

Scalar counit_delta(const GraphElem& x) {
    Scalar s(0);
    for (const auto& [g, c] : x)
        if (g.is_edgeless()) s += c;
    return s;
}

namespace {

void require_edge(const Graph& g, const Edge& e) {
    if (!g.has_edge(e.first, e.second))
        throw std::invalid_argument(std::to_string(e.first) + "-" + std::to_string(e.second) + " is not an edge of " +
                                    g.str());
}

}  // namespace

Graph delete_edge(const Graph& g, const Edge& e) {
    require_edge(g, e);
    LabeledGraph l = g.labeled();
    l.edges &= ~(1ULL << edge_bit(std::min(e.first, e.second), std::max(e.first, e.second)));
    return canonical_form(l);
}

Graph contract_edge(const Graph& g, const Edge& e) {
    require_edge(g, e);
    ConnPartition p;
    const std::uint32_t pair = (1U << e.first) | (1U << e.second);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (v == std::min(e.first, e.second)) p.blocks.push_back(pair);
        else if (!((pair >> v) & 1U)) p.blocks.push_back(1U << v);
    }
    return canonical_form(contract_partition(g.labeled(), p));
}

namespace {

struct ClassTable {
    std::mutex mu;
    std::vector<std::vector<Graph>> by_size{{Graph{}}};
};
ClassTable& class_table() {
    static ClassTable t;
    return t;
}

}  // namespace

std::vector<Graph> all_graphs(int n) {
    if (n < 0) return {};
    if (n > kMaxGraphVertices) throw MalformedGraph("graphs are limited to " + std::to_string(kMaxGraphVertices) + " vertices");
    ClassTable& t = class_table();
    std::lock_guard lock(t.mu);
    auto& classes_by_size = t.by_size;
    // Every graph on n vertices is a graph on n-1 vertices plus one new vertex.
    while (static_cast<int>(classes_by_size.size()) <= n) {
        const int m = static_cast<int>(classes_by_size.size());
        std::set<Graph> next;
        for (const Graph& h : classes_by_size.back())
            for (std::uint32_t nb = 0; nb < (1U << (m - 1)); ++nb) {
                LabeledGraph l{m, h.edge_mask()};
                for (int i = 0; i < m - 1; ++i)
                    if ((nb >> i) & 1U) l.edges |= 1ULL << edge_bit(i, m - 1);
                next.insert(canonical_form(l));
            }
        classes_by_size.emplace_back(next.begin(), next.end());
    }
    return classes_by_size[static_cast<std::size_t>(n)];
}

std::vector<Graph> all_connected_graphs(int n) {
    std::vector<Graph> out;
    for (const Graph& g : all_graphs(n))
        if (g.is_connected()) out.push_back(g);
    return out;
}

const Tensor2<Graph>& GraphCarrier::coproduct(const Graph& g) const {
    {
        std::shared_lock lock(mu_);
        auto it = delta_memo_.find(g);
        if (it != delta_memo_.end()) return *it->second;
    }
    auto t = std::make_unique<Tensor2<Graph>>(coproduct_Delta(g));
    std::unique_lock lock(mu_);
    auto [it, inserted] = delta_memo_.try_emplace(g, std::move(t));
    return *it->second;
}

const Tensor2<Graph>& GraphCarrier::internal_coproduct(const Graph& g) const {
    {
        std::shared_lock lock(mu_);
        auto it = idelta_memo_.find(g);
        if (it != idelta_memo_.end()) return *it->second;
    }
    auto t = std::make_unique<Tensor2<Graph>>(coproduct_delta(g));
    std::unique_lock lock(mu_);
    auto [it, inserted] = idelta_memo_.try_emplace(g, std::move(t));
    return *it->second;
}

}  // namespace dbialg
