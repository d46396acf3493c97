#include "dbialg/orientations.hpp"

#include <bit>
#include <stdexcept>

#include "dbialg/engine.hpp"
#include "dbialg/morphisms.hpp"

namespace dbialg {

namespace {

constexpr int kMaxOrientedEdges = 30;

struct ArcTables {
    int n = 0;
    int m = 0;
    int tail[kMaxGraphVertices * (kMaxGraphVertices - 1) / 2];
    int head[kMaxGraphVertices * (kMaxGraphVertices - 1) / 2];
};

ArcTables tables(const Graph& g) {
    ArcTables t;
    t.n = g.vertex_count();
    for (auto [i, j] : g.edges()) {
        t.tail[t.m] = i;
        t.head[t.m] = j;
        ++t.m;
    }
    if (t.m > kMaxOrientedEdges) throw std::length_error("too many edges to enumerate orientations");
    return t;
}

// Predecessor masks for orientation `rev`; returns the source mask and
// whether the orientation is acyclic (iterative peeling of sources).
struct Peel {
    bool acyclic;
    std::uint32_t sources;
};

Peel peel(const ArcTables& t, std::uint64_t rev) {
    std::uint32_t pred[kMaxGraphVertices] = {};
    for (int k = 0; k < t.m; ++k) {
        const bool r = (rev >> k) & 1ULL;
        const int from = r ? t.head[k] : t.tail[k];
        const int to = r ? t.tail[k] : t.head[k];
        pred[to] |= 1U << from;
    }
    std::uint32_t src = 0;
    for (int v = 0; v < t.n; ++v)
        if (!pred[v]) src |= 1U << v;
    std::uint32_t left = t.n ? (1U << t.n) - 1 : 0;
    while (left) {
        std::uint32_t free = 0;
        for (std::uint32_t l = left; l; l &= l - 1) {
            const int v = std::countr_zero(l);
            if (!(pred[v] & left)) free |= 1U << v;
        }
        if (!free) return {false, src};
        left &= ~free;
    }
    return {true, src};
}

}  // namespace

std::vector<Edge> Orientation::arcs() const {
    std::vector<Edge> out;
    int k = 0;
    for (auto [i, j] : host.edges()) {
        out.push_back(((reversed >> k) & 1ULL) ? Edge{j, i} : Edge{i, j});
        ++k;
    }
    return out;
}

bool is_acyclic(const Orientation& o) { return peel(tables(o.host), o.reversed).acyclic; }

std::uint32_t sources(const Orientation& o) { return peel(tables(o.host), o.reversed).sources; }

std::vector<Orientation> acyclic_orientations(const Graph& g) {
    const ArcTables t = tables(g);
    std::vector<Orientation> out;
    for (std::uint64_t rev = 0; rev < (1ULL << t.m); ++rev)
        if (peel(t, rev).acyclic) out.push_back({g, rev});
    return out;
}

std::uint64_t count_single_source_serial(const Graph& g, int x) {
    if (x < 0 || x >= g.vertex_count()) throw std::out_of_range("source vertex outside the graph");
    const ArcTables t = tables(g);
    const std::uint32_t want = 1U << x;
    std::uint64_t count = 0;
    for (std::uint64_t rev = 0; rev < (1ULL << t.m); ++rev) {
        const Peel p = peel(t, rev);
        if (p.acyclic && p.sources == want) ++count;
    }
    return count;
}

std::uint64_t count_single_source(const Graph& g, int x) {
    if (x < 0 || x >= g.vertex_count()) throw std::out_of_range("source vertex outside the graph");
    const ArcTables t = tables(g);
    const std::uint32_t want = 1U << x;
    const long long total = 1LL << t.m;
    unsigned long long count = 0;
#pragma omp parallel for reduction(+ : count) schedule(static) if (total > 4096)
    for (long long rev = 0; rev < total; ++rev) {
        const Peel p = peel(t, static_cast<std::uint64_t>(rev));
        if (p.acyclic && p.sources == want) ++count;
    }
    return count;
}

std::uint64_t phi_tilde(const Graph& g) {
    if (g.is_empty() || !g.is_connected()) return 0;
    return count_single_source(g, 0);
}

bool source_transfer_invariance(const Graph& g) {
    if (g.vertex_count() <= 1) return true;
    const std::uint64_t first = count_single_source(g, 0);
    for (int x = 1; x < g.vertex_count(); ++x)
        if (count_single_source(g, x) != first) return false;
    return true;
}

GZReport gz_verify(const Graph& g, const Scalar& phi_chr) {
    GZReport r;
    r.graph = g;
    r.phi_chr = phi_chr;
    r.phi_tilde = phi_tilde(g);
    r.sign = (g.vertex_count() % 2 == 1) ? 1 : -1;
    r.ok = phi_chr == Scalar(r.sign) * Scalar(static_cast<long>(r.phi_tilde));
    return r;
}

GZReport gz_verify(const Graph& g) {
    GraphCarrier gc;
    Engine<GraphCarrier> e(gc, g.vertex_count());
    return gz_verify(g, phi_inf(e)(g));
}

bool dc_phi_tilde(const Graph& g, const Edge& e) {
    const Graph del = delete_edge(g, e);
    const Graph con = contract_edge(g, e);
    return phi_tilde(g) == phi_tilde(del) + phi_tilde(con);
}

}  // namespace dbialg
