#pragma once

// Acyclic orientations, single-source counts and the Greene-Zaslavsky check
// phi_chr(G) = (-1)^{|V|+1} phi~(G).

#include <cstdint>
#include <vector>

#include "dbialg/graph.hpp"

namespace dbialg {

/// Edge k of host.edges() is oriented i->j (i < j) unless bit k of `reversed`
/// is set.
struct Orientation {
    Graph host;
    std::uint64_t reversed = 0;

    /// Arcs (tail, head).
    std::vector<Edge> arcs() const;
};

bool is_acyclic(const Orientation& o);
/// Vertex bitmask of the sources (no incoming arc).
std::uint32_t sources(const Orientation& o);

std::vector<Orientation> acyclic_orientations(const Graph& g);

/// |O(g, x)|: acyclic orientations whose only source is x.
/// The default kernel is OpenMP-parallel over orientations; the serial one is
/// the reference.
std::uint64_t count_single_source(const Graph& g, int x);
std::uint64_t count_single_source_serial(const Graph& g, int x);

/// |O(g, 0)| for nonempty connected g, else 0.
std::uint64_t phi_tilde(const Graph& g);

/// True iff |O(g, x)| does not depend on x.
bool source_transfer_invariance(const Graph& g);

struct GZReport {
    Graph graph;
    Scalar phi_chr;
    std::uint64_t phi_tilde = 0;
    int sign = 1;
    bool ok = false;
};

/// phi_chr from the convolution engine (infinitesimal character), phi~ by
/// enumeration.
GZReport gz_verify(const Graph& g);
GZReport gz_verify(const Graph& g, const Scalar& phi_chr);

/// phi~(G) = phi~(G\e) + phi~(G/e) with all three counts enumerated;
/// throws if e is not an edge.
bool dc_phi_tilde(const Graph& g, const Edge& e);

}  // namespace dbialg
