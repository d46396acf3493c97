#include "dbialg/morphisms.hpp"

#include <mutex>

namespace dbialg {

Poly qsym_to_poly(const WordElem& x) {
    Poly r;
    for (const auto& [w, c] : x) r += hilbert(static_cast<int>(w.size())) * c;
    return r;
}

namespace {

struct DcMemo {
    std::mutex mu;
    std::map<Graph, Poly> values;
};
DcMemo& dc_memo() {
    static DcMemo m;
    return m;
}

}  // namespace

Poly chromatic_dc(const Graph& g) {
    DcMemo& memo = dc_memo();
    {
        std::lock_guard lock(memo.mu);
        auto it = memo.values.find(g);
        if (it != memo.values.end()) return it->second;
    }
    Poly r;
    if (g.is_edgeless()) {
        r = Poly::monomial(g.vertex_count());
    } else {
        const Edge e = g.edges().front();
        r = chromatic_dc(delete_edge(g, e)) - chromatic_dc(contract_edge(g, e));
    }
    std::lock_guard lock(memo.mu);
    return memo.values.emplace(g, std::move(r)).first->second;
}

Engine<GraphCarrier>::Form graph_character(const Engine<GraphCarrier>& e,
                                           std::function<Scalar(const Graph&)> on_connected) {
    return e.form([f = std::move(on_connected)](const Graph& g) {
        Scalar v(1);
        for (const Graph& c : connected_components(g)) v *= f(c);
        return v;
    });
}

Engine<GraphCarrier>::Form circ_inverse(const Engine<GraphCarrier>& e, const Engine<GraphCarrier>::Form& lambda) {
    if (lambda(graphs::dot()).is_zero()) throw PreconditionError("lambda(•) = 0: not invertible for ⋆");
    const GraphCarrier* c = &e.carrier();
    // (lambda ⋆ mu)(G) = lambda(•^c) mu(G) + terms with fewer edges in the
    // right leg, the diagonal one coming from the partition into components.
    return e.make_recursive<Scalar>([c, lambda](const Engine<GraphCarrier>::Form& self, const Graph& g) {
        Scalar rest(0), diag(0);
        for (const auto& [xy, k] : c->internal_coproduct(g)) {
            if (xy.second == g) diag += lambda(xy.first) * k;
            else rest += lambda(xy.first) * self(xy.second) * k;
        }
        return (c->internal_counit(g) - rest) / diag;
    });
}

Hypothesis3Report hypothesis3_witness() {
    GraphCarrier gc;
    Engine<GraphCarrier> e(gc, 2);
    const auto phi = abs_qsym(e, e.counit_delta());
    const Graph k2 = graphs::complete(2);
    const Semigroup q = Semigroup::qsym();

    Hypothesis3Report r;
    r.phi_k2 = phi(k2);
    for (const auto& [w, c] : r.phi_k2) r.delta_of_phi.add_scaled(internal_delta(w, q), c);
    for (const auto& [xy, k] : gc.internal_coproduct(k2))
        for (const auto& [a, ca] : phi(xy.first))
            for (const auto& [b, cb] : phi(xy.second)) r.phi_of_delta.add({a, b}, ca * cb * k);
    r.difference = r.delta_of_phi - r.phi_of_delta;
    return r;
}

}  // namespace dbialg
