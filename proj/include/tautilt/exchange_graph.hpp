#pragma once

#include <set>

#include "tautilt/fan.hpp"

namespace tautilt {

// Exchange graph on the chambers: nodes are tau-tilting pairs with their
// torsion-class descriptors, one edge per shared facet. The stored arrow
// follows the definition of the chamber quiver (larger torsion class to
// smaller); a green crossing moves the other way.
template <class K>
struct ExchangeGraph {
    std::vector<PairRef> nodes;
    std::vector<TorsionClassDescriptor> classes;

    struct Edge {
        int bigger = -1, smaller = -1;  // node indices; arrow bigger -> smaller
        PairRef almost;
        DimVector brick_dims;
        Rep<K> brick;
        bool cover_certified = false;
    };
    std::vector<Edge> edges;

    bool complete = false;
    int source = -1;  // (0, A): empty torsion class
    int sink = -1;    // (A, 0): everything

    std::vector<int> green_out(int node) const {  // edges leaving `node` upward
        std::vector<int> out;
        for (size_t e = 0; e < edges.size(); ++e)
            if (edges[e].smaller == node) out.push_back(static_cast<int>(e));
        return out;
    }
};

template <class K>
ExchangeGraph<K> build_exchange_graph(const Catalog<K>& cat, const Fan<K>& fan,
                                      SubmoduleOptions sub_opt = {}) {
    ExchangeGraph<K> g;
    g.nodes = fan.pairs;
    g.complete = fan.complete;
    for (const auto& p : fan.pairs) g.classes.push_back(torsion_class(cat, p));

    for (size_t i = 0; i < g.nodes.size(); ++i) {
        if (g.classes[i].count() == 0 && static_cast<int>(g.nodes[i].shifted.size()) == cat.n())
            g.source = static_cast<int>(i);
        if (g.classes[i].count() == static_cast<int>(cat.corpus.size()) &&
            static_cast<int>(g.nodes[i].modules.size()) == cat.n())
            g.sink = static_cast<int>(i);
    }

    for (const auto& facet : fan.facets) {
        if (facet.owners.size() != 2) continue;
        WallInfo<K> w = wall_of_facet(cat, fan, facet.owners[0].first,
                                      facet.owners[1].first, sub_opt);
        typename ExchangeGraph<K>::Edge e;
        e.bigger = w.bigger_pair;
        e.smaller = w.smaller_pair;
        e.almost = w.almost;
        e.brick = w.wall_module;
        e.brick_dims = w.wall_dims;
        // cover: no node class strictly between the two
        e.cover_certified = true;
        for (size_t k = 0; k < g.nodes.size(); ++k) {
            if (static_cast<int>(k) == e.bigger || static_cast<int>(k) == e.smaller)
                continue;
            const auto& t = g.classes[k];
            if (g.classes[e.smaller].subset_of(t) && t.subset_of(g.classes[e.bigger]) &&
                !(t == g.classes[e.smaller]) && !(t == g.classes[e.bigger]))
                e.cover_certified = false;
        }
        g.edges.push_back(std::move(e));
    }
    return g;
}

// The undirected facet adjacency and the pairs-sharing-an-almost-pair
// relation must coincide; test support.
template <class K>
bool mutation_graph_matches(const Catalog<K>& cat, const ExchangeGraph<K>& g) {
    std::set<std::pair<int, int>> from_edges;
    for (const auto& e : g.edges)
        from_edges.insert({std::min(e.bigger, e.smaller), std::max(e.bigger, e.smaller)});
    std::set<std::pair<int, int>> from_summands;
    for (size_t i = 0; i < g.nodes.size(); ++i)
        for (size_t j = i + 1; j < g.nodes.size(); ++j) {
            int shared = 0;
            for (int m : g.nodes[i].modules)
                for (int m2 : g.nodes[j].modules) shared += (m == m2);
            for (int v : g.nodes[i].shifted)
                for (int v2 : g.nodes[j].shifted) shared += (v == v2);
            if (shared == cat.n() - 1)
                from_summands.insert({static_cast<int>(i), static_cast<int>(j)});
        }
    return from_edges == from_summands;
}

}  // namespace tautilt
