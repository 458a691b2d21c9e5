#pragma once

#include <functional>
#include <map>

#include "tautilt/exchange_graph.hpp"

namespace tautilt {

// A maximal green sequence: a chain of nodes from (0,A) to (A,0) whose steps
// are cover edges crossed in the green direction.
struct GreenSequence {
    std::vector<int> node_chain;  // r+1 nodes
    std::vector<int> edge_chain;  // r edges

    int length() const { return static_cast<int>(edge_chain.size()); }
};

// All maximal green sequences. Refuses on incomplete graphs: without the
// full chamber list, maximality of a chain cannot be certified.
template <class K>
std::vector<GreenSequence> enumerate_mgs(const ExchangeGraph<K>& g) {
    if (!g.complete)
        throw BudgetError(
            "maximal green sequences need a complete exchange graph; the fan is "
            "partial at this catalog bound (cannot certify maximality)");
    engine_check(g.source >= 0 && g.sink >= 0, "exchange graph missing (0,A) or (A,0)");
    for (const auto& e : g.edges)
        engine_check(e.cover_certified, "non-cover edge in a complete exchange graph");

    std::vector<GreenSequence> out;
    GreenSequence cur;
    cur.node_chain.push_back(g.source);
    std::function<void(int)> dfs = [&](int node) {
        if (node == g.sink) {
            out.push_back(cur);
            return;
        }
        for (int e : g.green_out(node)) {
            cur.node_chain.push_back(g.edges[e].bigger);
            cur.edge_chain.push_back(e);
            dfs(g.edges[e].bigger);
            cur.node_chain.pop_back();
            cur.edge_chain.pop_back();
        }
    };
    dfs(g.source);
    std::sort(out.begin(), out.end(), [](const GreenSequence& a, const GreenSequence& b) {
        return std::tie(a.edge_chain) < std::tie(b.edge_chain);
    });
    return out;
}

// Searches a (possibly partial) graph for any green chain from (0,A) to
// (A,0). Used as a consistency probe on truncated catalogs; finding none
// proves nothing by itself, but a hit would contradict a no-MGS verdict.
template <class K>
std::optional<GreenSequence> green_chain_search(const ExchangeGraph<K>& g) {
    if (g.source < 0 || g.sink < 0) return std::nullopt;
    GreenSequence cur;
    cur.node_chain.push_back(g.source);
    std::optional<GreenSequence> found;
    std::function<void(int)> dfs = [&](int node) {
        if (found) return;
        if (node == g.sink) {
            found = cur;
            return;
        }
        for (int e : g.green_out(node)) {
            cur.node_chain.push_back(g.edges[e].bigger);
            cur.edge_chain.push_back(e);
            dfs(g.edges[e].bigger);
            cur.node_chain.pop_back();
            cur.edge_chain.pop_back();
        }
    };
    dfs(g.source);
    return found;
}

// Piecewise-linear path through chamber barycenters with its crossing events.
struct PLPath {
    std::vector<DimVector> vertices;  // corner points, each inside a chamber or
                                      // (for inserted split points) on a facet
    struct Crossing {
        Rational t;  // global parameter
        int segment = -1;
        DimVector wall_dims;  // dimension vector of the crossed wall's module
        int sign = 0;         // +1 green, -1 red
    };
    std::vector<Crossing> crossings;
};

inline Theta path_point(const PLPath& p, const Rational& t) {
    int r = static_cast<int>(p.vertices.size()) - 1;
    engine_check(r >= 1, "path needs at least one segment");
    Rational scaled = t * Rational(r);
    long long seg = scaled.num() / scaled.den();  // floor for t in [0,1]
    if (seg >= r) seg = r - 1;
    Rational local = scaled - Rational(seg);
    Theta out;
    for (int i = 0; i < static_cast<int>(p.vertices[0].size()); ++i)
        out.push_back((Rational(1) - local) * Rational(p.vertices[seg][i]) +
                      local * Rational(p.vertices[seg + 1][i]));
    return out;
}

// Sign of <segment direction, [N]>; the crossing must actually happen on the
// wall, otherwise there is nothing to classify.
template <class K>
int crossing_sign(const DimVector& from, const DimVector& to, const Rep<K>& wall_module,
                  SubmoduleOptions sub_opt = {}) {
    const DimVector& nd = wall_module.dims;
    long long a = 0, b = 0;  // pairing at the endpoints
    for (size_t i = 0; i < nd.size(); ++i) {
        a += static_cast<long long>(from[i]) * nd[i];
        b += static_cast<long long>(to[i]) * nd[i];
    }
    long long deriv = b - a;
    if (deriv == 0)
        throw DomainError("segment is parallel to the wall hyperplane (not transversal)");
    if ((a > 0 && b > 0) || (a < 0 && b < 0))
        throw DomainError("no crossing: segment stays on one side of the hyperplane");
    // crossing point: t = a / (a - b)
    Rational t = Rational(a) / Rational(a - b);
    Theta pt;
    for (size_t i = 0; i < nd.size(); ++i)
        pt.push_back((Rational(1) - t) * Rational(from[i]) + t * Rational(to[i]));
    if (!is_semistable(pt, wall_module, sub_opt))
        throw DomainError("no crossing: hyperplane met outside the stability space");
    return deriv > 0 ? 1 : -1;
}

namespace detail {

// all crossing events of one straight segment against the corpus walls,
// grouped by parameter
template <class K>
struct SegmentEvents {
    // parameter -> list of corpus indices whose stability space is met
    std::vector<std::pair<Rational, std::vector<int>>> events;
    bool tangency = false;  // some wall met with zero derivative
};

template <class K>
SegmentEvents<K> segment_events(const DimVector& from, const DimVector& to,
                                const std::vector<Rep<K>>& corpus,
                                SubmoduleOptions sub_opt) {
    SegmentEvents<K> out;
    std::map<Rational, std::vector<int>> by_t;
    for (size_t w = 0; w < corpus.size(); ++w) {
        const DimVector& nd = corpus[w].dims;
        long long a = 0, b = 0;
        for (size_t i = 0; i < nd.size(); ++i) {
            a += static_cast<long long>(from[i]) * nd[i];
            b += static_cast<long long>(to[i]) * nd[i];
        }
        if (a == b) {
            if (a == 0) {
                // the whole segment lies on the hyperplane: tangency if the
                // segment actually meets the stability space
                Theta mid;
                for (size_t i = 0; i < nd.size(); ++i)
                    mid.push_back(Rational(from[i] + to[i], 2));
                if (is_semistable(mid, corpus[w], sub_opt)) out.tangency = true;
            }
            continue;
        }
        Rational t = Rational(a) / Rational(a - b);
        if (t < Rational(0) || t > Rational(1)) continue;
        Theta pt;
        for (size_t i = 0; i < nd.size(); ++i)
            pt.push_back((Rational(1) - t) * Rational(from[i]) + t * Rational(to[i]));
        if (is_semistable(pt, corpus[w], sub_opt))
            by_t[t].push_back(static_cast<int>(w));
    }
    for (auto& [t, ws] : by_t) out.events.emplace_back(t, ws);
    return out;
}

}  // namespace detail

// Emits the piecewise-linear path of a green sequence: straight segments
// between chamber barycenters, one green crossing per step. If a segment
// happens to meet extra corpus walls it is split through the shared facet's
// barycenter; a segment that stays dirty after the split is an engine bug.
// Between crossings the torsion class at sampled points must equal the
// stage's class.
template <class K>
PLPath mgs_to_path(const Catalog<K>& cat, const ExchangeGraph<K>& g,
                   const GreenSequence& seq, SubmoduleOptions sub_opt = {}) {
    const int r = seq.length();
    engine_check(r >= 1, "empty green sequence");

    // corner points, with facet-barycenter splits where needed
    std::vector<DimVector> verts;
    verts.push_back(pair_barycenter(cat, g.nodes[seq.node_chain[0]]));
    for (int s = 0; s < r; ++s) {
        DimVector next = pair_barycenter(cat, g.nodes[seq.node_chain[s + 1]]);
        auto ev = detail::segment_events(verts.back(), next, cat.corpus, sub_opt);
        engine_check(!ev.tangency, "segment tangent to a wall");
        if (ev.events.size() > 1) {
            DimVector mid = pair_barycenter(cat, g.edges[seq.edge_chain[s]].almost);
            verts.push_back(std::move(mid));
        }
        verts.push_back(std::move(next));
    }

    PLPath path;
    path.vertices = verts;
    const int segs = static_cast<int>(verts.size()) - 1;

    int stage = 0;  // index into seq.node_chain
    for (int s = 0; s < segs; ++s) {
        auto ev = detail::segment_events(verts[s], verts[s + 1], cat.corpus, sub_opt);
        engine_check(!ev.tangency, "segment tangent to a wall after splitting");
        for (const auto& [t_local, walls] : ev.events) {
            // skip events at the segment start that were counted by the
            // previous split point (the split vertex lies on the wall)
            if (t_local == Rational(0) && s > 0) continue;
            engine_check(stage < r, "more crossings than green steps");
            const auto& edge = g.edges[seq.edge_chain[stage]];
            // all met walls carry proportional dimension vectors
            for (int w : walls)
                engine_check(proportional(cat.corpus[w].dims, edge.brick_dims),
                             "foreign wall met at a crossing");
            PLPath::Crossing c;
            c.segment = s;
            c.t = (Rational(s) + t_local) / Rational(segs);
            c.wall_dims = edge.brick_dims;
            long long deriv = 0;
            for (int i = 0; i < cat.n(); ++i)
                deriv += static_cast<long long>(verts[s + 1][i] - verts[s][i]) *
                         edge.brick_dims[i];
            engine_check(deriv != 0, "crossing not transversal");
            c.sign = deriv > 0 ? 1 : -1;
            engine_check(c.sign > 0, "red crossing inside a green sequence");
            path.crossings.push_back(std::move(c));
            ++stage;
        }
    }
    engine_check(static_cast<int>(path.crossings.size()) == r,
                 "crossing count differs from the sequence length");

    // torsion class between crossings equals the stage's class
    for (int k = 0; k <= r; ++k) {
        Rational lo = k == 0 ? Rational(0) : path.crossings[k - 1].t;
        Rational hi = k == r ? Rational(1) : path.crossings[k].t;
        Rational mid = (lo + hi) / Rational(2);
        Theta pt = path_point(path, mid);
        const auto& expect = g.classes[seq.node_chain[k]];
        for (size_t i = 0; i < cat.corpus.size(); ++i) {
            bool member = in_t_theta(pt, cat.corpus[i], sub_opt);
            engine_check(member == (expect.members[i] != 0),
                         "torsion class drifted between crossings");
        }
    }
    return path;
}

// D-genericity report for an arbitrary PL path against a module corpus.
struct DGenericReport {
    bool ok = true;
    std::vector<std::string> violations;

    void fail(const std::string& v) {
        ok = false;
        violations.push_back(v);
    }
};

template <class K>
DGenericReport verify_d_generic(const PLPath& path, const std::vector<Rep<K>>& corpus,
                                SubmoduleOptions sub_opt = {}) {
    DGenericReport rep;
    const int segs = static_cast<int>(path.vertices.size()) - 1;
    if (segs < 1) return rep;

    // (1) endpoints inside chambers
    for (const DimVector* endp : {&path.vertices.front(), &path.vertices.back()}) {
        Theta t = theta_of(*endp);
        for (const auto& W : corpus)
            if (is_semistable(t, W, sub_opt))
                rep.fail("endpoint " + to_string(*endp) + " lies in a stability space");
    }

    for (int s = 0; s < segs; ++s) {
        auto ev = detail::segment_events(path.vertices[s], path.vertices[s + 1], corpus,
                                         sub_opt);
        // (3) transversality: tangent contact is a violation
        if (ev.tangency)
            rep.fail("segment " + std::to_string(s) + " runs inside a wall");
        for (const auto& [t, walls] : ev.events) {
            if (t == Rational(0) && s > 0) continue;  // shared corner, counted once
            // (2) all walls met at this point are proportional
            for (size_t i = 0; i + 1 < walls.size(); ++i)
                if (!proportional(corpus[walls[i]].dims, corpus[walls[i + 1]].dims))
                    rep.fail("non-proportional walls met at one point on segment " +
                             std::to_string(s));
            // (3) nonzero derivative pairing
            for (int w : walls) {
                long long deriv = 0;
                for (size_t i = 0; i < corpus[w].dims.size(); ++i)
                    deriv += static_cast<long long>(path.vertices[s + 1][i] -
                                                    path.vertices[s][i]) *
                             corpus[w].dims[i];
                if (deriv == 0)
                    rep.fail("zero-derivative crossing on segment " + std::to_string(s));
            }
        }
    }
    return rep;
}

}  // namespace tautilt
