#pragma once

#include <map>

#include "tautilt/stability.hpp"
#include "tautilt/tau_tilting.hpp"

namespace tautilt {

template <class K>
DimVector pair_barycenter(const Catalog<K>& cat, const PairRef& p) {
    DimVector b(cat.n(), 0);
    for (const auto& col : g_columns(cat, p)) b = add(b, col);
    return b;
}

// The g-vector fan: maximal cones from the tau-tilting pairs, facets keyed by
// their n-1 shared generator columns. Complete iff every facet has exactly
// two owners.
template <class K>
struct Fan {
    std::vector<PairRef> pairs;

    struct Facet {
        std::vector<DimVector> key;  // sorted generator columns
        std::vector<std::pair<int, int>> owners;  // (pair index, dropped summand)
    };
    std::vector<Facet> facets;
    bool complete = false;
};

template <class K>
Fan<K> assemble_fan(const Catalog<K>& cat, std::vector<PairRef> pairs) {
    Fan<K> fan;
    fan.pairs = std::move(pairs);
    std::map<std::vector<DimVector>, std::vector<std::pair<int, int>>> by_key;
    for (size_t pi = 0; pi < fan.pairs.size(); ++pi) {
        auto cols = g_columns(cat, fan.pairs[pi]);
        for (int k = 0; k < static_cast<int>(cols.size()); ++k) {
            std::vector<DimVector> key;
            for (int j = 0; j < static_cast<int>(cols.size()); ++j)
                if (j != k) key.push_back(cols[j]);
            std::sort(key.begin(), key.end());
            by_key[key].emplace_back(static_cast<int>(pi), k);
        }
    }
    fan.complete = true;
    for (auto& [key, owners] : by_key) {
        engine_check(owners.size() <= 2, "facet shared by more than two cones");
        if (owners.size() != 2) fan.complete = false;
        fan.facets.push_back(typename Fan<K>::Facet{key, owners});
    }
    return fan;
}

// The polyhedral cone of a tau-rigid pair: its g-vector generators are
// linearly independent, so membership coordinates are unique.
template <class K>
struct Cone {
    PairRef pair;
    std::vector<DimVector> generators;
};

template <class K>
Cone<K> cone_of_pair(const Catalog<K>& cat, const PairRef& p) {
    Cone<K> c;
    c.pair = p;
    c.generators = g_columns(cat, p);
    RationalField Q;
    Mat<RationalField> G(Q, cat.n(), static_cast<int>(c.generators.size()));
    for (size_t j = 0; j < c.generators.size(); ++j)
        for (int i = 0; i < cat.n(); ++i)
            G.at(i, static_cast<int>(j)) = Rational(c.generators[j][i]);
    engine_check(rank(std::move(G)) == static_cast<int>(c.generators.size()),
                 "pair g-vectors are not linearly independent");
    return c;
}

// Unique coordinates of a point in the cone's generator basis, if the point
// lies in the generators' span; membership means all coordinates >= 0.
template <class K>
std::optional<std::vector<Rational>> cone_coordinates(const Catalog<K>& cat,
                                                      const Cone<K>& c, const Theta& th) {
    RationalField Q;
    Mat<RationalField> G(Q, cat.n(), static_cast<int>(c.generators.size()));
    for (size_t j = 0; j < c.generators.size(); ++j)
        for (int i = 0; i < cat.n(); ++i)
            G.at(i, static_cast<int>(j)) = Rational(c.generators[j][i]);
    auto x = solve(G, th);
    if (!x) return std::nullopt;
    // confirm: columns independent, so this is the coordinate vector
    auto back = G.mul_vec(*x);
    for (int i = 0; i < cat.n(); ++i)
        if (!(back[i] == th[i])) return std::nullopt;
    return x;
}

// Locating a rational point in the fan: solve the generator system of each
// maximal cone exactly. The face support identifies the smallest sub-cone
// containing the point.
struct Location {
    bool located = false;
    int pair_index = -1;
    std::vector<Rational> coords;
    bool interior = false;
    std::vector<int> support;  // summand positions with positive coordinate
};

template <class K>
Location locate(const Catalog<K>& cat, const Fan<K>& fan, const Theta& th) {
    RationalField Q;
    Location best;
    for (size_t pi = 0; pi < fan.pairs.size(); ++pi) {
        auto cols = g_columns(cat, fan.pairs[pi]);
        Mat<RationalField> G(Q, cat.n(), static_cast<int>(cols.size()));
        for (int j = 0; j < static_cast<int>(cols.size()); ++j)
            for (int i = 0; i < cat.n(); ++i) G.at(i, j) = Rational(cols[j][i]);
        auto alpha = solve(G, th);
        if (!alpha) continue;
        // solve() returns one solution; the columns are a basis, so it is the
        // coordinate vector. All coordinates must be nonnegative.
        bool ok = true, interior = true;
        for (const auto& a : *alpha) {
            if (a.sign() < 0) ok = false;
            if (a.sign() == 0) interior = false;
        }
        if (!ok) continue;
        Location loc;
        loc.located = true;
        loc.pair_index = static_cast<int>(pi);
        loc.coords = *alpha;
        loc.interior = interior;
        for (size_t j = 0; j < alpha->size(); ++j)
            if ((*alpha)[j].sign() > 0) loc.support.push_back(static_cast<int>(j));
        if (interior) return loc;
        if (!best.located) best = loc;
    }
    return best;
}

// Wall attached to a shared facet, built by the approximation recipe: order
// the two completions by torsion class, take the extra module summand M' of
// the larger side, and put N = M' / trace(M, M'). The result is checked to
// be a brick, perpendicular in all three hom directions, stable at the facet
// barycenter, and its stability space contains the facet cone.
template <class K>
struct WallInfo {
    PairRef almost;
    int bigger_pair = -1, smaller_pair = -1;  // indices into the fan's pairs
    int exchanged_class = -1;                 // corpus class of M'
    Rep<K> wall_module;
    DimVector wall_dims;
};

template <class K>
WallInfo<K> wall_of_facet(const Catalog<K>& cat, const Fan<K>& fan, int owner1,
                          int owner2, SubmoduleOptions sub_opt = {}) {
    const PairRef& p1 = fan.pairs[owner1];
    const PairRef& p2 = fan.pairs[owner2];

    WallInfo<K> w;
    // shared almost pair
    for (int m : p1.modules)
        if (std::find(p2.modules.begin(), p2.modules.end(), m) != p2.modules.end())
            w.almost.modules.push_back(m);
    for (int v : p1.shifted)
        if (std::find(p2.shifted.begin(), p2.shifted.end(), v) != p2.shifted.end())
            w.almost.shifted.push_back(v);
    engine_check(w.almost.size() == cat.n() - 1, "owners do not share an almost pair");

    TorsionClassDescriptor t1 = torsion_class(cat, p1);
    TorsionClassDescriptor t2 = torsion_class(cat, p2);
    engine_check(!(t1 == t2), "facet completions have equal torsion classes");
    engine_check(t1.subset_of(t2) || t2.subset_of(t1),
                 "facet completions have incomparable torsion classes");
    bool p1_bigger = t2.subset_of(t1);
    w.bigger_pair = p1_bigger ? owner1 : owner2;
    w.smaller_pair = p1_bigger ? owner2 : owner1;
    const PairRef& bigger = fan.pairs[w.bigger_pair];

    // the extra summand of the bigger side must be a module
    int extra = -1;
    for (int m : bigger.modules)
        if (std::find(w.almost.modules.begin(), w.almost.modules.end(), m) ==
            w.almost.modules.end())
            extra = m;
    engine_check(extra >= 0, "larger completion added a shifted projective");
    w.exchanged_class = extra;

    Rep<K> shared_m = module_part(cat, w.almost);
    Rep<K> shared_p = shifted_part(cat, w.almost);
    SubRep<K> tr = trace_sub(shared_m, cat.corpus[extra]);
    w.wall_module = quotient_rep(cat.corpus[extra], tr.incl).rep;
    w.wall_dims = w.wall_module.dims;
    engine_check(!w.wall_module.is_zero(), "wall module is zero");

    // perpendicularity, brick, and containment checks
    engine_check(dim_hom(shared_m, w.wall_module) == 0, "wall module not in M-perp");
    engine_check(dim_hom(w.wall_module, tau_rep(shared_m)) == 0,
                 "wall module not in perp(tau M)");
    engine_check(dim_hom(shared_p, w.wall_module) == 0, "wall module not in P-perp");
    engine_check(is_brick(w.wall_module), "wall module is not a brick");

    StabilitySpace<K> D = stability_space(w.wall_module, sub_opt);
    engine_check(D.is_wall, "stability space of the wall module is not a wall");
    for (const auto& g : g_columns(cat, w.almost)) {
        std::vector<long long> pt(g.begin(), g.end());
        engine_check(cone_contains_point(D.hrep, pt),
                     "facet generator outside the wall");
    }
    Theta bary = theta_of(pair_barycenter(cat, w.almost));
    engine_check(is_stable(bary, w.wall_module, sub_opt),
                 "wall module not stable at the facet barycenter");
    return w;
}

// The n walls of a tau-tilting chamber, one per facet, pairwise distinct.
template <class K>
std::vector<WallInfo<K>> chamber_walls(const Catalog<K>& cat, const Fan<K>& fan,
                                       int pair_index, SubmoduleOptions sub_opt = {}) {
    const PairRef& p = fan.pairs[pair_index];
    auto cols = g_columns(cat, p);
    std::vector<WallInfo<K>> out;
    for (int k = 0; k < static_cast<int>(cols.size()); ++k) {
        std::vector<DimVector> key;
        for (int j = 0; j < static_cast<int>(cols.size()); ++j)
            if (j != k) key.push_back(cols[j]);
        std::sort(key.begin(), key.end());
        const typename Fan<K>::Facet* facet = nullptr;
        for (const auto& fct : fan.facets)
            if (fct.key == key) facet = &fct;
        engine_check(facet != nullptr, "facet missing from the fan");
        if (facet->owners.size() != 2)
            throw BudgetError("chamber wall unavailable: facet has a single owner "
                              "(catalog bound too small)");
        out.push_back(wall_of_facet(cat, fan, facet->owners[0].first,
                                    facet->owners[1].first, sub_opt));
    }
    for (size_t i = 0; i < out.size(); ++i)
        for (size_t j = i + 1; j < out.size(); ++j)
            engine_check(!proportional(out[i].wall_dims, out[j].wall_dims),
                         "chamber walls are not pairwise distinct");
    return out;
}

// Cross-check of the mutation exchange in the Fac-decreasing direction:
// removing the module summand X from the larger completion and forming
// X / trace(rest, X) must reproduce the facet's wall module.
template <class K>
struct ExchangeCheck {
    bool fac_decreasing = false;
    Rep<K> cokernel;
    bool replacement_is_module = false;
    bool matches_replacement = false;
};

template <class K>
ExchangeCheck<K> exchange_cokernel_check(const Catalog<K>& cat, const PairRef& pair,
                                         int k, SubmoduleOptions sub_opt = {}) {
    ExchangeCheck<K> chk;
    if (k < 0 || k >= static_cast<int>(pair.modules.size()))
        throw DomainError("exchange check needs a module summand index");
    PairRef other = mutate(cat, pair, k);

    TorsionClassDescriptor tp = torsion_class(cat, pair);
    TorsionClassDescriptor to = torsion_class(cat, other);
    chk.fac_decreasing = to.subset_of(tp) && !(to == tp);
    if (!chk.fac_decreasing) return chk;  // recipe applies on the larger side only

    int x = pair.modules[k];
    PairRef rest = pair;
    rest.modules.erase(rest.modules.begin() + k);
    Rep<K> rest_m = module_part(cat, rest);
    SubRep<K> tr = trace_sub(rest_m, cat.corpus[x]);
    chk.cokernel = quotient_rep(cat.corpus[x], tr.incl).rep;

    // independent route: the cokernel must be the alpha-stable module of the
    // shared facet, checked from the stability definition
    Theta bary = theta_of(pair_barycenter(cat, rest));
    engine_check(!chk.cokernel.is_zero(), "exchange cokernel is zero");
    engine_check(is_brick(chk.cokernel), "exchange cokernel is not a brick");
    engine_check(is_stable(bary, chk.cokernel, sub_opt),
                 "exchange cokernel not stable on the facet");

    // informational: does it coincide with the replacement summand?
    for (int m : other.modules)
        if (std::find(rest.modules.begin(), rest.modules.end(), m) == rest.modules.end()) {
            chk.replacement_is_module = true;
            chk.matches_replacement = chk.cokernel.dims == cat.corpus[m].dims &&
                                      isomorphic_indec(chk.cokernel, cat.corpus[m]);
        }
    return chk;
}

}  // namespace tautilt
