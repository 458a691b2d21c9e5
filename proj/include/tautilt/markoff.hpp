#pragma once

#include <array>
#include <set>

#include "tautilt/green.hpp"

namespace tautilt {

// Detection of the doubled-3-cycle pattern: three distinct vertices with two
// parallel arrows along each leg of a directed 3-cycle. The no-green-chain
// verdict applies to quivers with exactly three vertices; on larger quivers
// the pattern is reported as an informational notice only.
struct MarkoffWitness {
    int v1 = 0, v2 = 0, v3 = 0;
    // two arrow indices per leg of the cycle v1 -> v3 -> v2 -> v1
    std::array<int, 2> leg_v1_v3{}, leg_v3_v2{}, leg_v2_v1{};
    bool verdict_applies = false;  // |Q_0| == 3
};

inline std::optional<MarkoffWitness> detect_markoff(const Quiver& q) {
    auto doubled = [&](int s, int t, std::array<int, 2>& out) {
        int found = 0;
        for (size_t a = 0; a < q.arrows.size() && found < 2; ++a)
            if (q.arrows[a].source == s && q.arrows[a].target == t)
                out[found++] = static_cast<int>(a);
        return found == 2;
    };
    for (int v1 = 1; v1 <= q.n; ++v1)
        for (int v2 = 1; v2 <= q.n; ++v2)
            for (int v3 = 1; v3 <= q.n; ++v3) {
                if (v1 == v2 || v1 == v3 || v2 == v3) continue;
                MarkoffWitness w;
                w.v1 = v1;
                w.v2 = v2;
                w.v3 = v3;
                if (doubled(v1, v3, w.leg_v1_v3) && doubled(v3, v2, w.leg_v3_v2) &&
                    doubled(v2, v1, w.leg_v2_v1)) {
                    w.verdict_applies = q.n == 3;
                    return w;
                }
            }
    return std::nullopt;
}

// The canonical doubled 3-cycle with radical square zero, oriented
// 1=>2=>3=>1. In these coordinates the three wall families have the closed
// forms below.
inline Quiver markoff_quiver() {
    Quiver q;
    q.n = 3;
    q.arrows = {Arrow{"a1", 1, 2}, Arrow{"a2", 1, 2}, Arrow{"b1", 2, 3},
                Arrow{"b2", 2, 3}, Arrow{"c1", 3, 1}, Arrow{"c2", 3, 1}};
    return q;
}

template <class K>
AlgebraPtr<K> markoff_algebra(K field) {
    Quiver q = markoff_quiver();
    RelationSet rels;
    rels.relations = radical_square_zero_relations(q);
    rels.nilpotency_bound = 2;
    return std::make_shared<const PathAlgebra<K>>(build_path_algebra(field, q, rels));
}

enum class WallFamily { F1, F2, F3 };

inline DimVector family_dims(WallFamily f, int n) {
    switch (f) {
        case WallFamily::F1: return {n + 1, 0, n};
        case WallFamily::F2: return {n, n + 1, 0};
        default: return {0, n, n + 1};
    }
}

// closed-form wall: hyperplane + one half-space constraint
inline ConeHRep family_wall(WallFamily f, int n) {
    ConeHRep h;
    h.n = 3;
    switch (f) {
        case WallFamily::F1:
            h.equalities.push_back({n + 1, 0, n});
            h.inequalities.push_back({1, 0, 0});  // x <= 0
            break;
        case WallFamily::F2:
            h.equalities.push_back({n, n + 1, 0});
            h.inequalities.push_back({0, 1, 0});  // y <= 0
            break;
        default:
            h.equalities.push_back({0, n, n + 1});
            h.inequalities.push_back({0, 0, 1});  // z <= 0
            break;
    }
    return h;
}

// Indecomposable family member: the Kronecker preprojective pattern on one
// doubled leg (identity block and shift block), all other arrows zero.
template <class K>
Rep<K> build_family_module(const AlgebraPtr<K>& C, WallFamily f, int n) {
    if (n < 0) throw DomainError("family index must be nonnegative");
    const K& fld = C->field;
    int src = 0, tgt = 0, arr1 = 0, arr2 = 0;
    switch (f) {
        case WallFamily::F1: src = 3; tgt = 1; arr1 = 4; arr2 = 5; break;  // c1, c2
        case WallFamily::F2: src = 1; tgt = 2; arr1 = 0; arr2 = 1; break;  // a1, a2
        default:             src = 2; tgt = 3; arr1 = 2; arr2 = 3; break;  // b1, b2
    }
    Rep<K> r = zero_rep(C);
    r.dims[src - 1] = n;
    r.dims[tgt - 1] = n + 1;
    for (size_t a = 0; a < C->quiver.arrows.size(); ++a) {
        const Arrow& ar = C->quiver.arrows[a];
        r.mats[a] = Mat<K>(fld, r.dims[ar.target - 1], r.dims[ar.source - 1]);
    }
    for (int i = 0; i < n; ++i) {
        r.mats[arr1].at(i, i) = fld.one();      // identity block
        r.mats[arr2].at(i + 1, i) = fld.one();  // shift block
    }
    engine_check(r.dims == family_dims(f, n), "family dimension vector mismatch");
    engine_check(r.satisfies_relations(), "family module violates the relations");
    engine_check(is_indecomposable(r), "family module not indecomposable");
    return r;
}

struct WallFormulaReport {
    WallFamily family;
    int n = 0;
    std::string field;
    bool wall_matches = false;      // computed D(M_n) equals the closed form
    bool submodule_claim = false;   // every smaller family dim vector occurs
    bool is_brick = false;

    bool pass() const { return wall_matches && submodule_claim && is_brick; }
};

// First-principles verification of the closed-form walls: the stability
// space of the constructed module must equal the closed form as a cone, and
// the family members below n must appear among its submodule dim vectors.
template <class K>
WallFormulaReport verify_wall_formula(const AlgebraPtr<K>& C, WallFamily f, int n,
                                      SubmoduleOptions sub_opt = {}) {
    WallFormulaReport rep;
    rep.family = f;
    rep.n = n;
    rep.field = C->field.name();
    Rep<K> M = build_family_module(C, f, n);
    rep.is_brick = is_brick(M);
    StabilitySpace<K> D = stability_space(M, sub_opt);
    rep.wall_matches = same_cone(D.hrep, family_wall(f, n));

    std::set<DimVector> subs = submodule_dim_vectors(M, sub_opt);
    rep.submodule_claim = true;
    for (int k = 0; k < n; ++k)
        if (!subs.count(family_dims(f, k))) rep.submodule_claim = false;
    return rep;
}

struct SeparationReport {
    int branch = 1;  // which simple wall was crossed first
    int checked = 0;
    bool pass = false;
    std::vector<std::string> notes;
};

// The blocking argument, made exact: a sample point just past the first
// simple-wall crossing is separated from (1,1,1) by each of the first B
// walls of the matching family, and each hyperplane crossing of the straight
// segment toward (1,1,1) happens inside the wall, in the half-space the
// green path cannot leave.
inline SeparationReport green_path_obstruction_demo(int branch, int B, const Theta& sample) {
    if (B < 1) throw DomainError("need at least one wall to check");
    if (branch < 1 || branch > 3) throw DomainError("branch must be 1, 2 or 3");
    SeparationReport rep;
    rep.branch = branch;

    // region checks: just past D(S(branch)): that coordinate is positive and
    // small against the next one around the cycle, which is negative
    int i = branch - 1;          // crossed coordinate
    int j = branch % 3;          // dominating negative coordinate
    if (!(sample[i].sign() > 0 && sample[j].sign() < 0 &&
          sample[i] < -sample[j]))
        throw DomainError("sample point is not just past the first wall crossing");

    // family blocking this branch: S(1) -> F2, S(2) -> F3, S(3) -> F1
    WallFamily fam = branch == 1 ? WallFamily::F2
                                 : (branch == 2 ? WallFamily::F3 : WallFamily::F1);
    Theta target{Rational(1), Rational(1), Rational(1)};
    rep.pass = true;
    for (int n = 1; n <= B; ++n) {
        ConeHRep wall = family_wall(fam, n);
        const auto& h = wall.equalities[0];
        Rational at_sample = detail::dot(h, sample);
        Rational at_target = detail::dot(h, target);
        if (!(at_sample.sign() < 0 && at_target.sign() > 0)) {
            rep.pass = false;
            rep.notes.push_back("family wall " + std::to_string(n) + " does not separate");
            continue;
        }
        // crossing of the straight segment lies inside the wall and keeps
        // the crossed coordinate positive
        Rational t = at_sample / (at_sample - at_target);
        Theta pt(3);
        for (int c = 0; c < 3; ++c)
            pt[c] = (Rational(1) - t) * sample[c] + t * target[c];
        if (!cone_contains_point(wall, pt)) {
            rep.pass = false;
            rep.notes.push_back("crossing point outside wall " + std::to_string(n));
        }
        if (!(pt[i].sign() > 0)) {
            rep.pass = false;
            rep.notes.push_back("crossing left the positive half-space at wall " +
                                std::to_string(n));
        }
        ++rep.checked;
    }
    return rep;
}

struct WallLiftReport {
    DimVector module_dims;
    bool inflates = false;     // N satisfies the larger algebra's relations
    bool walls_equal = false;

    bool pass() const { return inflates && walls_equal; }
};

// Wall lifting along a quotient A -> A/I: an A/I-module N has the same
// subrepresentations either way, so its stability space computed over both
// algebras must agree.
template <class K>
WallLiftReport check_wall_lifting(const AlgebraPtr<K>& big, const Rep<K>& N_small,
                                  SubmoduleOptions sub_opt = {}) {
    engine_check(big->n() == N_small.n(), "wall lifting needs equal vertex counts");
    WallLiftReport rep;
    rep.module_dims = N_small.dims;
    Rep<K> lifted;
    lifted.A = big;
    lifted.dims = N_small.dims;
    lifted.mats = N_small.mats;
    if (!lifted.shape_ok() || !lifted.satisfies_relations()) return rep;
    rep.inflates = true;
    StabilitySpace<K> d_small = stability_space(N_small, sub_opt);
    StabilitySpace<K> d_big = stability_space(lifted, sub_opt);
    rep.walls_equal = same_cone(d_small.hrep, d_big.hrep);
    return rep;
}

struct SimpleWallsReport {
    bool projective_side = false;  // walls of (A,0) are the simples
    bool shifted_side = false;     // walls of (0,A) are the simples
    bool orthogonality = false;    // <g^{P(i)}, [S(j)]> = 0 for i != j

    bool pass() const { return projective_side && shifted_side && orthogonality; }
};

// Both trivial chambers are cut out by the simple modules.
template <class K>
SimpleWallsReport check_simple_walls(const Catalog<K>& cat, const Fan<K>& fan,
                                     SubmoduleOptions sub_opt = {}) {
    SimpleWallsReport rep;
    int proj = -1, shift = -1;
    for (size_t i = 0; i < fan.pairs.size(); ++i) {
        DimVector ones(cat.n(), 1), negones(cat.n(), -1);
        if (pair_barycenter(cat, fan.pairs[i]) == ones &&
            static_cast<int>(fan.pairs[i].modules.size()) == cat.n())
            proj = static_cast<int>(i);
        if (static_cast<int>(fan.pairs[i].shifted.size()) == cat.n())
            shift = static_cast<int>(i);
    }
    if (proj < 0 || shift < 0) return rep;

    std::multiset<DimVector> simples;
    for (int v = 1; v <= cat.n(); ++v) {
        DimVector e(cat.n(), 0);
        e[v - 1] = 1;
        simples.insert(e);
    }
    auto walls_are_simples = [&](int chamber) {
        std::multiset<DimVector> got;
        for (const auto& w : chamber_walls(cat, fan, chamber, sub_opt))
            got.insert(w.wall_dims);
        return got == simples;
    };
    rep.projective_side = walls_are_simples(proj);
    rep.shifted_side = walls_are_simples(shift);

    rep.orthogonality = true;
    for (int i = 1; i <= cat.n(); ++i) {
        DimVector g = g_vector(cat.projectives[i - 1]);
        for (int j = 1; j <= cat.n(); ++j) {
            if (i == j) continue;
            if (g[j - 1] != 0) rep.orthogonality = false;
        }
    }
    return rep;
}

}  // namespace tautilt
