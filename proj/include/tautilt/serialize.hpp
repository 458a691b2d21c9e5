#pragma once

#include "json.hpp"
#include "tautilt/green.hpp"
#include "tautilt/markoff.hpp"

namespace tautilt {

using Doc = nlohmann::ordered_json;

// ---- small helpers ----

inline Doc dimvec_doc(const DimVector& d) { return Doc(d); }

inline DimVector dimvec_from(const Doc& j) {
    DimVector d;
    for (const auto& x : j) d.push_back(x.get<int>());
    return d;
}

inline Doc rational_doc(const Rational& r) { return Doc(r.str()); }

template <class K>
Doc algebra_doc(const PathAlgebra<K>& A) {
    Doc j;
    j["vertices"] = A.quiver.n;
    Doc arrows = Doc::array();
    for (const Arrow& a : A.quiver.arrows) { Doc ar = Doc::array(); ar.push_back(a.name); ar.push_back(a.source); ar.push_back(a.target); arrows.push_back(std::move(ar)); }
    j["arrows"] = arrows;
    j["rad_nilpotency"] = A.bound;
    j["relation_count"] = A.relations.relations.size();
    j["dimension"] = A.dim();
    j["field"] = A.field.name();
    return j;
}

// ---- representations ----

template <class K>
Doc rep_doc(const Rep<K>& r) {
    Doc j;
    j["dim_vector"] = dimvec_doc(r.dims);
    j["field"] = r.field().name();
    Doc mats = Doc::object();
    for (size_t a = 0; a < r.mats.size(); ++a) {
        Doc rows = Doc::array();
        for (int i = 0; i < r.mats[a].r; ++i) {
            Doc row = Doc::array();
            for (int c = 0; c < r.mats[a].c; ++c) {
                if constexpr (K::prime)
                    row.push_back(r.mats[a].at(i, c));
                else
                    row.push_back(r.mats[a].at(i, c).str());
            }
            rows.push_back(row);
        }
        mats[r.A->quiver.arrows[a].name] = rows;
    }
    j["matrices"] = mats;
    return j;
}

template <class K>
Rep<K> rep_from_doc(const AlgebraPtr<K>& A, const Doc& j) {
    if (j.at("field").get<std::string>() != A->field.name())
        throw DomainError("representation document field mismatch: " +
                          j.at("field").get<std::string>() + " vs " + A->field.name());
    Rep<K> r;
    r.A = A;
    r.dims = dimvec_from(j.at("dim_vector"));
    for (size_t a = 0; a < A->quiver.arrows.size(); ++a) {
        const Arrow& ar = A->quiver.arrows[a];
        Mat<K> m(A->field, r.dims[ar.target - 1], r.dims[ar.source - 1]);
        const Doc& rows = j.at("matrices").at(ar.name);
        for (int i = 0; i < m.r; ++i)
            for (int c = 0; c < m.c; ++c) {
                if constexpr (K::prime)
                    m.at(i, c) = rows.at(i).at(c).get<uint32_t>();
                else
                    m.at(i, c) = parse_rational(rows.at(i).at(c).get<std::string>());
            }
        r.mats.push_back(std::move(m));
    }
    if (!r.shape_ok() || !r.satisfies_relations())
        throw DomainError("representation document violates the relations");
    return r;
}

// ---- catalog ----

template <class K>
Doc catalog_doc(const Catalog<K>& cat) {
    Doc j;
    j["algebra"] = algebra_doc(*cat.A);
    j["field"] = cat.A->field.name();
    j["dim_bound"] = cat.dim_bound;
    Doc mods = Doc::array();
    for (size_t i = 0; i < cat.corpus.size(); ++i) {
        Doc m;
        m["id"] = i;
        m["g_vector"] = dimvec_doc(cat.corpus_g[i]);
        m["tau_rigid"] = cat.corpus_is_tau_rigid[i] != 0;
        m["representation"] = rep_doc(cat.corpus[i]);
        mods.push_back(std::move(m));
    }
    j["modules"] = mods;
    Doc shifted = Doc::array();
    for (int v = 1; v <= cat.n(); ++v) {
        Doc s;
        s["vertex"] = v;
        DimVector e(cat.n(), 0);
        e[v - 1] = -1;
        s["g_vector"] = dimvec_doc(e);
        s["dim_vector"] = dimvec_doc(cat.projectives[v - 1].dims);
        shifted.push_back(std::move(s));
    }
    j["shifted_projectives"] = shifted;
    j["tau_rigid_count"] = cat.tau_rigid.size();
    return j;
}

template <class K>
Catalog<K> catalog_from_doc(const AlgebraPtr<K>& A, const Doc& j) {
    Catalog<K> cat;
    cat.A = A;
    cat.dim_bound = j.at("dim_bound").get<int>();
    for (const auto& m : j.at("modules")) {
        cat.corpus.push_back(rep_from_doc(A, m.at("representation")));
        cat.corpus_g.push_back(dimvec_from(m.at("g_vector")));
        cat.corpus_is_tau_rigid.push_back(m.at("tau_rigid").get<bool>() ? 1 : 0);
    }
    for (size_t i = 0; i < cat.corpus.size(); ++i) {
        engine_check(g_vector(cat.corpus[i]) == cat.corpus_g[i],
                     "catalog document g-vector mismatch");
        cat.corpus_tau.push_back(tau_rep(cat.corpus[i]));
        if (cat.corpus_is_tau_rigid[i]) cat.tau_rigid.push_back(static_cast<int>(i));
    }
    for (int v = 1; v <= cat.n(); ++v) cat.projectives.push_back(projective_rep(A, v));
    size_t m = cat.corpus.size();
    cat.compat_mm.assign(m, std::vector<char>(m, 0));
    for (int i : cat.tau_rigid)
        for (int k : cat.tau_rigid) {
            if (k < i) continue;
            bool ok = dim_hom(cat.corpus[i], cat.corpus_tau[k]) == 0 &&
                      dim_hom(cat.corpus[k], cat.corpus_tau[i]) == 0;
            cat.compat_mm[i][k] = cat.compat_mm[k][i] = ok ? 1 : 0;
        }
    cat.compat_pm.assign(cat.n(), std::vector<char>(m, 0));
    for (int v = 1; v <= cat.n(); ++v)
        for (int i : cat.tau_rigid)
            cat.compat_pm[v - 1][i] = dim_hom(cat.projectives[v - 1], cat.corpus[i]) == 0;
    return cat;
}

// ---- pairs ----

template <class K>
Doc pairs_doc(const Catalog<K>& cat, const std::vector<PairRef>& pairs) {
    Doc j;
    j["algebra"] = algebra_doc(*cat.A);
    j["field"] = cat.A->field.name();
    j["dim_bound"] = cat.dim_bound;
    j["pair_count"] = pairs.size();
    Doc arr = Doc::array();
    for (size_t i = 0; i < pairs.size(); ++i) {
        Doc p;
        p["index"] = i + 1;
        Doc gs = Doc::array();
        for (const auto& col : g_columns(cat, pairs[i])) gs.push_back(dimvec_doc(col));
        p["g_vectors"] = gs;
        Doc mods = Doc::array();
        for (int c : pairs[i].modules) mods.push_back(dimvec_doc(cat.corpus[c].dims));
        p["module_dim_vectors"] = mods;
        p["shifted_projectives"] = Doc(pairs[i].shifted);
        arr.push_back(std::move(p));
    }
    j["pairs"] = arr;
    return j;
}

template <class K>
std::vector<PairRef> pairs_from_doc(const Catalog<K>& cat, const Doc& j) {
    std::vector<PairRef> out;
    for (const auto& p : j.at("pairs")) {
        PairRef pr;
        for (const auto& v : p.at("shifted_projectives")) pr.shifted.push_back(v.get<int>());
        size_t nmods = p.at("module_dim_vectors").size();
        for (size_t c = 0; c < nmods; ++c) {
            DimVector g = dimvec_from(p.at("g_vectors").at(c));
            DimVector d = dimvec_from(p.at("module_dim_vectors").at(c));
            int found = -1;
            for (size_t i = 0; i < cat.corpus.size(); ++i)
                if (cat.corpus[i].dims == d && cat.corpus_g[i] == g)
                    found = static_cast<int>(i);
            if (found < 0) throw DomainError("pair document references an unknown module");
            pr.modules.push_back(found);
        }
        out.push_back(canonical_pair(cat, pr));
    }
    return out;
}

// ---- fan ----

template <class K>
Doc fan_doc(const Catalog<K>& cat, const Fan<K>& fan, SubmoduleOptions sub_opt = {}) {
    Doc j;
    j["algebra"] = algebra_doc(*cat.A);
    j["complete"] = fan.complete;
    if (!fan.complete)
        j["warning"] =
            "partial fan at this bound: regions outside the catalog cones are uncharted";
    Doc cones = Doc::array();
    for (size_t i = 0; i < fan.pairs.size(); ++i) {
        Doc c;
        c["pair_index"] = i + 1;
        Doc gs = Doc::array();
        for (const auto& col : g_columns(cat, fan.pairs[i])) gs.push_back(dimvec_doc(col));
        c["generators"] = gs;
        c["barycenter"] = dimvec_doc(pair_barycenter(cat, fan.pairs[i]));
        cones.push_back(std::move(c));
    }
    j["cones"] = cones;
    Doc facets = Doc::array();
    for (const auto& f : fan.facets) {
        Doc d;
        Doc gs = Doc::array();
        for (const auto& col : f.key) gs.push_back(dimvec_doc(col));
        d["generators"] = gs;
        Doc owners = Doc::array();
        for (const auto& [p, k] : f.owners) owners.push_back(p + 1);
        d["owner_pairs"] = owners;
        if (f.owners.size() == 2) {
            WallInfo<K> w =
                wall_of_facet(cat, fan, f.owners[0].first, f.owners[1].first, sub_opt);
            Doc wd;
            wd["module_dim_vector"] = dimvec_doc(w.wall_dims);
            wd["normal"] = dimvec_doc(w.wall_dims);
            d["wall"] = wd;
        }
        facets.push_back(std::move(d));
    }
    j["facets"] = facets;
    return j;
}

// ---- exchange graph ----

template <class K>
Doc graph_doc(const Catalog<K>& cat, const ExchangeGraph<K>& g) {
    Doc j;
    j["algebra"] = algebra_doc(*cat.A);
    j["complete"] = g.complete;
    if (!g.complete)
        j["warning"] = "partial exchange graph: built from an incomplete fan";
    Doc nodes = Doc::array();
    for (size_t i = 0; i < g.nodes.size(); ++i) {
        Doc n;
        n["index"] = i + 1;
        Doc gs = Doc::array();
        for (const auto& col : g_columns(cat, g.nodes[i])) gs.push_back(dimvec_doc(col));
        n["g_vectors"] = gs;
        Doc members = Doc::array();
        for (size_t c = 0; c < g.classes[i].members.size(); ++c)
            if (g.classes[i].members[c]) members.push_back(c);
        n["torsion_class_modules"] = members;
        nodes.push_back(std::move(n));
    }
    j["nodes"] = nodes;
    Doc edges = Doc::array();
    for (const auto& e : g.edges) {
        Doc d;
        d["bigger"] = e.bigger + 1;
        d["smaller"] = e.smaller + 1;
        d["brick_dim_vector"] = dimvec_doc(e.brick_dims);
        d["cover_certified"] = e.cover_certified;
        edges.push_back(std::move(d));
    }
    j["edges"] = edges;
    return j;
}

// ---- green sequences and paths ----

template <class K>
Doc mgs_doc(const Catalog<K>& cat, const ExchangeGraph<K>& g,
            const std::vector<GreenSequence>& seqs, const std::vector<PLPath>& paths) {
    engine_check(seqs.size() == paths.size(), "sequence/path count mismatch");
    Doc j;
    j["algebra"] = algebra_doc(*cat.A);
    j["count"] = seqs.size();
    Doc arr = Doc::array();
    for (size_t i = 0; i < seqs.size(); ++i) {
        Doc s;
        s["length"] = seqs[i].length();
        s["nodes"] = Doc(seqs[i].node_chain);
        Doc bricks = Doc::array();
        for (int e : seqs[i].edge_chain) bricks.push_back(dimvec_doc(g.edges[e].brick_dims));
        s["bricks"] = bricks;
        Doc path;
        Doc verts = Doc::array();
        for (const auto& v : paths[i].vertices) verts.push_back(dimvec_doc(v));
        path["vertices"] = verts;
        Doc crossings = Doc::array();
        for (const auto& c : paths[i].crossings) {
            Doc cd;
            cd["t"] = c.t.str();
            cd["wall_dim_vector"] = dimvec_doc(c.wall_dims);
            cd["sign"] = c.sign > 0 ? "green" : "red";
            crossings.push_back(std::move(cd));
        }
        path["crossings"] = crossings;
        s["path"] = path;
        arr.push_back(std::move(s));
    }
    j["sequences"] = arr;
    return j;
}

// ---- markoff report ----

inline Doc wall_formula_doc(const WallFormulaReport& r) {
    Doc j;
    j["family"] = r.family == WallFamily::F1 ? "F1" : (r.family == WallFamily::F2 ? "F2" : "F3");
    j["n"] = r.n;
    j["field"] = r.field;
    j["wall_matches"] = r.wall_matches;
    j["submodule_claim"] = r.submodule_claim;
    j["is_brick"] = r.is_brick;
    j["pass"] = r.pass();
    return j;
}

inline Doc stability_space_doc(const DimVector& module_dims, const ConeHRep& h,
                               const ConeVRep& v, int codim, bool is_wall) {
    Doc j;
    j["module_dim_vector"] = dimvec_doc(module_dims);
    Doc eqs = Doc::array();
    for (const auto& e : h.equalities) eqs.push_back(Doc(e));
    j["equalities"] = eqs;
    Doc ineqs = Doc::array();
    for (const auto& a : h.inequalities) ineqs.push_back(Doc(a));
    j["inequalities"] = ineqs;
    Doc rays = Doc::array();
    for (const auto& r : v.rays) rays.push_back(Doc(r));
    j["rays"] = rays;
    Doc lin = Doc::array();
    for (const auto& l : v.lineality) lin.push_back(Doc(l));
    j["lineality"] = lin;
    j["codimension"] = codim;
    j["is_wall"] = is_wall;
    return j;
}

}  // namespace tautilt
