#pragma once

#include <memory>

#include "tautilt/path_algebra.hpp"

namespace tautilt {

// A finite-dimensional module over kQ/I, stored as a representation: one
// space per vertex, one matrix per arrow (target-dim x source-dim).
template <class K>
struct Rep {
    AlgebraPtr<K> A;
    DimVector dims;           // size n
    std::vector<Mat<K>> mats; // per arrow

    const K& field() const { return A->field; }
    int n() const { return A->n(); }
    int dim_at(int v) const { return dims[v - 1]; }
    int total_dim() const { return total(dims); }
    bool is_zero() const { return total_dim() == 0; }

    const Mat<K>& arrow(int a) const { return mats[a]; }

    Mat<K> path_action(const Path& p) const {
        Mat<K> m = Mat<K>::identity(field(), dim_at(p.source));
        for (int a : p.arrows) m = mats[a] * m;
        return m;
    }

    bool shape_ok() const {
        if (static_cast<int>(dims.size()) != n()) return false;
        if (mats.size() != A->quiver.arrows.size()) return false;
        for (size_t a = 0; a < mats.size(); ++a) {
            const Arrow& ar = A->quiver.arrows[a];
            if (mats[a].r != dim_at(ar.target) || mats[a].c != dim_at(ar.source)) return false;
        }
        return true;
    }

    // A module over kQ/(I + J^m) must kill the relations and every path of
    // length m.
    bool satisfies_relations() const {
        for (const auto& rel : A->relations.relations) {
            Mat<K> acc;
            bool have = false;
            for (const auto& term : rel.terms) {
                Path p{A->quiver.arrows[term.arrows.front()].source,
                       A->quiver.arrows[term.arrows.back()].target, term.arrows};
                Mat<K> pm = path_action(p).scaled(field().from_rational(term.coeff));
                if (!have) {
                    acc = pm;
                    have = true;
                } else {
                    acc = acc + pm;
                }
            }
            if (have && !acc.is_zero()) return false;
        }
        for (const Path& p : detail::enumerate_paths(A->quiver, A->bound + 1))
            if (p.length() == A->bound && !path_action(p).is_zero()) return false;
        return true;
    }
};

template <class K>
Rep<K> zero_rep(const AlgebraPtr<K>& A) {
    Rep<K> r;
    r.A = A;
    r.dims.assign(A->n(), 0);
    r.mats.assign(A->quiver.arrows.size(), Mat<K>(A->field, 0, 0));
    return r;
}

template <class K>
Rep<K> make_rep(const AlgebraPtr<K>& A, DimVector dims, std::vector<Mat<K>> mats) {
    Rep<K> r;
    r.A = A;
    r.dims = std::move(dims);
    r.mats = std::move(mats);
    engine_check(r.shape_ok(), "representation shape mismatch");
    return r;
}

template <class K>
Rep<K> simple_rep(const AlgebraPtr<K>& A, int v) {
    if (v < 1 || v > A->n()) throw DomainError("vertex out of range");
    Rep<K> r;
    r.A = A;
    r.dims.assign(A->n(), 0);
    r.dims[v - 1] = 1;
    for (const Arrow& a : A->quiver.arrows)
        r.mats.emplace_back(A->field, r.dim_at(a.target), r.dim_at(a.source));
    return r;
}

// P(v): spanned by the normal-form paths starting at v; an arrow acts by
// post-composition followed by rewriting.
template <class K>
Rep<K> projective_rep(const AlgebraPtr<K>& A, int v) {
    if (v < 1 || v > A->n()) throw DomainError("vertex out of range");
    const K& f = A->field;
    Rep<K> r;
    r.A = A;
    r.dims = A->projective_dims(v);

    // slot of each algebra-basis element inside P(v)'s vertex spaces
    std::vector<int> slot(A->dim(), -1);
    for (int t = 1; t <= A->n(); ++t) {
        const auto& list = A->basis_between(v, t);
        for (size_t s = 0; s < list.size(); ++s) slot[list[s]] = static_cast<int>(s);
    }

    for (size_t ai = 0; ai < A->quiver.arrows.size(); ++ai) {
        const Arrow& ar = A->quiver.arrows[ai];
        int u = ar.source, w = ar.target;
        Mat<K> m(f, r.dim_at(w), r.dim_at(u));
        const auto& src = A->basis_between(v, u);
        for (size_t cidx = 0; cidx < src.size(); ++cidx) {
            Path prod = concat_then(A->basis_path(src[cidx]),
                                    Path{u, w, {static_cast<int>(ai)}});
            for (const auto& [b, coeff] : A->rewrite(prod))
                m.at(slot[A->basis_ids[b]], static_cast<int>(cidx)) = coeff;
        }
        r.mats.push_back(std::move(m));
    }
    return r;
}

// I(v) = dual of the right module of paths ending at v; an arrow acts by the
// transpose of pre-composition.
template <class K>
Rep<K> injective_rep(const AlgebraPtr<K>& A, int v) {
    if (v < 1 || v > A->n()) throw DomainError("vertex out of range");
    const K& f = A->field;
    Rep<K> r;
    r.A = A;
    r.dims.assign(A->n(), 0);
    for (int s = 1; s <= A->n(); ++s)
        r.dims[s - 1] = static_cast<int>(A->basis_between(s, v).size());

    std::vector<int> slot(A->dim(), -1);
    for (int s = 1; s <= A->n(); ++s) {
        const auto& list = A->basis_between(s, v);
        for (size_t i = 0; i < list.size(); ++i) slot[list[i]] = static_cast<int>(i);
    }

    for (size_t ai = 0; ai < A->quiver.arrows.size(); ++ai) {
        const Arrow& ar = A->quiver.arrows[ai];
        int u = ar.source, w = ar.target;
        // phi: (paths w->v) -> span(paths u->v), q |-> (a then q)
        const auto& cod = A->basis_between(u, v);
        const auto& dom = A->basis_between(w, v);
        Mat<K> phi(f, static_cast<int>(cod.size()), static_cast<int>(dom.size()));
        for (size_t c = 0; c < dom.size(); ++c) {
            Path prod = concat_then(Path{u, w, {static_cast<int>(ai)}},
                                    A->basis_path(dom[c]));
            for (const auto& [b, coeff] : A->rewrite(prod))
                phi.at(slot[A->basis_ids[b]], static_cast<int>(c)) = coeff;
        }
        r.mats.push_back(phi.transpose());
    }
    return r;
}

template <class K>
Rep<K> direct_sum(const Rep<K>& x, const Rep<K>& y) {
    engine_check(x.A == y.A, "direct sum over different algebras");
    Rep<K> r;
    r.A = x.A;
    r.dims = add(x.dims, y.dims);
    for (size_t a = 0; a < x.mats.size(); ++a) {
        const Arrow& ar = x.A->quiver.arrows[a];
        Mat<K> m(x.field(), r.dim_at(ar.target), r.dim_at(ar.source));
        for (int i = 0; i < x.mats[a].r; ++i)
            for (int j = 0; j < x.mats[a].c; ++j) m.at(i, j) = x.mats[a].at(i, j);
        for (int i = 0; i < y.mats[a].r; ++i)
            for (int j = 0; j < y.mats[a].c; ++j)
                m.at(x.mats[a].r + i, x.mats[a].c + j) = y.mats[a].at(i, j);
        r.mats.push_back(std::move(m));
    }
    return r;
}

// A morphism of representations: one matrix per vertex.
template <class K>
struct Morph {
    std::vector<Mat<K>> at_vertex;  // N.dims[v] x M.dims[v]

    bool is_zero() const {
        for (const auto& m : at_vertex)
            if (!m.is_zero()) return false;
        return true;
    }
};

template <class K>
bool is_morphism(const Rep<K>& M, const Rep<K>& N, const Morph<K>& f) {
    for (size_t a = 0; a < M.mats.size(); ++a) {
        const Arrow& ar = M.A->quiver.arrows[a];
        if (!(f.at_vertex[ar.target - 1] * M.mats[a] ==
              N.mats[a] * f.at_vertex[ar.source - 1]))
            return false;
    }
    return true;
}

template <class K>
Morph<K> compose(const Rep<K>& /*via*/, const Morph<K>& g, const Morph<K>& f) {
    Morph<K> h;
    for (size_t v = 0; v < f.at_vertex.size(); ++v)
        h.at_vertex.push_back(g.at_vertex[v] * f.at_vertex[v]);
    return h;
}

// Subrepresentation described by per-vertex column bases plus its inclusion.
template <class K>
struct SubRep {
    Rep<K> rep;
    std::vector<Mat<K>> incl;  // ambient-dim x sub-dim per vertex
};

namespace detail {

// Canonical column basis of the span of the given columns.
template <class K>
Mat<K> column_basis(const Mat<K>& cols) {
    Mat<K> t = cols.transpose();
    RowSpan<K> span(cols.f, t.c);
    for (int i = 0; i < t.r; ++i) {
        std::vector<typename K::Elem> row(t.c);
        for (int j = 0; j < t.c; ++j) row[j] = t.at(i, j);
        span.insert(std::move(row));
    }
    Mat<K> out(cols.f, cols.r, span.dim());
    for (int j = 0; j < span.dim(); ++j)
        for (int i = 0; i < cols.r; ++i) out.at(i, j) = span.rows()[j][i];
    return out;
}

// Solve basis * X = vecs where basis has full column rank.
template <class K>
Mat<K> coords_in_basis(const Mat<K>& basis, const Mat<K>& vecs) {
    Mat<K> aug = basis.hstack(vecs);
    auto pivots = rref(aug);
    Mat<K> x(basis.f, basis.c, vecs.c);
    for (size_t pi = 0; pi < pivots.size(); ++pi) {
        engine_check(pivots[pi] < basis.c, "coords_in_basis: vectors outside span");
        for (int j = 0; j < vecs.c; ++j)
            x.at(pivots[pi], j) = aug.at(static_cast<int>(pi), basis.c + j);
    }
    return x;
}

}  // namespace detail

template <class K>
SubRep<K> sub_rep(const Rep<K>& M, std::vector<Mat<K>> bases);

// Builds the subrepresentation generated by per-vertex column spans: the
// spans are closed under all arrow actions first.
template <class K>
SubRep<K> sub_rep_closure(const Rep<K>& M, std::vector<Mat<K>> spans) {
    const K& f = M.field();
    std::vector<RowSpan<K>> rs;
    for (int v = 0; v < M.n(); ++v) rs.emplace_back(f, M.dims[v]);
    auto insert_cols = [&](int v, const Mat<K>& cols) {
        bool grew = false;
        for (int j = 0; j < cols.c; ++j) {
            std::vector<typename K::Elem> vec(cols.r);
            for (int i = 0; i < cols.r; ++i) vec[i] = cols.at(i, j);
            grew |= rs[v].insert(std::move(vec));
        }
        return grew;
    };
    for (int v = 0; v < M.n(); ++v)
        if (spans[v].c > 0) insert_cols(v, spans[v]);

    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t a = 0; a < M.mats.size(); ++a) {
            const Arrow& ar = M.A->quiver.arrows[a];
            int u = ar.source - 1, w = ar.target - 1;
            if (rs[u].dim() == 0) continue;
            Mat<K> base(f, M.dims[u], rs[u].dim());
            for (int j = 0; j < rs[u].dim(); ++j)
                for (int i = 0; i < M.dims[u]; ++i) base.at(i, j) = rs[u].rows()[j][i];
            changed |= insert_cols(w, M.mats[a] * base);
        }
    }

    std::vector<Mat<K>> bases;
    for (int v = 0; v < M.n(); ++v) {
        Mat<K> b(f, M.dims[v], rs[v].dim());
        for (int j = 0; j < rs[v].dim(); ++j)
            for (int i = 0; i < M.dims[v]; ++i) b.at(i, j) = rs[v].rows()[j][i];
        bases.push_back(std::move(b));
    }
    return sub_rep(M, bases);
}

// Subrepresentation on per-vertex bases that are already arrow-closed.
template <class K>
SubRep<K> sub_rep(const Rep<K>& M, std::vector<Mat<K>> bases) {
    for (int v = 0; v < M.n(); ++v) bases[v] = detail::column_basis(bases[v]);
    SubRep<K> s;
    s.rep.A = M.A;
    s.rep.dims.resize(M.n());
    for (int v = 0; v < M.n(); ++v) s.rep.dims[v] = bases[v].c;
    for (size_t a = 0; a < M.mats.size(); ++a) {
        const Arrow& ar = M.A->quiver.arrows[a];
        const Mat<K>& bs = bases[ar.source - 1];
        const Mat<K>& bt = bases[ar.target - 1];
        Mat<K> image = M.mats[a] * bs;
        s.rep.mats.push_back(detail::coords_in_basis(bt, image));
    }
    s.incl = std::move(bases);
    return s;
}

// Quotient of M by an arrow-closed family of per-vertex subspaces. Returns
// the quotient, the projection, and a linear (not module) section used for
// lifting.
template <class K>
struct QuotientRep {
    Rep<K> rep;
    std::vector<Mat<K>> proj;  // quot-dim x ambient-dim
    std::vector<Mat<K>> lift;  // ambient-dim x quot-dim, proj*lift = I
};

template <class K>
QuotientRep<K> quotient_rep(const Rep<K>& M, const std::vector<Mat<K>>& sub_bases) {
    QuotientRep<K> q;
    q.rep.A = M.A;
    q.rep.dims.resize(M.n());
    for (int v = 0; v < M.n(); ++v) {
        Mat<K> b = detail::column_basis(sub_bases[v]);
        int d = M.dims[v], k = b.c;
        // leading coordinates of the subspace, from the echelon row form
        Mat<K> bt = b.transpose();
        auto pivots = rref(bt);
        std::vector<bool> lead(d, false);
        for (int p : pivots) lead[p] = true;
        std::vector<int> comp;
        for (int i = 0; i < d; ++i)
            if (!lead[i]) comp.push_back(i);
        engine_check(static_cast<int>(comp.size()) == d - k, "quotient complement size");

        const K& f = M.field();
        Mat<K> full(f, d, d);  // [b | complement standard vectors]
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < k; ++j) full.at(i, j) = b.at(i, j);
        for (size_t j = 0; j < comp.size(); ++j)
            full.at(comp[j], k + static_cast<int>(j)) = f.one();
        auto inv = inverse(full);
        engine_check(inv.has_value(), "quotient basis completion not invertible");

        Mat<K> proj(f, d - k, d);
        for (int i = 0; i < d - k; ++i)
            for (int j = 0; j < d; ++j) proj.at(i, j) = inv->at(k + i, j);
        Mat<K> lift(f, d, d - k);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d - k; ++j) lift.at(i, j) = full.at(i, k + j);
        q.proj.push_back(std::move(proj));
        q.lift.push_back(std::move(lift));
        q.rep.dims[v] = d - k;
    }
    for (size_t a = 0; a < M.mats.size(); ++a) {
        const Arrow& ar = M.A->quiver.arrows[a];
        q.rep.mats.push_back(q.proj[ar.target - 1] * M.mats[a] * q.lift[ar.source - 1]);
    }
    return q;
}

// Kernel of a morphism f: M -> N, as a subrepresentation of M.
template <class K>
SubRep<K> kernel(const Rep<K>& M, const Rep<K>& /*N*/, const Morph<K>& f) {
    std::vector<Mat<K>> bases;
    for (int v = 0; v < M.n(); ++v) bases.push_back(nullspace(f.at_vertex[v]));
    return sub_rep(M, bases);
}

// Image of f, as a subrepresentation of N.
template <class K>
SubRep<K> image(const Rep<K>& /*M*/, const Rep<K>& N, const Morph<K>& f) {
    std::vector<Mat<K>> bases;
    for (int v = 0; v < N.n(); ++v) bases.push_back(detail::column_basis(f.at_vertex[v]));
    return sub_rep(N, bases);
}

template <class K>
Rep<K> cokernel(const Rep<K>& /*M*/, const Rep<K>& N, const Morph<K>& f) {
    std::vector<Mat<K>> bases;
    for (int v = 0; v < N.n(); ++v) bases.push_back(detail::column_basis(f.at_vertex[v]));
    return quotient_rep(N, bases).rep;
}

}  // namespace tautilt
