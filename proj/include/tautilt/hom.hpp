#pragma once

#include "tautilt/representation.hpp"

namespace tautilt {

// Basis of Hom_A(M, N), computed as the nullspace of the commuting-square
// system: unknowns are the per-vertex matrices f_v, equations are
// f_{t(a)} M_a = N_a f_{s(a)} for every arrow a. Relations hold for free
// since both modules satisfy them.
template <class K>
struct HomSpace {
    DimVector source_dims, target_dims;
    std::vector<Morph<K>> basis;

    int dim() const { return static_cast<int>(basis.size()); }
};

namespace detail {

template <class K>
Mat<K> intertwiner_system(const Rep<K>& M, const Rep<K>& N) {
    const K& f = M.field();
    const int n = M.n();
    std::vector<int> offset(n + 1, 0);
    for (int v = 0; v < n; ++v) offset[v + 1] = offset[v] + N.dims[v] * M.dims[v];
    int cols = offset[n];

    int rows = 0;
    for (size_t a = 0; a < M.mats.size(); ++a) {
        const Arrow& ar = M.A->quiver.arrows[a];
        rows += N.dim_at(ar.target) * M.dim_at(ar.source);
    }

    Mat<K> sys(f, rows, cols);
    int row = 0;
    for (size_t a = 0; a < M.mats.size(); ++a) {
        const Arrow& ar = M.A->quiver.arrows[a];
        int u = ar.source - 1, w = ar.target - 1;
        const Mat<K>& Ma = M.mats[a];
        const Mat<K>& Na = N.mats[a];
        // equation block: f_w * M_a - N_a * f_u = 0, entry (i, j)
        for (int i = 0; i < N.dims[w]; ++i)
            for (int j = 0; j < M.dims[u]; ++j) {
                for (int k = 0; k < M.dims[w]; ++k) {
                    // unknown f_w[i,k]
                    if (!f.is_zero(Ma.at(k, j)))
                        sys.at(row, offset[w] + i * M.dims[w] + k) =
                            f.add(sys.at(row, offset[w] + i * M.dims[w] + k), Ma.at(k, j));
                }
                for (int k = 0; k < N.dims[u]; ++k) {
                    // unknown f_u[k,j]
                    if (!f.is_zero(Na.at(i, k)))
                        sys.at(row, offset[u] + k * M.dims[u] + j) =
                            f.sub(sys.at(row, offset[u] + k * M.dims[u] + j), Na.at(i, k));
                }
                ++row;
            }
    }
    return sys;
}

}  // namespace detail

template <class K>
HomSpace<K> hom_basis(const Rep<K>& M, const Rep<K>& N) {
    if (M.A != N.A) throw DomainError("hom between modules over different algebras");
    HomSpace<K> h;
    h.source_dims = M.dims;
    h.target_dims = N.dims;
    if (M.is_zero() || N.is_zero()) return h;

    const K& f = M.field();
    const int n = M.n();
    Mat<K> sys = detail::intertwiner_system(M, N);
    Mat<K> ker = nullspace(sys);

    std::vector<int> offset(n + 1, 0);
    for (int v = 0; v < n; ++v) offset[v + 1] = offset[v] + N.dims[v] * M.dims[v];

    for (int col = 0; col < ker.c; ++col) {
        Morph<K> m;
        for (int v = 0; v < n; ++v) {
            Mat<K> fv(f, N.dims[v], M.dims[v]);
            for (int i = 0; i < N.dims[v]; ++i)
                for (int j = 0; j < M.dims[v]; ++j)
                    fv.at(i, j) = ker.at(offset[v] + i * M.dims[v] + j, col);
            m.at_vertex.push_back(std::move(fv));
        }
        h.basis.push_back(std::move(m));
    }
    return h;
}

template <class K>
int dim_hom(const Rep<K>& M, const Rep<K>& N) {
    if (M.is_zero() || N.is_zero()) return 0;
    Mat<K> sys = detail::intertwiner_system(M, N);
    return sys.c - rank(std::move(sys));
}

template <class K>
HomSpace<K> end_basis(const Rep<K>& M) {
    return hom_basis(M, M);
}

template <class K>
bool is_brick(const Rep<K>& M) {
    return !M.is_zero() && dim_hom(M, M) == 1;
}

// Trace of N in Fac M: the sum of the images of all morphisms M -> N, equal
// to the image of any right add(M)-approximation. Returned with inclusion.
template <class K>
SubRep<K> trace_sub(const Rep<K>& M, const Rep<K>& N) {
    const K& f = N.field();
    HomSpace<K> h = hom_basis(M, N);
    std::vector<Mat<K>> spans;
    for (int v = 0; v < N.n(); ++v) {
        Mat<K> s(f, N.dims[v], static_cast<int>(h.basis.size()) * M.dims[v]);
        int off = 0;
        for (const auto& m : h.basis) {
            for (int i = 0; i < N.dims[v]; ++i)
                for (int j = 0; j < M.dims[v]; ++j) s.at(i, off + j) = m.at_vertex[v].at(i, j);
            off += M.dims[v];
        }
        spans.push_back(detail::column_basis(s));
    }
    return sub_rep(N, spans);  // images of morphisms are arrow-closed
}

template <class K>
DimVector trace_dims(const Rep<K>& M, const Rep<K>& N) {
    return trace_sub(M, N).rep.dims;
}

// X lies in Fac M iff the trace of X in Fac M is all of X.
template <class K>
bool in_fac(const Rep<K>& M, const Rep<K>& X) {
    if (X.is_zero()) return true;
    if (M.is_zero()) return false;
    return trace_dims(M, X) == X.dims;
}

// Isomorphism test for indecomposable modules. With End(M) local, M and N
// are isomorphic iff some composite g_j f_i of hom-basis elements is
// invertible; a sum of nilpotents in a local ring cannot be the identity,
// so scanning the basis pairs is conclusive.
template <class K>
bool isomorphic_indec(const Rep<K>& M, const Rep<K>& N) {
    if (M.dims != N.dims) return false;
    if (M.is_zero()) return true;
    HomSpace<K> fwd = hom_basis(M, N);
    if (fwd.dim() == 0) return false;
    HomSpace<K> bwd = hom_basis(N, M);
    for (const auto& fm : fwd.basis)
        for (const auto& gm : bwd.basis) {
            bool invertible = true;
            for (int v = 0; v < M.n() && invertible; ++v) {
                if (M.dims[v] == 0) continue;
                Mat<K> comp = gm.at_vertex[v] * fm.at_vertex[v];
                if (rank(std::move(comp)) < M.dims[v]) invertible = false;
            }
            if (invertible) return true;
        }
    return false;
}

}  // namespace tautilt
