#pragma once

#include <algorithm>
#include <map>
#include <memory>

#include "tautilt/matrix.hpp"
#include "tautilt/quiver.hpp"

namespace tautilt {

template <class K>
class PathAlgebra;

template <class K>
using AlgebraPtr = std::shared_ptr<const PathAlgebra<K>>;

// Finite-dimensional quotient A = kQ/(I + J^m) of a path algebra, presented
// by a normal-form path basis and a multiplication table.
//
// Construction: enumerate all paths of length < m, close the relation set
// into a two-sided ideal by multiplying with paths on both sides, and row
// reduce. Pivot paths rewrite into the span of smaller paths (degree-lex
// order); the non-pivot paths are the basis. Paths of length >= m are zero
// by fiat, which is what keeps everything finite. A sparse element is a map
// basis-index -> coefficient.
template <class K>
class PathAlgebra {
public:
    using E = typename K::Elem;
    using Sparse = std::vector<std::pair<int, E>>;  // (basis index, coeff), sorted

    K field;
    Quiver quiver;
    RelationSet relations;
    int bound = 0;  // effective nilpotency bound m

    std::vector<Path> paths;       // all paths of length < m, ascending path order
    std::vector<int> basis_ids;    // path ids that are normal forms
    std::vector<int> basis_index;  // path id -> basis position, or -1

    int n() const { return quiver.n; }
    int dim() const { return static_cast<int>(basis_ids.size()); }
    const Path& basis_path(int b) const { return paths[basis_ids[b]]; }

    int idempotent(int v) const {
        engine_check(v >= 1 && v <= n(), "vertex out of range");
        return trivial_basis_[v - 1];
    }

    // basis positions of normal-form paths from vertex s to vertex t
    const std::vector<int>& basis_between(int s, int t) const {
        return between_[(s - 1) * quiver.n + (t - 1)];
    }

    // Rewrite an arbitrary path (given as a Path object) into the basis span.
    Sparse rewrite(const Path& p) const {
        if (p.length() >= bound) return {};
        auto it = path_id_.find(key(p));
        engine_check(it != path_id_.end(), "rewrite: path not enumerated");
        return rewrite_[it->second];
    }

    // Product of two basis elements; zero when endpoints mismatch. The
    // product x*y composes function-style: y acts first, so x*y exists when
    // source(x) == target(y).
    const Sparse& mul_basis(int bx, int by) const {
        return table_[static_cast<size_t>(bx) * dim() + by];
    }

    Sparse mul(const Sparse& x, const Sparse& y) const {
        std::map<int, E> acc;
        for (const auto& [bx, cx] : x)
            for (const auto& [by, cy] : y) {
                auto coeff = field.mul(cx, cy);
                if (field.is_zero(coeff)) continue;
                for (const auto& [bz, cz] : mul_basis(bx, by)) {
                    auto it = acc.try_emplace(bz, field.zero()).first;
                    it->second = field.add(it->second, field.mul(coeff, cz));
                }
            }
        Sparse out;
        for (auto& [b, cval] : acc)
            if (!field.is_zero(cval)) out.emplace_back(b, cval);
        return out;
    }

    // Full associativity scan over basis triples. Test support; O(dim^3).
    bool check_associativity() const {
        for (int i = 0; i < dim(); ++i)
            for (int j = 0; j < dim(); ++j)
                for (int k = 0; k < dim(); ++k) {
                    Sparse ij = mul_basis(i, j);
                    Sparse jk = mul_basis(j, k);
                    if (mul(ij, {{k, field.one()}}) != mul({{i, field.one()}}, jk))
                        return false;
                }
        return true;
    }

    DimVector projective_dims(int v) const {
        DimVector d(quiver.n, 0);
        for (int t = 1; t <= quiver.n; ++t)
            d[t - 1] = static_cast<int>(basis_between(v, t).size());
        return d;
    }

private:
    template <class K2>
    friend PathAlgebra<K2> build_path_algebra(K2, Quiver, RelationSet);

    using PathKey = std::pair<int, std::vector<int>>;
    static PathKey key(const Path& p) { return {p.source, p.arrows}; }

    std::map<PathKey, int> path_id_;
    std::vector<Sparse> rewrite_;      // per path id
    std::vector<Sparse> table_;        // dim x dim
    std::vector<int> trivial_basis_;   // per vertex
    std::vector<std::vector<int>> between_;
};

namespace detail {

inline std::vector<Path> enumerate_paths(const Quiver& q, int max_len_exclusive) {
    std::vector<Path> all;
    for (int v = 1; v <= q.n; ++v) all.push_back(Path::trivial(v));
    size_t level_begin = 0;
    for (int len = 1; len < max_len_exclusive; ++len) {
        size_t level_end = all.size();
        for (size_t i = level_begin; i < level_end; ++i)
            for (size_t a = 0; a < q.arrows.size(); ++a)
                if (q.arrows[a].source == all[i].target) {
                    Path p = all[i];
                    p.arrows.push_back(static_cast<int>(a));
                    p.target = q.arrows[a].target;
                    all.push_back(std::move(p));
                }
        if (all.size() == level_end) break;  // no paths at this length
        level_begin = level_end;
    }
    std::sort(all.begin(), all.end());
    return all;
}

}  // namespace detail

// Builds kQ/(I + J^m). When relations.nilpotency_bound is 0 the bound is
// detected: the working degree grows until the top degree carries no normal
// form, then shrinks to (longest normal form) + 1. Growth is capped; hitting
// the cap raises a DomainError asking for an explicit bound.
template <class K>
PathAlgebra<K> build_path_algebra(K field, Quiver quiver, RelationSet relations) {
    quiver.validate();
    relations.validate(quiver);

    constexpr int kAutoCap = 12;
    bool auto_bound = relations.nilpotency_bound == 0;
    int m = auto_bound ? 2 : relations.nilpotency_bound;

    for (;; m += auto_bound ? 1 : 0) {
        PathAlgebra<K> A;
        A.field = field;
        A.quiver = quiver;
        A.relations = relations;
        A.bound = m;
        A.paths = detail::enumerate_paths(quiver, m);
        const int P = static_cast<int>(A.paths.size());
        for (int i = 0; i < P; ++i) A.path_id_[PathAlgebra<K>::key(A.paths[i])] = i;

        // Ideal closure. Columns are paths in *descending* path order so the
        // row reducer's leading entry is the largest path of each element.
        auto col_of = [P](int pid) { return P - 1 - pid; };
        auto pid_of = [P](int col) { return P - 1 - col; };
        RowSpan<K> ideal(field, P);

        for (const auto& rel : relations.relations) {
            if (rel.terms.empty()) continue;
            const auto& w0 = rel.terms.front().arrows;
            int rs = quiver.arrows[w0.front()].source;
            int rt = quiver.arrows[w0.back()].target;
            for (const Path& left : A.paths) {
                if (left.target != rs) continue;
                for (const Path& right : A.paths) {
                    if (right.source != rt) continue;
                    std::vector<typename K::Elem> vec(P, field.zero());
                    bool nonzero = false;
                    for (const auto& term : rel.terms) {
                        int len = left.length() + static_cast<int>(term.arrows.size()) +
                                  right.length();
                        if (len >= m) continue;
                        Path p = left;
                        p.arrows.insert(p.arrows.end(), term.arrows.begin(), term.arrows.end());
                        p.arrows.insert(p.arrows.end(), right.arrows.begin(),
                                        right.arrows.end());
                        p.target = right.target;
                        auto it = A.path_id_.find(PathAlgebra<K>::key(p));
                        engine_check(it != A.path_id_.end(), "closure: path missing");
                        auto coeff = field.from_rational(term.coeff);
                        vec[col_of(it->second)] = field.add(vec[col_of(it->second)], coeff);
                        nonzero = true;
                    }
                    if (nonzero) ideal.insert(std::move(vec));
                }
            }
        }

        // Basis = non-pivot paths; pivots rewrite into smaller normal forms.
        std::vector<bool> is_pivot(P, false);
        std::vector<int> pivot_row(P, -1);
        for (size_t ri = 0; ri < ideal.rows().size(); ++ri) {
            int lead = -1;
            for (int j = 0; j < P; ++j)
                if (!field.is_zero(ideal.rows()[ri][j])) {
                    lead = j;
                    break;
                }
            engine_check(lead >= 0, "empty ideal row");
            is_pivot[pid_of(lead)] = true;
            pivot_row[pid_of(lead)] = static_cast<int>(ri);
        }

        A.basis_index.assign(P, -1);
        for (int pid = 0; pid < P; ++pid)
            if (!is_pivot[pid]) {
                A.basis_index[pid] = static_cast<int>(A.basis_ids.size());
                A.basis_ids.push_back(pid);
            }

        int top_nf_len = 0;
        for (int b : A.basis_ids) top_nf_len = std::max(top_nf_len, A.paths[b].length());

        if (auto_bound) {
            bool captured = top_nf_len < m - 1 || detail::enumerate_paths(quiver, m + 1).size() ==
                                                      A.paths.size();
            if (!captured) {
                if (m >= kAutoCap)
                    throw DomainError(
                        "cannot certify finite dimensionality within degree " +
                        std::to_string(kAutoCap) + "; set rad_nilpotency explicitly");
                continue;  // grow m
            }
            // lock in the tight bound and rebuild once for clean tables
            if (top_nf_len + 2 <= m) {
                relations.nilpotency_bound = std::max(2, top_nf_len + 1);
                auto_bound = false;
                m = relations.nilpotency_bound;
                continue;
            }
            A.relations.nilpotency_bound = m;
        }

        // rewrite table per path
        A.rewrite_.resize(P);
        for (int pid = 0; pid < P; ++pid) {
            if (!is_pivot[pid]) {
                A.rewrite_[pid] = {{A.basis_index[pid], field.one()}};
                continue;
            }
            const auto& row = ideal.rows()[pivot_row[pid]];
            typename PathAlgebra<K>::Sparse combo;
            for (int j = col_of(pid) + 1; j < P; ++j) {
                if (field.is_zero(row[j])) continue;
                int qid = pid_of(j);
                engine_check(!is_pivot[qid], "ideal basis not fully reduced");
                combo.emplace_back(A.basis_index[qid], field.neg(row[j]));
            }
            std::sort(combo.begin(), combo.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            A.rewrite_[pid] = std::move(combo);
        }

        // vertex-to-vertex basis lists and idempotents
        A.between_.assign(static_cast<size_t>(quiver.n) * quiver.n, {});
        A.trivial_basis_.assign(quiver.n, -1);
        for (int b = 0; b < A.dim(); ++b) {
            const Path& p = A.basis_path(b);
            A.between_[(p.source - 1) * quiver.n + (p.target - 1)].push_back(b);
            if (p.length() == 0) A.trivial_basis_[p.source - 1] = b;
        }
        for (int v = 0; v < quiver.n; ++v)
            engine_check(A.trivial_basis_[v] >= 0, "trivial path fell into the ideal");

        // multiplication table
        A.table_.assign(static_cast<size_t>(A.dim()) * A.dim(), {});
        for (int i = 0; i < A.dim(); ++i) {
            const Path& pi = A.basis_path(i);
            for (int j = 0; j < A.dim(); ++j) {
                const Path& pj = A.basis_path(j);
                if (pj.target != pi.source) continue;  // x*y: y first
                if (pj.length() + pi.length() >= m) continue;
                Path prod = concat_then(pj, pi);
                auto it = A.path_id_.find(PathAlgebra<K>::key(prod));
                engine_check(it != A.path_id_.end(), "product path missing");
                A.table_[static_cast<size_t>(i) * A.dim() + j] = A.rewrite_[it->second];
            }
        }
        return A;
    }
}

}  // namespace tautilt
