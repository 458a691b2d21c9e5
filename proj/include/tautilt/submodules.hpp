#pragma once

#include <functional>
#include <set>
#include <unordered_set>

#include "tautilt/representation.hpp"

namespace tautilt {

struct SubmoduleOptions {
    int max_total_dim = 10;     // refuse above this (never truncate silently)
    size_t max_states = 4'000'000;
    size_t max_top_tuples = 400'000;  // layered fast path budget
};

namespace detail {

// Enumerates every subspace of F_p^d by reduced echelon bases.
// fn receives the basis rows (possibly empty).
inline void for_each_subspace(const PrimeField& f, int d,
                              const std::function<void(const std::vector<std::vector<uint32_t>>&)>& fn) {
    std::vector<std::vector<uint32_t>> rows;
    fn(rows);  // zero subspace
    std::vector<int> pivots;
    std::function<void(int)> choose = [&](int from) {
        for (int c = from; c < d; ++c) {
            pivots.push_back(c);
            // fill free entries: row i, columns j > pivots[i], j not a pivot
            std::vector<std::pair<int, int>> free_pos;
            for (size_t i = 0; i < pivots.size(); ++i)
                for (int j = pivots[i] + 1; j < d; ++j) {
                    bool is_p = false;
                    for (int pc : pivots)
                        if (pc == j) is_p = true;
                    if (!is_p) free_pos.emplace_back(static_cast<int>(i), j);
                }
            rows.assign(pivots.size(), std::vector<uint32_t>(d, 0));
            for (size_t i = 0; i < pivots.size(); ++i) rows[i][pivots[i]] = 1;
            std::function<void(size_t)> fill = [&](size_t k) {
                if (k == free_pos.size()) {
                    fn(rows);
                    return;
                }
                for (uint32_t val = 0; val < f.p; ++val) {
                    rows[free_pos[k].first][free_pos[k].second] = val;
                    fill(k + 1);
                }
            };
            fill(0);
            choose(c + 1);
            pivots.pop_back();
        }
    };
    choose(0);
}

// Per-vertex spans of a submodule, with a canonical flat key.
template <class K>
struct SubState {
    std::vector<RowSpan<K>> spans;

    DimVector dims() const {
        DimVector d;
        for (const auto& s : spans) d.push_back(s.dim());
        return d;
    }
};

template <class K>
std::vector<uint32_t> state_key(const SubState<K>& st) {
    static_assert(K::prime, "state keys need prime-field elements");
    std::vector<uint32_t> key;
    for (const auto& s : st.spans) {
        key.push_back(0xffffffffu);
        for (const auto& row : s.rows())
            for (auto x : row) key.push_back(x);
    }
    return key;
}

struct KeyHash {
    size_t operator()(const std::vector<uint32_t>& v) const {
        size_t h = 1469598103934665603ull;
        for (uint32_t x : v) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace detail

// The exact set of dimension vectors of subrepresentations of N.
//
// Two strategies: a layered fast path when the nonzero arrow actions form a
// one-step bipartite flow (then a submodule is a free choice of subspaces at
// the source layer plus anything above the image at the target layer), and a
// generic lattice walk: all vertex-cyclic submodules, closed under sums.
template <class K>
std::set<DimVector> submodule_dim_vectors(const Rep<K>& N, SubmoduleOptions opt = {}) {
    static_assert(K::prime, "submodule enumeration runs over a prime field");
    if (N.total_dim() > opt.max_total_dim)
        throw BudgetError("submodule enumeration refused: total dimension " +
                          std::to_string(N.total_dim()) + " exceeds bound " +
                          std::to_string(opt.max_total_dim) + " for " + to_string(N.dims));

    const K& f = N.field();
    const int n = N.n();

    // classify active arrows
    std::vector<int> active;
    for (size_t a = 0; a < N.mats.size(); ++a)
        if (!N.mats[a].is_zero()) active.push_back(static_cast<int>(a));

    std::vector<bool> is_src(n + 1, false), is_tgt(n + 1, false);
    for (int a : active) {
        is_src[N.A->quiver.arrows[a].source] = true;
        is_tgt[N.A->quiver.arrows[a].target] = true;
    }
    bool layered = true;
    for (int v = 1; v <= n; ++v)
        if (is_src[v] && is_tgt[v]) layered = false;

    std::set<DimVector> out;

    if (layered) {
        // product of subspace choices over source vertices
        std::vector<int> tops;
        for (int v = 1; v <= n; ++v)
            if (is_src[v] && N.dim_at(v) > 0) tops.push_back(v);
        size_t tuple_estimate = 1;
        for (int v : tops) {
            size_t cnt = 0;
            detail::for_each_subspace(f, N.dim_at(v),
                                      [&](const auto&) { ++cnt; });
            tuple_estimate *= cnt;
            if (tuple_estimate > opt.max_top_tuples) break;
        }
        if (tuple_estimate <= opt.max_top_tuples) {
            std::vector<std::vector<std::vector<std::vector<uint32_t>>>> choices(tops.size());
            for (size_t t = 0; t < tops.size(); ++t)
                detail::for_each_subspace(f, N.dim_at(tops[t]), [&](const auto& rows) {
                    choices[t].push_back(rows);
                });

            std::vector<size_t> idx(tops.size(), 0);
            for (;;) {
                // closure dims at every target vertex
                DimVector lower(n, 0), upper(n, 0);
                for (int v = 1; v <= n; ++v) upper[v - 1] = N.dim_at(v);
                DimVector base(n, 0);
                std::vector<RowSpan<K>> cl;
                for (int v = 0; v < n; ++v) cl.emplace_back(f, N.dims[v]);
                for (size_t t = 0; t < tops.size(); ++t) {
                    int v = tops[t];
                    base[v - 1] = static_cast<int>(choices[t][idx[t]].size());
                    upper[v - 1] = base[v - 1];
                    lower[v - 1] = base[v - 1];
                    for (int a : active) {
                        const Arrow& ar = N.A->quiver.arrows[a];
                        if (ar.source != v) continue;
                        for (const auto& row : choices[t][idx[t]]) {
                            std::vector<typename K::Elem> x(row.begin(), row.end());
                            cl[ar.target - 1].insert(N.mats[a].mul_vec(x));
                        }
                    }
                }
                for (int v = 1; v <= n; ++v)
                    if (!is_src[v]) lower[v - 1] = cl[v - 1].dim();

                // expand the free ranges
                std::function<void(int, DimVector&)> emit = [&](int v, DimVector& cur) {
                    if (v == n) {
                        out.insert(cur);
                        return;
                    }
                    for (int d = lower[v]; d <= upper[v]; ++d) {
                        cur[v] = d;
                        emit(v + 1, cur);
                    }
                };
                DimVector cur(n, 0);
                emit(0, cur);

                // odometer
                size_t t = 0;
                while (t < tops.size() && ++idx[t] == choices[t].size()) {
                    idx[t] = 0;
                    ++t;
                }
                if (t == tops.size()) break;
            }
            return out;
        }
        // fall through to the generic walk when the product is too large
    }

    // generic walk: vertex-cyclic submodules, closed under sums
    using State = detail::SubState<K>;
    std::vector<State> cyclics;
    std::unordered_set<std::vector<uint32_t>, detail::KeyHash> seen;

    auto make_state = [&](int v, const std::vector<typename K::Elem>& x) {
        std::vector<Mat<K>> spans;
        for (int w = 0; w < n; ++w) spans.emplace_back(f, N.dims[w], 0);
        Mat<K> col(f, N.dims[v - 1], 1);
        for (int i = 0; i < N.dims[v - 1]; ++i) col.at(i, 0) = x[i];
        spans[v - 1] = col;
        SubRep<K> s = sub_rep_closure(N, spans);
        State st;
        for (int w = 0; w < n; ++w) {
            st.spans.emplace_back(f, N.dims[w]);
            for (int j = 0; j < s.incl[w].c; ++j) {
                std::vector<typename K::Elem> vec(N.dims[w]);
                for (int i = 0; i < N.dims[w]; ++i) vec[i] = s.incl[w].at(i, j);
                st.spans[w].insert(std::move(vec));
            }
        }
        return st;
    };

    for (int v = 1; v <= n; ++v) {
        int d = N.dim_at(v);
        if (d == 0) continue;
        // nonzero vectors up to scalar: first nonzero coordinate equals 1
        std::vector<typename K::Elem> x(d, f.zero());
        std::function<void(int, bool)> gen = [&](int i, bool lead) {
            if (i == d) {
                if (lead) {
                    State st = make_state(v, x);
                    auto key = detail::state_key(st);
                    if (seen.insert(key).second) cyclics.push_back(std::move(st));
                }
                return;
            }
            if (!lead) {
                x[i] = f.zero();
                gen(i + 1, false);
                x[i] = f.one();
                gen(i + 1, true);
            } else {
                for (uint32_t val = 0; val < f.p; ++val) {
                    x[i] = val;
                    gen(i + 1, true);
                }
            }
            x[i] = f.zero();
        };
        gen(0, false);
    }

    State zero;
    for (int w = 0; w < n; ++w) zero.spans.emplace_back(f, N.dims[w]);
    out.insert(zero.dims());
    seen.clear();
    seen.insert(detail::state_key(zero));

    std::vector<State> work{zero};
    for (const auto& c : cyclics) {
        auto key = detail::state_key(c);
        if (seen.insert(key).second) work.push_back(c);
    }
    for (const auto& st : work) out.insert(st.dims());

    for (size_t head = 0; head < work.size(); ++head) {
        if (work.size() > opt.max_states)
            throw BudgetError("submodule enumeration refused: state budget exceeded for " +
                              to_string(N.dims));
        for (const auto& c : cyclics) {
            State joined = work[head];
            bool grew = false;
            for (int w = 0; w < n; ++w)
                for (const auto& row : c.spans[w].rows()) {
                    auto copy = row;
                    grew |= joined.spans[w].insert(std::move(copy));
                }
            if (!grew) continue;
            auto key = detail::state_key(joined);
            if (seen.insert(key).second) {
                out.insert(joined.dims());
                work.push_back(std::move(joined));
            }
        }
    }
    return out;
}

// Quotient dimension vectors: [N] minus each submodule dimension vector.
template <class K>
std::set<DimVector> quotient_dim_vectors(const Rep<K>& N, SubmoduleOptions opt = {}) {
    std::set<DimVector> out;
    for (const auto& s : submodule_dim_vectors(N, opt)) out.insert(sub(N.dims, s));
    return out;
}

}  // namespace tautilt
