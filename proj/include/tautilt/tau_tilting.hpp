#pragma once

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "tautilt/decompose.hpp"
#include "tautilt/presentation.hpp"

namespace tautilt {

struct CatalogOptions {
    uint64_t max_candidates_per_dimvec = 8'000'000;
    DecomposeOptions decompose;
    int threads = 0;  // 0 = hardware
};

// Catalog of indecomposable modules up to a per-vertex dimension bound over
// a prime field: the full corpus, the tau-rigid sublist, the projectives as
// shifted-pair candidates, and the pairwise compatibility tables.
template <class K>
struct Catalog {
    AlgebraPtr<K> A;
    int dim_bound = 0;

    std::vector<Rep<K>> corpus;           // all indecomposables, canonical order
    std::vector<DimVector> corpus_g;      // cached g-vectors
    std::vector<Rep<K>> corpus_tau;       // cached tau
    std::vector<char> corpus_is_tau_rigid;
    std::vector<int> tau_rigid;           // corpus indices

    std::vector<Rep<K>> projectives;      // P(1)..P(n)

    // compatibility over corpus indices (tau-rigid entries only)
    std::vector<std::vector<char>> compat_mm;
    std::vector<std::vector<char>> compat_pm;  // [vertex-1][corpus index]

    int n() const { return A->n(); }

    int find_class(const Rep<K>& X) const {
        for (size_t i = 0; i < corpus.size(); ++i)
            if (corpus[i].dims == X.dims && isomorphic_indec(corpus[i], X))
                return static_cast<int>(i);
        return -1;
    }
};

// A tau-rigid pair in catalog terms: module summands as corpus indices plus
// shifted projective vertices. Summands are kept in canonical order.
struct PairRef {
    std::vector<int> modules;
    std::vector<int> shifted;

    int size() const { return static_cast<int>(modules.size() + shifted.size()); }
    bool operator==(const PairRef& o) const {
        return modules == o.modules && shifted == o.shifted;
    }
    bool operator<(const PairRef& o) const {
        return std::tie(modules, shifted) < std::tie(o.modules, o.shifted);
    }
};

namespace detail {

// Pre-expanded relation checks: for each, sum of coeff * (product of the
// word's matrices) must vanish. Includes the nilpotency-degree words.
template <class K>
struct RelationPlan {
    struct Term {
        typename K::Elem coeff;
        std::vector<int> word;
    };
    std::vector<std::vector<Term>> checks;
};

template <class K>
RelationPlan<K> make_relation_plan(const PathAlgebra<K>& A) {
    RelationPlan<K> plan;
    for (const auto& rel : A.relations.relations) {
        typename RelationPlan<K>::Term t;
        std::vector<typename RelationPlan<K>::Term> chk;
        for (const auto& term : rel.terms)
            chk.push_back({A.field.from_rational(term.coeff), term.arrows});
        if (!chk.empty()) plan.checks.push_back(std::move(chk));
    }
    for (const Path& p : enumerate_paths(A.quiver, A.bound + 1))
        if (p.length() == A.bound)
            plan.checks.push_back({{A.field.one(), p.arrows}});
    return plan;
}

template <class K>
bool passes_relations(const Rep<K>& M, const RelationPlan<K>& plan) {
    for (const auto& chk : plan.checks) {
        Mat<K> acc;
        bool have = false;
        for (const auto& term : chk) {
            const Arrow& a0 = M.A->quiver.arrows[term.word.front()];
            const Arrow& a1 = M.A->quiver.arrows[term.word.back()];
            if (M.dim_at(a0.source) == 0 || M.dim_at(a1.target) == 0) continue;
            Mat<K> prod = M.mats[term.word[0]];
            bool dead = prod.c == 0 || prod.r == 0;
            for (size_t i = 1; i < term.word.size() && !dead; ++i) {
                prod = M.mats[term.word[i]] * prod;
                dead = prod.r == 0;
            }
            if (dead) continue;
            Mat<K> scaled = prod.scaled(term.coeff);
            if (!have) {
                acc = std::move(scaled);
                have = true;
            } else {
                acc = acc + scaled;
            }
        }
        if (have && !acc.is_zero()) return false;
    }
    return true;
}

// Rank-only indecomposability: certified via Fitting on End basis elements,
// exhaustively over small End, else bounded random search.
enum class IndecStatus { indec, decomposable, inconclusive };

template <class K>
IndecStatus indec_status(const Rep<K>& M, const DecomposeOptions& opt) {
    if (M.is_zero()) return IndecStatus::decomposable;
    HomSpace<K> H = end_basis(M);
    const K& f = M.field();
    int e = H.dim();
    if (e == 1) return IndecStatus::indec;

    auto proper_fitting = [&](const Morph<K>& m) {
        Morph<K> g = stable_power(M, m);
        int rk = 0;
        for (int v = 0; v < M.n(); ++v) rk += rank(g.at_vertex[v]);
        return rk > 0 && rk < M.total_dim();
    };

    for (const auto& b : H.basis)
        if (proper_fitting(b)) return IndecStatus::decomposable;

    if constexpr (K::prime) {
        double combos = 1;
        for (int i = 0; i < e; ++i) combos *= f.p;
        if (e <= opt.exhaustive_end_dim && combos <= 65536.0) {
            std::vector<typename K::Elem> c(e, f.zero());
            bool found = false;
            std::function<void(int)> scan = [&](int i) {
                if (found) return;
                if (i == e) {
                    Morph<K> m = combine(H, c, f);
                    if (!m.is_zero() && proper_fitting(m)) found = true;
                    return;
                }
                for (uint32_t v = 0; v < f.p && !found; ++v) {
                    c[i] = v;
                    scan(i + 1);
                }
                c[i] = f.zero();
            };
            scan(0);
            return found ? IndecStatus::decomposable : IndecStatus::indec;
        }
    }
    uint64_t state = 0xd1b54a32d192ed03ull ^ static_cast<uint64_t>(e);
    auto next = [&]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    for (int t = 0; t < opt.random_tries; ++t) {
        std::vector<typename K::Elem> c(e);
        for (int i = 0; i < e; ++i) c[i] = f.from_int(static_cast<long long>(next() % 257));
        if (proper_fitting(combine(H, c, f))) return IndecStatus::decomposable;
    }
    return IndecStatus::inconclusive;
}

inline bool support_connected(const Quiver& q, const DimVector& d) {
    int n = q.n;
    std::vector<int> comp(n + 1, -1);
    int start = 0;
    for (int v = 1; v <= n; ++v)
        if (d[v - 1] > 0) {
            start = v;
            break;
        }
    if (start == 0) return false;
    std::vector<int> stack{start};
    comp[start] = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const Arrow& a : q.arrows) {
            int other = -1;
            if (a.source == v && d[a.target - 1] > 0)
                other = a.target;
            else if (a.target == v && d[a.source - 1] > 0)
                other = a.source;
            if (other > 0 && comp[other] < 0) {
                comp[other] = 0;
                stack.push_back(other);
            }
        }
    }
    for (int v = 1; v <= n; ++v)
        if (d[v - 1] > 0 && comp[v] < 0) return false;
    return true;
}

}  // namespace detail

// Exhaustive enumeration of indecomposables with all dim-vector entries
// <= dim_bound, up to isomorphism. One non-loop arrow per dimension vector
// is pinned to rank normal form (a free base change), the rest is scanned;
// anything beyond the candidate budget is refused by naming the offending
// dimension vector.
template <class K>
Catalog<K> enumerate_catalog(const AlgebraPtr<K>& A, int dim_bound,
                             CatalogOptions opt = {}) {
    static_assert(K::prime, "catalog enumeration runs over a prime field");
    if (dim_bound < 1) throw DomainError("dim bound must be >= 1");
    [[maybe_unused]] const K f = A->field;
    const int n = A->n();
    const auto plan = detail::make_relation_plan(*A);

    // dimension vectors, lexicographic
    std::vector<DimVector> dimvecs;
    DimVector d(n, 0);
    std::function<void(int)> gen = [&](int v) {
        if (v == n) {
            if (!is_zero(d) && detail::support_connected(A->quiver, d)) dimvecs.push_back(d);
            return;
        }
        for (int x = 0; x <= dim_bound; ++x) {
            d[v] = x;
            gen(v + 1);
        }
        d[v] = 0;
    };
    gen(0);

    // budget pre-check (refusal happens before any work starts)
    for (const auto& dv : dimvecs) {
        uint64_t count = 1;
        bool over = false;
        int best = -1, best_sz = 0;
        for (size_t a = 0; a < A->quiver.arrows.size(); ++a) {
            const Arrow& ar = A->quiver.arrows[a];
            int sz = dv[ar.source - 1] * dv[ar.target - 1];
            if (sz > 0 && ar.source != ar.target && sz > best_sz) {
                best_sz = sz;
                best = static_cast<int>(a);
            }
        }
        for (size_t a = 0; a < A->quiver.arrows.size(); ++a) {
            const Arrow& ar = A->quiver.arrows[a];
            int sz = dv[ar.source - 1] * dv[ar.target - 1];
            if (static_cast<int>(a) == best || sz == 0) continue;
            for (int i = 0; i < sz; ++i) {
                count *= f.p;
                if (count > opt.max_candidates_per_dimvec) {
                    over = true;
                    break;
                }
            }
            if (over) break;
        }
        if (over)
            throw BudgetError("catalog enumeration refused: dimension vector " +
                              to_string(dv) + " exceeds the candidate budget");
    }

    // scan one dimension vector; returns representatives of the iso classes
    auto scan_dimvec = [&](const DimVector& dv) {
        std::vector<Rep<K>> classes;
        std::vector<int> relevant;
        int canon = -1, canon_sz = 0;
        for (size_t a = 0; a < A->quiver.arrows.size(); ++a) {
            const Arrow& ar = A->quiver.arrows[a];
            int sz = dv[ar.source - 1] * dv[ar.target - 1];
            if (sz == 0) continue;
            relevant.push_back(static_cast<int>(a));
            if (ar.source != ar.target && sz > canon_sz) {
                canon_sz = sz;
                canon = static_cast<int>(a);
            }
        }
        std::vector<int> free_arrows;
        for (int a : relevant)
            if (a != canon) free_arrows.push_back(a);

        Rep<K> M;
        M.A = A;
        M.dims = dv;
        for (const Arrow& ar : A->quiver.arrows)
            M.mats.emplace_back(f, dv[ar.target - 1], dv[ar.source - 1]);

        int max_rank = 0;
        if (canon >= 0) {
            const Arrow& ar = A->quiver.arrows[canon];
            max_rank = std::min(dv[ar.source - 1], dv[ar.target - 1]);
        }

        // flat odometer over the free entries
        std::vector<std::pair<int, int>> cells;  // (arrow, flat entry)
        for (int a : free_arrows)
            for (int i = 0; i < M.mats[a].r * M.mats[a].c; ++i) cells.emplace_back(a, i);
        std::vector<uint32_t> digits(cells.size(), 0);

        for (int rk = 0; rk <= std::max(max_rank, 0); ++rk) {
            if (canon >= 0) {
                Mat<K>& cm = M.mats[canon];
                for (auto& x : cm.a) x = f.zero();
                for (int i = 0; i < rk; ++i) cm.at(i, i) = f.one();
            }
            std::fill(digits.begin(), digits.end(), 0);
            for (;;) {
                for (size_t ci = 0; ci < cells.size(); ++ci)
                    M.mats[cells[ci].first].a[cells[ci].second] = digits[ci];
                if (detail::passes_relations(M, plan)) {
                    auto status = detail::indec_status(M, opt.decompose);
                    if (status == detail::IndecStatus::inconclusive)
                        throw BudgetError(
                            "catalog enumeration refused: indecomposability "
                            "inconclusive at dimension vector " +
                            to_string(dv));
                    if (status == detail::IndecStatus::indec) {
                        bool known = false;
                        for (const auto& cls : classes)
                            if (isomorphic_indec(cls, M)) {
                                known = true;
                                break;
                            }
                        if (!known) classes.push_back(M);
                    }
                }
                size_t ci = 0;
                while (ci < digits.size() && ++digits[ci] == f.p) {
                    digits[ci] = 0;
                    ++ci;
                }
                if (ci == digits.size()) break;
            }
            if (canon < 0) break;
        }
        return classes;
    };

    std::vector<std::vector<Rep<K>>> slots(dimvecs.size());
    unsigned hw = opt.threads > 0 ? static_cast<unsigned>(opt.threads)
                                  : std::max(1u, std::thread::hardware_concurrency());
    std::atomic<size_t> cursor{0};
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto worker = [&]() {
        for (;;) {
            size_t i = cursor.fetch_add(1);
            if (i >= dimvecs.size()) return;
            try {
                slots[i] = scan_dimvec(dimvecs[i]);
            } catch (...) {
                std::lock_guard<std::mutex> lk(failure_mu);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };
    for (unsigned t = 0; t + 1 < hw; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);

    Catalog<K> cat;
    cat.A = A;
    cat.dim_bound = dim_bound;
    for (auto& slot : slots)
        for (auto& rep : slot) cat.corpus.push_back(std::move(rep));

    // canonical order: dim vector, then g-vector, then matrix bytes
    std::vector<DimVector> gs;
    for (const auto& r : cat.corpus) gs.push_back(g_vector(r));
    std::vector<size_t> order(cat.corpus.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    auto bytes = [&](size_t i) {
        std::vector<uint32_t> b;
        for (const auto& m : cat.corpus[i].mats)
            for (auto x : m.a) b.push_back(x);
        return b;
    };
    std::sort(order.begin(), order.end(), [&](size_t x, size_t y) {
        if (cat.corpus[x].dims != cat.corpus[y].dims)
            return cat.corpus[x].dims < cat.corpus[y].dims;
        if (gs[x] != gs[y]) return gs[x] < gs[y];
        return bytes(x) < bytes(y);
    });
    std::vector<Rep<K>> sorted;
    sorted.reserve(cat.corpus.size());
    for (size_t i : order) sorted.push_back(cat.corpus[i]);
    cat.corpus = std::move(sorted);

    cat.corpus_g.clear();
    for (const auto& r : cat.corpus) {
        cat.corpus_g.push_back(g_vector(r));
        cat.corpus_tau.push_back(tau_rep(r));
    }
    for (size_t i = 0; i < cat.corpus.size(); ++i) {
        bool rigid = dim_hom(cat.corpus[i], cat.corpus_tau[i]) == 0;
        cat.corpus_is_tau_rigid.push_back(rigid ? 1 : 0);
        if (rigid) cat.tau_rigid.push_back(static_cast<int>(i));
    }

    for (int v = 1; v <= n; ++v) cat.projectives.push_back(projective_rep(A, v));

    size_t m = cat.corpus.size();
    cat.compat_mm.assign(m, std::vector<char>(m, 0));
    for (int i : cat.tau_rigid)
        for (int j : cat.tau_rigid) {
            if (j < i) continue;
            bool ok = dim_hom(cat.corpus[i], cat.corpus_tau[j]) == 0 &&
                      dim_hom(cat.corpus[j], cat.corpus_tau[i]) == 0;
            cat.compat_mm[i][j] = cat.compat_mm[j][i] = ok ? 1 : 0;
        }
    cat.compat_pm.assign(n, std::vector<char>(m, 0));
    for (int v = 1; v <= n; ++v)
        for (int i : cat.tau_rigid)
            cat.compat_pm[v - 1][i] = dim_hom(cat.projectives[v - 1], cat.corpus[i]) == 0;

    return cat;
}

// ---- pair-level operations ----

template <class K>
Rep<K> module_part(const Catalog<K>& cat, const PairRef& p) {
    Rep<K> m = zero_rep(cat.A);
    for (int i : p.modules) m = direct_sum(m, cat.corpus[i]);
    return m;
}

template <class K>
Rep<K> shifted_part(const Catalog<K>& cat, const PairRef& p) {
    Rep<K> m = zero_rep(cat.A);
    for (int v : p.shifted) m = direct_sum(m, cat.projectives[v - 1]);
    return m;
}

// Raw definition check on explicit representations.
template <class K>
bool is_tau_rigid_pair(const Rep<K>& M, const Rep<K>& P) {
    return dim_hom(M, tau_rep(M)) == 0 && dim_hom(P, M) == 0;
}

// g-matrix columns: g^{M_i} for modules, -g^{P(v)} = -e_v for shifted.
template <class K>
std::vector<DimVector> g_columns(const Catalog<K>& cat, const PairRef& p) {
    std::vector<DimVector> cols;
    for (int i : p.modules) cols.push_back(cat.corpus_g[i]);
    for (int v : p.shifted) {
        DimVector e(cat.n(), 0);
        e[v - 1] = -1;
        cols.push_back(e);
    }
    return cols;
}

template <class K>
PairRef canonical_pair(const Catalog<K>& cat, PairRef p) {
    std::sort(p.modules.begin(), p.modules.end(), [&](int a, int b) {
        return cat.corpus_g[a] < cat.corpus_g[b];
    });
    std::sort(p.shifted.begin(), p.shifted.end());
    return p;
}

template <class K>
long long g_matrix_det(const Catalog<K>& cat, const PairRef& p) {
    engine_check(p.size() == cat.n(), "g-matrix determinant needs a full pair");
    RationalField Q;
    Mat<RationalField> m(Q, cat.n(), cat.n());
    auto cols = g_columns(cat, p);
    for (int j = 0; j < cat.n(); ++j)
        for (int i = 0; i < cat.n(); ++i) m.at(i, j) = Rational(cols[j][i]);
    Rational dv = det(std::move(m));
    engine_check(dv.is_integer(), "integer determinant expected");
    return dv.num();
}

// All tau-tilting pairs: size-n cliques of the compatibility graph,
// re-verified against the definition on assembled representations.
template <class K>
std::vector<PairRef> assemble_tau_tilting_pairs(const Catalog<K>& cat) {
    const int n = cat.n();
    std::vector<PairRef> out;

    // nodes: tau-rigid corpus classes then shifted projectives
    int m = static_cast<int>(cat.tau_rigid.size());
    int total_nodes = m + n;
    auto compatible = [&](int x, int y) {
        bool xa = x < m, ya = y < m;
        if (xa && ya) return cat.compat_mm[cat.tau_rigid[x]][cat.tau_rigid[y]] != 0;
        if (!xa && !ya) return true;
        int v = (xa ? y : x) - m + 1;
        int c = cat.tau_rigid[xa ? x : y];
        return cat.compat_pm[v - 1][c] != 0;
    };

    std::vector<int> pick;
    std::function<void(int)> rec = [&](int from) {
        if (static_cast<int>(pick.size()) == n) {
            PairRef p;
            for (int node : pick)
                if (node < m)
                    p.modules.push_back(cat.tau_rigid[node]);
                else
                    p.shifted.push_back(node - m + 1);
            p = canonical_pair(cat, p);
            // re-verify the definition on the assembled pair
            Rep<K> M = module_part(cat, p), P = shifted_part(cat, p);
            engine_check(is_tau_rigid_pair(M, P), "assembled pair fails the definition");
            long long dv = g_matrix_det(cat, p);
            engine_check(dv == 1 || dv == -1, "tau-tilting pair g-matrix not unimodular");
            out.push_back(std::move(p));
            return;
        }
        for (int node = from; node < total_nodes; ++node) {
            bool ok = true;
            for (int prev : pick)
                if (!compatible(prev, node)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            pick.push_back(node);
            rec(node + 1);
            pick.pop_back();
        }
    };
    rec(0);
    std::sort(out.begin(), out.end(), [&](const PairRef& a, const PairRef& b) {
        return g_columns(cat, a) < g_columns(cat, b);
    });
    return out;
}

// The other completion of the almost pair obtained by dropping summand k
// (combined index: modules first, then shifted). Exactly one must exist in
// the catalog.
template <class K>
PairRef mutate(const Catalog<K>& cat, const PairRef& pair, int k) {
    engine_check(pair.size() == cat.n(), "mutate needs a tau-tilting pair");
    if (k < 0 || k >= pair.size()) throw DomainError("summand index out of range");

    PairRef rest = pair;
    bool dropped_module = k < static_cast<int>(pair.modules.size());
    int dropped_class = -1, dropped_vertex = -1;
    if (dropped_module) {
        dropped_class = rest.modules[k];
        rest.modules.erase(rest.modules.begin() + k);
    } else {
        int j = k - static_cast<int>(pair.modules.size());
        dropped_vertex = rest.shifted[j];
        rest.shifted.erase(rest.shifted.begin() + j);
    }

    std::vector<PairRef> completions;
    for (int c : cat.tau_rigid) {
        if (dropped_module && c == dropped_class) continue;
        bool ok = true;
        for (int i : rest.modules)
            if (i == c || !cat.compat_mm[i][c]) ok = false;
        for (int v : rest.shifted)
            if (!cat.compat_pm[v - 1][c]) ok = false;
        if (!ok) continue;
        PairRef cand = rest;
        cand.modules.push_back(c);
        cand = canonical_pair(cat, cand);
        if (is_tau_rigid_pair(module_part(cat, cand), shifted_part(cat, cand)))
            completions.push_back(std::move(cand));
    }
    for (int v = 1; v <= cat.n(); ++v) {
        if (!dropped_module && v == dropped_vertex) continue;
        bool present = false;
        for (int w : rest.shifted) present |= (w == v);
        if (present) continue;
        bool ok = true;
        for (int i : rest.modules)
            if (!cat.compat_pm[v - 1][i]) ok = false;
        if (!ok) continue;
        PairRef cand = rest;
        cand.shifted.push_back(v);
        cand = canonical_pair(cat, cand);
        if (is_tau_rigid_pair(module_part(cat, cand), shifted_part(cat, cand)))
            completions.push_back(std::move(cand));
    }

    if (completions.size() != 1)
        throw BudgetError("mutation found " + std::to_string(completions.size()) +
                          " completions instead of 1: catalog bound too small or the "
                          "algebra is tau-tilting infinite at this bound");
    return completions.front();
}

// Fac M membership and the torsion-class descriptor over the corpus.
template <class K>
bool fac_membership(const Catalog<K>& cat, const Rep<K>& X, const PairRef& pair) {
    return in_fac(module_part(cat, pair), X);
}

struct TorsionClassDescriptor {
    std::vector<char> members;  // over corpus indices

    bool contains(int i) const { return members[i] != 0; }
    int count() const {
        int c = 0;
        for (char m : members) c += m != 0;
        return c;
    }
    bool operator==(const TorsionClassDescriptor& o) const { return members == o.members; }
    // strict and non-strict containment
    bool subset_of(const TorsionClassDescriptor& o) const {
        for (size_t i = 0; i < members.size(); ++i)
            if (members[i] && !o.members[i]) return false;
        return true;
    }
};

template <class K>
TorsionClassDescriptor torsion_class(const Catalog<K>& cat, const PairRef& pair) {
    TorsionClassDescriptor t;
    Rep<K> M = module_part(cat, pair);
    for (const auto& X : cat.corpus) t.members.push_back(in_fac(M, X) ? 1 : 0);
    return t;
}

// Corpus members of M-perp  cap  perp(tau M)  cap  P-perp. For an almost
// tau-tilting pair exactly one stable object must show up downstream; the
// caller checks the count.
template <class K>
std::vector<int> semistable_category(const Catalog<K>& cat, const PairRef& pair) {
    Rep<K> M = module_part(cat, pair);
    Rep<K> P = shifted_part(cat, pair);
    Rep<K> tauM = tau_rep(M);
    std::vector<int> out;
    for (size_t i = 0; i < cat.corpus.size(); ++i) {
        const Rep<K>& X = cat.corpus[i];
        if (dim_hom(M, X) == 0 && dim_hom(X, tauM) == 0 && dim_hom(P, X) == 0)
            out.push_back(static_cast<int>(i));
    }
    return out;
}

}  // namespace tautilt
