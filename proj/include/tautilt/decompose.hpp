#pragma once

#include <functional>

#include "tautilt/hom.hpp"

namespace tautilt {

struct DecomposeOptions {
    int exhaustive_end_dim = 6;  // scan all of End when dim End <= this
    int random_tries = 512;
};

namespace detail {

template <class K>
Morph<K> combine(const HomSpace<K>& H, const std::vector<typename K::Elem>& coeffs,
                 const K& f) {
    Morph<K> m;
    const auto& first = H.basis.front();
    for (size_t v = 0; v < first.at_vertex.size(); ++v) {
        Mat<K> acc(f, first.at_vertex[v].r, first.at_vertex[v].c);
        for (size_t b = 0; b < H.basis.size(); ++b) {
            if (f.is_zero(coeffs[b])) continue;
            acc = acc + H.basis[b].at_vertex[v].scaled(coeffs[b]);
        }
        m.at_vertex.push_back(std::move(acc));
    }
    return m;
}

// Fitting: for f in End(M), M = ker(f^N) + im(f^N) for large N. Returns the
// stable power.
template <class K>
Morph<K> stable_power(const Rep<K>& M, Morph<K> f) {
    int steps = 1;
    int N = M.total_dim();
    while ((1 << steps) < N + 1) ++steps;
    for (int s = 0; s < steps; ++s) f = compose(M, f, f);
    return f;
}

// Proper Fitting split of M along f, if any: returns (ker part, im part).
template <class K>
std::optional<std::pair<Rep<K>, Rep<K>>> fitting_split(const Rep<K>& M, const Morph<K>& f) {
    Morph<K> g = stable_power(M, f);
    SubRep<K> im = image(M, M, g);
    if (im.rep.is_zero() || im.rep.dims == M.dims) return std::nullopt;
    SubRep<K> ker = kernel(M, M, g);
    engine_check(add(ker.rep.dims, im.rep.dims) == M.dims, "Fitting split dims mismatch");
    return std::make_pair(ker.rep, im.rep);
}

// Searches End(M) for an element with a proper Fitting split.  Returns the
// split if found; nullopt means certified indecomposable (every scanned
// element was invertible or nilpotent, and the scan was exhaustive).
// Throws when neither outcome can be certified within the options.
template <class K>
std::optional<std::pair<Rep<K>, Rep<K>>> find_split(const Rep<K>& M,
                                                    const HomSpace<K>& H,
                                                    const DecomposeOptions& opt) {
    const K& f = M.field();
    for (const auto& b : H.basis) {
        auto s = fitting_split(M, b);
        if (s) return s;
    }
    int e = H.dim();
    if (e == 1) return std::nullopt;

    if constexpr (K::prime) {
        double combos = 1;
        for (int i = 0; i < e; ++i) combos *= f.p;
        if (e <= opt.exhaustive_end_dim && combos <= 65536.0) {
            std::vector<typename K::Elem> c(e, f.zero());
            std::function<std::optional<std::pair<Rep<K>, Rep<K>>>(int)> scan =
                [&](int i) -> std::optional<std::pair<Rep<K>, Rep<K>>> {
                if (i == e) {
                    bool any = false;
                    for (auto x : c)
                        if (!f.is_zero(x)) any = true;
                    if (!any) return std::nullopt;
                    return fitting_split(M, combine(H, c, f));
                }
                for (uint32_t v = 0; v < f.p; ++v) {
                    c[i] = v;
                    if (auto s = scan(i + 1)) return s;
                }
                c[i] = f.zero();
                return std::nullopt;
            };
            return scan(0);  // nullopt here is a certificate
        }
    }
    // bounded random search; a miss is inconclusive, not a certificate
    uint64_t state = 0x9e3779b97f4a7c15ull ^ (static_cast<uint64_t>(e) << 32);
    auto next = [&]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    for (int t = 0; t < opt.random_tries; ++t) {
        std::vector<typename K::Elem> c(e);
        for (int i = 0; i < e; ++i) c[i] = f.from_int(static_cast<long long>(next() % 1024));
        if (auto s = fitting_split(M, combine(H, c, f))) return s;
    }
    throw DomainError("decomposition inconclusive: dim End = " + std::to_string(e) +
                      " exceeds the exhaustive budget");
}

}  // namespace detail

template <class K>
bool is_indecomposable(const Rep<K>& M, DecomposeOptions opt = {}) {
    if (M.is_zero()) return false;
    HomSpace<K> H = end_basis(M);
    if (H.dim() == 1) return true;
    return !detail::find_split(M, H, opt).has_value();
}

// Indecomposable summands, with multiplicity (repeated entries).
template <class K>
std::vector<Rep<K>> decompose(const Rep<K>& M, DecomposeOptions opt = {}) {
    std::vector<Rep<K>> out;
    if (M.is_zero()) return out;
    HomSpace<K> H = end_basis(M);
    if (H.dim() == 1) return {M};
    auto split = detail::find_split(M, H, opt);
    if (!split) return {M};
    for (const Rep<K>& part : {split->first, split->second})
        for (auto& sub : decompose(part, opt)) out.push_back(std::move(sub));
    return out;
}

}  // namespace tautilt
