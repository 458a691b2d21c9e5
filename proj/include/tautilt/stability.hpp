#pragma once

#include "tautilt/cone_dd.hpp"
#include "tautilt/submodules.hpp"

namespace tautilt {

using Theta = std::vector<Rational>;  // a stability parameter in Q^n

inline Rational theta_pairing(const Theta& th, const DimVector& d) {
    Rational s;
    for (size_t i = 0; i < th.size(); ++i) s += th[i] * Rational(d[i]);
    return s;
}

inline Theta theta_of(const DimVector& d) {
    Theta t;
    for (int x : d) t.emplace_back(x);
    return t;
}

// theta-semistable: orthogonal to [N] and nonpositive on every submodule.
template <class K>
bool is_semistable(const Theta& th, const Rep<K>& N, SubmoduleOptions opt = {}) {
    if (N.is_zero()) return false;
    if (!theta_pairing(th, N.dims).is_zero()) return false;
    for (const auto& L : submodule_dim_vectors(N, opt))
        if (theta_pairing(th, L).sign() > 0) return false;
    return true;
}

// theta-stable: strict on proper nonzero submodules.
template <class K>
bool is_stable(const Theta& th, const Rep<K>& N, SubmoduleOptions opt = {}) {
    if (N.is_zero()) return false;
    if (!theta_pairing(th, N.dims).is_zero()) return false;
    for (const auto& L : submodule_dim_vectors(N, opt)) {
        if (is_zero(L) || L == N.dims) continue;
        if (theta_pairing(th, L).sign() >= 0) return false;
    }
    return true;
}

// D(N) as an H-description (one equality + the submodule inequalities) with
// its V-description, dimension, and wall flag.
template <class K>
struct StabilitySpace {
    DimVector module_dims;
    std::vector<DimVector> sub_dims;  // proper nonzero submodule dim vectors
    ConeHRep hrep;
    ConeVRep vrep;
    int codim = 0;
    bool is_wall = false;
};

template <class K>
StabilitySpace<K> stability_space(const Rep<K>& N, SubmoduleOptions opt = {}) {
    engine_check(!N.is_zero(), "stability space of the zero module");
    StabilitySpace<K> s;
    s.module_dims = N.dims;
    s.hrep.n = N.n();
    s.hrep.equalities.push_back(std::vector<long long>(N.dims.begin(), N.dims.end()));
    for (const auto& L : submodule_dim_vectors(N, opt)) {
        if (is_zero(L) || L == N.dims) continue;
        s.sub_dims.push_back(L);
        s.hrep.inequalities.push_back(std::vector<long long>(L.begin(), L.end()));
    }
    s.vrep = double_description(s.hrep);
    s.codim = N.n() - s.vrep.dim;
    s.is_wall = s.codim == 1;
    return s;
}

// Bridgeland's torsion class at theta: all quotients pair nonnegatively.
template <class K>
bool in_t_theta(const Theta& th, const Rep<K>& M, SubmoduleOptions opt = {}) {
    if (M.is_zero()) return true;
    for (const auto& Q : quotient_dim_vectors(M, opt))
        if (theta_pairing(th, Q).sign() < 0) return false;
    return true;
}

template <class K>
std::vector<int> torsion_class_t_theta(const Theta& th, const std::vector<Rep<K>>& corpus,
                                       SubmoduleOptions opt = {}) {
    std::vector<int> out;
    for (size_t i = 0; i < corpus.size(); ++i)
        if (in_t_theta(th, corpus[i], opt)) out.push_back(static_cast<int>(i));
    return out;
}

}  // namespace tautilt
