#pragma once

#include <algorithm>

#include "tautilt/matrix.hpp"

namespace tautilt {

// Exact double description for the small polyhedral cones that show up in
// stability spaces: from {x : E x = 0, A x <= 0} to extreme rays plus a
// lineality basis. Dimensions here are <= 4 and constraint counts stay in
// the dozens, so every step simply refilters rays by the rank test instead
// of keeping adjacency bookkeeping.

struct ConeHRep {
    int n = 0;
    std::vector<std::vector<long long>> equalities;    // e . x = 0
    std::vector<std::vector<long long>> inequalities;  // a . x <= 0
};

struct ConeVRep {
    int n = 0;
    std::vector<std::vector<long long>> rays;       // primitive, sorted
    std::vector<std::vector<long long>> lineality;  // primitive echelon rows
    int dim = 0;
};

namespace detail {

inline Rational dot(const std::vector<long long>& a, const std::vector<Rational>& x) {
    Rational s;
    for (size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * x[i];
    return s;
}

inline long long dot_ll(const std::vector<long long>& a, const std::vector<long long>& x) {
    long long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * x[i];
    return s;
}

inline std::vector<long long> to_primitive(const std::vector<Rational>& v) {
    long long lcm = 1;
    for (const auto& x : v) lcm = std::lcm(lcm, x.den());
    std::vector<long long> out;
    for (const auto& x : v) out.push_back(x.num() * (lcm / x.den()));
    return primitive(out);
}

inline int rank_ll(const std::vector<std::vector<long long>>& rows, int n) {
    RationalField Q;
    Mat<RationalField> m(Q, static_cast<int>(rows.size()), n);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < n; ++j) m.at(static_cast<int>(i), j) = Rational(rows[i][j]);
    return rank(std::move(m));
}

}  // namespace detail

inline ConeVRep double_description(const ConeHRep& h) {
    const int n = h.n;
    RationalField Q;

    // equality = two opposite inequalities
    std::vector<std::vector<long long>> cons;
    for (const auto& e : h.equalities) {
        cons.push_back(e);
        std::vector<long long> neg;
        for (long long x : e) neg.push_back(-x);
        cons.push_back(std::move(neg));
    }
    for (const auto& a : h.inequalities) cons.push_back(a);

    // state: lineality (rational rows) + rays (rational rows)
    std::vector<std::vector<Rational>> lin, rays;
    for (int i = 0; i < n; ++i) {
        std::vector<Rational> e(n);
        e[i] = Rational(1);
        lin.push_back(std::move(e));
    }

    std::vector<std::vector<long long>> processed;
    for (const auto& c : cons) {
        // pull the lineality component that sees the constraint
        int pivot = -1;
        for (size_t i = 0; i < lin.size(); ++i)
            if (!detail::dot(c, lin[i]).is_zero()) {
                pivot = static_cast<int>(i);
                break;
            }
        if (pivot >= 0) {
            std::vector<Rational> l = lin[pivot];
            lin.erase(lin.begin() + pivot);
            Rational cl = detail::dot(c, l);
            for (auto& other : lin) {
                Rational s = detail::dot(c, other) / cl;
                for (int j = 0; j < n; ++j) other[j] -= s * l[j];
            }
            for (auto& r : rays) {
                Rational s = detail::dot(c, r) / cl;
                for (int j = 0; j < n; ++j) r[j] -= s * l[j];
            }
            // the feasible half of l becomes a ray
            std::vector<Rational> r0 = l;
            if (cl.sign() > 0)
                for (auto& x : r0) x = -x;
            rays.push_back(std::move(r0));
        }

        std::vector<std::vector<Rational>> keep, pos, neg;
        for (auto& r : rays) {
            int s = detail::dot(c, r).sign();
            if (s < 0)
                neg.push_back(std::move(r));
            else if (s == 0)
                keep.push_back(std::move(r));
            else
                pos.push_back(std::move(r));
        }
        for (const auto& p : pos)
            for (const auto& q : neg) {
                Rational cp = detail::dot(c, p), cq = detail::dot(c, q);
                std::vector<Rational> combo(n);
                for (int j = 0; j < n; ++j) combo[j] = cp * q[j] - cq * p[j];
                bool nonzero = false;
                for (const auto& x : combo) nonzero |= !x.is_zero();
                if (nonzero) keep.push_back(std::move(combo));
            }
        for (auto& q : neg) keep.push_back(std::move(q));
        rays = std::move(keep);
        processed.push_back(c);

        // canonicalize, dedup, refilter to extreme rays
        std::vector<std::vector<long long>> prim;
        for (const auto& r : rays) {
            auto p = detail::to_primitive(r);
            bool nz = false;
            for (long long x : p) nz |= x != 0;
            if (nz) prim.push_back(std::move(p));
        }
        std::sort(prim.begin(), prim.end());
        prim.erase(std::unique(prim.begin(), prim.end()), prim.end());

        int lin_dim = static_cast<int>(lin.size());
        std::vector<std::vector<long long>> extreme;
        for (const auto& r : prim) {
            // face spanned by the constraints tight at r
            std::vector<std::vector<long long>> tight;
            for (const auto& pc : processed)
                if (detail::dot_ll(pc, r) == 0) tight.push_back(pc);
            Mat<RationalField> m(Q, static_cast<int>(tight.size()), n);
            for (size_t i = 0; i < tight.size(); ++i)
                for (int j = 0; j < n; ++j)
                    m.at(static_cast<int>(i), j) = Rational(tight[i][j]);
            int face_dim = n - rank(std::move(m));
            if (face_dim == lin_dim + 1) extreme.push_back(r);
        }
        rays.clear();
        for (const auto& r : extreme) {
            std::vector<Rational> rr;
            for (long long x : r) rr.emplace_back(x);
            rays.push_back(std::move(rr));
        }
    }

    ConeVRep v;
    v.n = n;
    for (const auto& r : rays) v.rays.push_back(detail::to_primitive(r));
    std::sort(v.rays.begin(), v.rays.end());
    // canonical echelon basis for the lineality space
    if (!lin.empty()) {
        RowSpan<RationalField> span(Q, n);
        for (const auto& l : lin) span.insert(l);
        for (const auto& row : span.rows()) v.lineality.push_back(detail::to_primitive(row));
    }
    std::vector<std::vector<long long>> all = v.rays;
    for (const auto& l : v.lineality) all.push_back(l);
    v.dim = detail::rank_ll(all, n);
    return v;
}

inline bool cone_contains_point(const ConeHRep& h, const std::vector<Rational>& x) {
    for (const auto& e : h.equalities)
        if (!detail::dot(e, x).is_zero()) return false;
    for (const auto& a : h.inequalities)
        if (detail::dot(a, x).sign() > 0) return false;
    return true;
}

inline bool cone_contains_point(const ConeHRep& h, const std::vector<long long>& x) {
    std::vector<Rational> q;
    for (long long v : x) q.emplace_back(v);
    return cone_contains_point(h, q);
}

// Set equality of two cones given by H-representations, via generator checks
// in both directions.
inline bool same_cone(const ConeHRep& a, const ConeHRep& b) {
    ConeVRep va = double_description(a), vb = double_description(b);
    if (va.dim != vb.dim) return false;
    auto inside = [](const ConeHRep& h, const ConeVRep& v) {
        for (const auto& r : v.rays)
            if (!cone_contains_point(h, r)) return false;
        for (const auto& l : v.lineality) {
            std::vector<long long> neg;
            for (long long x : l) neg.push_back(-x);
            if (!cone_contains_point(h, l) || !cone_contains_point(h, neg)) return false;
        }
        return true;
    };
    return inside(b, va) && inside(a, vb);
}

}  // namespace tautilt
