#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace tautilt {

using DimVector = std::vector<int>;

// Domain-level failure (bad input, contract violation by the caller).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// A computation refused because a configured combinatorial budget was hit.
// Refusals are explicit; nothing is truncated silently.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

// Internal invariant broke. Always a bug, never a data problem.
struct EngineError : std::logic_error {
    explicit EngineError(const std::string& msg) : std::logic_error(msg) {}
};

inline void engine_check(bool ok, const std::string& msg) {
    if (!ok) throw EngineError(msg);
}

inline int total(const DimVector& d) {
    int s = 0;
    for (int x : d) s += x;
    return s;
}

inline DimVector add(const DimVector& a, const DimVector& b) {
    engine_check(a.size() == b.size(), "dim vector size mismatch");
    DimVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline DimVector sub(const DimVector& a, const DimVector& b) {
    engine_check(a.size() == b.size(), "dim vector size mismatch");
    DimVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline bool is_zero(const DimVector& d) {
    for (int x : d)
        if (x != 0) return false;
    return true;
}

// Divide by the gcd of the entries; sign is kept. Zero stays zero.
inline std::vector<long long> primitive(std::vector<long long> v) {
    long long g = 0;
    for (long long x : v) g = std::gcd(g, x < 0 ? -x : x);
    if (g > 1)
        for (auto& x : v) x /= g;
    return v;
}

inline bool proportional(const DimVector& a, const DimVector& b) {
    if (a.size() != b.size()) return false;
    // cross-ratio test: a[i]*b[j] == a[j]*b[i] for all i,j
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j)
            if (static_cast<long long>(a[i]) * b[j] != static_cast<long long>(a[j]) * b[i])
                return false;
    return true;
}

inline std::string to_string(const DimVector& d) {
    std::string s = "(";
    for (size_t i = 0; i < d.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(d[i]);
    }
    return s + ")";
}

}  // namespace tautilt
