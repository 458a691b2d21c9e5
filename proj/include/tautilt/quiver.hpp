#pragma once

#include <map>
#include <string>
#include <vector>

#include "tautilt/base.hpp"
#include "tautilt/rational.hpp"

namespace tautilt {

struct Arrow {
    std::string name;
    int source = 0;  // vertices are 1..n
    int target = 0;
};

struct Quiver {
    int n = 0;
    std::vector<Arrow> arrows;

    void validate() const {
        if (n <= 0) throw DomainError("quiver needs a positive vertex count");
        std::map<std::string, int> seen;
        for (size_t i = 0; i < arrows.size(); ++i) {
            const Arrow& a = arrows[i];
            if (a.source < 1 || a.source > n || a.target < 1 || a.target > n)
                throw DomainError("arrow '" + a.name + "' references unknown vertex");
            if (a.name.empty()) throw DomainError("arrow with empty name");
            if (!seen.emplace(a.name, static_cast<int>(i)).second)
                throw DomainError("duplicate arrow name '" + a.name + "'");
        }
    }

    int arrow_index(const std::string& name) const {
        for (size_t i = 0; i < arrows.size(); ++i)
            if (arrows[i].name == name) return static_cast<int>(i);
        throw DomainError("unknown arrow '" + name + "'");
    }

    std::vector<int> arrows_from(int v) const {
        std::vector<int> out;
        for (size_t i = 0; i < arrows.size(); ++i)
            if (arrows[i].source == v) out.push_back(static_cast<int>(i));
        return out;
    }

    std::vector<int> arrows_into(int v) const {
        std::vector<int> out;
        for (size_t i = 0; i < arrows.size(); ++i)
            if (arrows[i].target == v) out.push_back(static_cast<int>(i));
        return out;
    }
};

// A path stores its arrows in traversal order: arrows[0] leaves `source` and
// arrows.back() enters `target`. The trivial path at v has no arrows.
struct Path {
    int source = 0;
    int target = 0;
    std::vector<int> arrows;

    int length() const { return static_cast<int>(arrows.size()); }

    static Path trivial(int v) { return Path{v, v, {}}; }

    bool operator==(const Path& o) const {
        return source == o.source && arrows == o.arrows;
    }
    bool operator<(const Path& o) const {
        if (length() != o.length()) return length() < o.length();
        if (source != o.source) return source < o.source;
        return arrows < o.arrows;
    }
};

// first `a`, then `b`
inline Path concat_then(const Path& a, const Path& b) {
    engine_check(a.target == b.source, "path concatenation endpoint mismatch");
    Path p{a.source, b.target, a.arrows};
    p.arrows.insert(p.arrows.end(), b.arrows.begin(), b.arrows.end());
    return p;
}

// One term of a relation: coeff * (word of arrow indices in traversal order).
struct RelationTerm {
    Rational coeff;
    std::vector<int> arrows;
};

struct Relation {
    std::vector<RelationTerm> terms;
};

struct RelationSet {
    std::vector<Relation> relations;
    int nilpotency_bound = 0;  // 0 = detect during closure

    // Checks admissibility: each term is a genuine path of length >= 2 and
    // all terms of one relation are parallel.
    void validate(const Quiver& q) const {
        if (nilpotency_bound != 0 && nilpotency_bound < 2)
            throw DomainError("nilpotency bound must be >= 2");
        for (size_t r = 0; r < relations.size(); ++r) {
            int src = -1, tgt = -1;
            for (const auto& term : relations[r].terms) {
                if (term.arrows.size() < 2)
                    throw DomainError("relation " + std::to_string(r) +
                                      " contains a path of length < 2");
                int s = q.arrows[term.arrows.front()].source;
                int cur = s;
                for (int ai : term.arrows) {
                    if (ai < 0 || ai >= static_cast<int>(q.arrows.size()))
                        throw DomainError("relation " + std::to_string(r) +
                                          " references unknown arrow");
                    if (q.arrows[ai].source != cur)
                        throw DomainError("relation " + std::to_string(r) +
                                          " contains a non-composable word");
                    cur = q.arrows[ai].target;
                }
                if (src == -1) {
                    src = s;
                    tgt = cur;
                } else if (s != src || cur != tgt) {
                    throw DomainError("relation " + std::to_string(r) +
                                      " mixes non-parallel paths");
                }
            }
        }
    }
};

// Expands the radical-square-zero shorthand: one monomial relation per
// length-2 path of the quiver.
inline std::vector<Relation> radical_square_zero_relations(const Quiver& q) {
    std::vector<Relation> out;
    for (size_t a = 0; a < q.arrows.size(); ++a)
        for (size_t b = 0; b < q.arrows.size(); ++b)
            if (q.arrows[a].target == q.arrows[b].source)
                out.push_back(Relation{{RelationTerm{
                    Rational(1), {static_cast<int>(a), static_cast<int>(b)}}}});
    return out;
}

}  // namespace tautilt
