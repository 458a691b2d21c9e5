#pragma once

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "tautilt/path_algebra.hpp"

namespace tautilt {

struct ParseError : DomainError {
    explicit ParseError(const std::string& msg) : DomainError(msg) {}
};

// Parsed algebra specification: quiver with relations plus the field choice.
//
// Document format (JSON):
//   {
//     "vertices": 3,
//     "arrows": [["a", 1, 2], ["b", 2, 3], ["c", 3, 1]],
//     "relations": ["a.b.c", [{"coeff": "1", "path": ["b","c","a"]}]],
//     "rad_nilpotency": 3,          // optional; omitted = detect
//     "radical_square_zero": true,  // optional shorthand
//     "field": "fp", "prime": 2     // optional; defaults rational / p=2
//   }
//
// A relation is a signed combination of parallel paths. The string form is
// [-][coeff*]name(.name)* with arrow names joined by '.'; the object form
// spells out {"coeff": ..., "path": [...]} for anything the string form
// cannot express.
struct AlgebraSpec {
    Quiver quiver;
    RelationSet relations;
    std::string field = "rational";
    uint32_t prime = 2;
};

namespace detail {

inline RelationTerm parse_term_string(const Quiver& q, std::string s, size_t rel_idx) {
    RelationTerm term;
    term.coeff = Rational(1);
    auto fail = [&](const std::string& why) {
        throw ParseError("relation " + std::to_string(rel_idx) + ", term '" + s +
                         "': " + why);
    };
    // trim
    while (!s.empty() && isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        if (s[0] == '-') term.coeff = Rational(-1);
        s.erase(s.begin());
    }
    auto star = s.find('*');
    if (star != std::string::npos) {
        term.coeff = term.coeff * parse_rational(s.substr(0, star));
        s = s.substr(star + 1);
    }
    if (s.empty()) fail("empty path word");
    std::stringstream ss(s);
    std::string name;
    while (std::getline(ss, name, '.')) {
        if (name.empty()) fail("empty arrow name in word");
        bool found = false;
        for (size_t i = 0; i < q.arrows.size(); ++i)
            if (q.arrows[i].name == name) {
                term.arrows.push_back(static_cast<int>(i));
                found = true;
                break;
            }
        if (!found) fail("unknown arrow '" + name + "'");
    }
    return term;
}

}  // namespace detail

inline AlgebraSpec parse_algebra_spec(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }

    AlgebraSpec spec;
    if (!doc.contains("vertices") || !doc["vertices"].is_number_integer())
        throw ParseError("missing integer field 'vertices'");
    spec.quiver.n = doc["vertices"].get<int>();

    if (!doc.contains("arrows") || !doc["arrows"].is_array())
        throw ParseError("missing array field 'arrows'");
    for (size_t i = 0; i < doc["arrows"].size(); ++i) {
        const auto& a = doc["arrows"][i];
        if (!a.is_array() || a.size() != 3 || !a[0].is_string() ||
            !a[1].is_number_integer() || !a[2].is_number_integer())
            throw ParseError("arrow " + std::to_string(i) +
                             " must be [name, source, target]");
        spec.quiver.arrows.push_back(
            Arrow{a[0].get<std::string>(), a[1].get<int>(), a[2].get<int>()});
    }
    try {
        spec.quiver.validate();
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }

    if (doc.contains("relations")) {
        if (!doc["relations"].is_array()) throw ParseError("'relations' must be an array");
        for (size_t r = 0; r < doc["relations"].size(); ++r) {
            const auto& rj = doc["relations"][r];
            Relation rel;
            auto add_term = [&](const nlohmann::json& tj) {
                if (tj.is_string()) {
                    rel.terms.push_back(
                        detail::parse_term_string(spec.quiver, tj.get<std::string>(), r));
                } else if (tj.is_object()) {
                    RelationTerm term;
                    if (tj.contains("coeff")) {
                        if (tj["coeff"].is_number_integer())
                            term.coeff = Rational(tj["coeff"].get<long long>());
                        else if (tj["coeff"].is_string())
                            term.coeff = parse_rational(tj["coeff"].get<std::string>());
                        else
                            throw ParseError("relation " + std::to_string(r) +
                                             ": coeff must be integer or string");
                    } else {
                        term.coeff = Rational(1);
                    }
                    if (!tj.contains("path") || !tj["path"].is_array())
                        throw ParseError("relation " + std::to_string(r) +
                                         ": term needs a 'path' array");
                    for (const auto& nm : tj["path"]) {
                        if (!nm.is_string())
                            throw ParseError("relation " + std::to_string(r) +
                                             ": path entries must be arrow names");
                        term.arrows.push_back(
                            spec.quiver.arrow_index(nm.get<std::string>()));
                    }
                    rel.terms.push_back(std::move(term));
                } else {
                    throw ParseError("relation " + std::to_string(r) +
                                     ": terms must be strings or objects");
                }
            };
            if (rj.is_string() || rj.is_object())
                add_term(rj);
            else if (rj.is_array())
                for (const auto& tj : rj) add_term(tj);
            else
                throw ParseError("relation " + std::to_string(r) + " has invalid shape");
            spec.relations.relations.push_back(std::move(rel));
        }
    }

    if (doc.contains("radical_square_zero") && doc["radical_square_zero"].get<bool>())
        for (auto& rel : radical_square_zero_relations(spec.quiver))
            spec.relations.relations.push_back(std::move(rel));

    if (doc.contains("rad_nilpotency")) {
        if (!doc["rad_nilpotency"].is_number_integer())
            throw ParseError("'rad_nilpotency' must be an integer");
        spec.relations.nilpotency_bound = doc["rad_nilpotency"].get<int>();
    }

    if (doc.contains("field")) {
        spec.field = doc["field"].get<std::string>();
        if (spec.field != "rational" && spec.field != "fp")
            throw ParseError("field must be 'rational' or 'fp'");
    }
    if (doc.contains("prime")) {
        spec.prime = doc["prime"].get<uint32_t>();
        if (!PrimeField::is_prime(spec.prime))
            throw ParseError("'prime' must be a prime number");
    }

    try {
        spec.relations.validate(spec.quiver);
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
    return spec;
}

inline AlgebraSpec load_algebra_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open spec file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_algebra_spec(ss.str());
}

template <class K>
AlgebraPtr<K> build_algebra(K field, const AlgebraSpec& spec) {
    return std::make_shared<const PathAlgebra<K>>(
        build_path_algebra(field, spec.quiver, spec.relations));
}

}  // namespace tautilt
