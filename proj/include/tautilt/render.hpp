#pragma once

#include <cmath>
#include <cstdio>
#include <sstream>

#include "tautilt/serialize.hpp"

namespace tautilt {

// Figure emitters. All numeric output is decimal at 9 significant digits;
// this is the one place non-exact numerals appear, and only for drawing.

namespace render_detail {

inline std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", x + 0.0);  // normalize -0
    return buf;
}

inline std::string color(int i) {
    static const char* palette[] = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3",
                                    "#ff7f00", "#a65628", "#f781bf", "#17becf",
                                    "#666666", "#bcbd22", "#8c564b", "#2ca02c"};
    return palette[i % 12];
}

struct Vec3 {
    double x = 0, y = 0, z = 0;
};

inline Vec3 normalize(Vec3 v) {
    double n = std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z);
    return {v.x / n, v.y / n, v.z / n};
}

inline Vec3 cross(Vec3 a, Vec3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

// stereographic projection from the unit vector c onto the plane through the
// origin orthogonal to c
struct Projector {
    Vec3 c, b1, b2;

    explicit Projector(Vec3 center) {
        c = normalize(center);
        Vec3 seed = std::abs(c.x - c.y) > 1e-9 ? Vec3{c.y, c.x, c.z}   // swap two coords
                                               : Vec3{c.x, c.z, c.y};
        Vec3 t{seed.x - c.x, seed.y - c.y, seed.z - c.z};
        b1 = normalize(t.x || t.y || t.z ? t : Vec3{1, -1, 0});
        // re-orthogonalize
        double d = dot(b1, c);
        b1 = normalize({b1.x - d * c.x, b1.y - d * c.y, b1.z - d * c.z});
        b2 = cross(c, b1);
    }

    std::pair<double, double> project(Vec3 u) const {
        u = normalize(u);
        double denom = 1.0 - dot(u, c);
        engine_check(std::abs(denom) > 1e-12, "projection center hit");
        return {dot(u, b1) / denom, dot(u, b2) / denom};
    }
};

}  // namespace render_detail

// ---- DOT ----

// Arrows are drawn in the green (torsion-increasing) direction and colored
// green; red is reserved for crossings against the arrows.
template <class K>
std::string exchange_graph_dot(const Catalog<K>& cat, const ExchangeGraph<K>& g) {
    std::ostringstream out;
    out << "digraph exchange {\n  rankdir=BT;\n  node [shape=box, fontsize=10];\n";
    for (size_t i = 0; i < g.nodes.size(); ++i) {
        out << "  n" << i << " [label=\"";
        auto cols = g_columns(cat, g.nodes[i]);
        for (size_t j = 0; j < cols.size(); ++j) {
            if (j) out << " ";
            out << to_string(cols[j]);
        }
        out << "\"];\n";
    }
    for (const auto& e : g.edges)
        out << "  n" << e.smaller << " -> n" << e.bigger << " [label=\""
            << to_string(e.brick_dims) << "\", color=green];\n";
    out << "}\n";
    return out.str();
}

// ---- rank-2 wall-and-chamber picture ----

template <class K>
std::string svg_wall_chamber_2d(const Catalog<K>& cat, const Fan<K>& fan,
                                SubmoduleOptions sub_opt = {}) {
    using render_detail::color;
    using render_detail::num;
    if (cat.n() != 2) throw DomainError("the planar emitter requires rank 2");
    const double R = 250.0;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-320 -320 640 640\">\n";
    out << "<rect x=\"-320\" y=\"-320\" width=\"640\" height=\"640\" fill=\"white\"/>\n";

    // walls: one group per corpus module whose stability space is a wall
    for (size_t w = 0; w < cat.corpus.size(); ++w) {
        StabilitySpace<K> D = stability_space(cat.corpus[w], sub_opt);
        if (!D.is_wall) continue;
        std::vector<std::array<double, 2>> dirs;
        for (const auto& r : D.vrep.rays) {
            double nrm = std::hypot(double(r[0]), double(r[1]));
            dirs.push_back({r[0] / nrm, r[1] / nrm});
        }
        for (const auto& l : D.vrep.lineality) {
            double nrm = std::hypot(double(l[0]), double(l[1]));
            dirs.push_back({l[0] / nrm, l[1] / nrm});
            dirs.push_back({-l[0] / nrm, -l[1] / nrm});
        }
        out << "<g id=\"wall-" << w << "\" stroke=\"" << color(static_cast<int>(w))
            << "\" stroke-width=\"2\">\n";
        for (const auto& d : dirs)
            out << "  <line x1=\"0\" y1=\"0\" x2=\"" << num(R * d[0]) << "\" y2=\""
                << num(-R * d[1]) << "\"/>\n";
        out << "</g>\n";
        if (!dirs.empty())
            out << "<text x=\"" << num(1.06 * R * dirs[0][0]) << "\" y=\""
                << num(-1.06 * R * dirs[0][1]) << "\" font-size=\"12\">D"
                << to_string(cat.corpus[w].dims) << "</text>\n";
    }

    // g-vector points of the fan generators
    std::set<DimVector> gens;
    for (const auto& p : fan.pairs)
        for (const auto& col : g_columns(cat, p)) gens.insert(col);
    for (const auto& gv : gens) {
        double nrm = std::hypot(double(gv[0]), double(gv[1]));
        double x = 0.82 * R * gv[0] / nrm, y = -0.82 * R * gv[1] / nrm;
        out << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y)
            << "\" r=\"3\" fill=\"red\"/>\n";
        out << "<text x=\"" << num(x + 6) << "\" y=\"" << num(y - 6)
            << "\" font-size=\"11\" fill=\"red\">g" << to_string(gv) << "</text>\n";
    }

    // chamber labels at scaled barycenters
    for (size_t pi = 0; pi < fan.pairs.size(); ++pi) {
        DimVector b = pair_barycenter(cat, fan.pairs[pi]);
        double nrm = std::hypot(double(b[0]), double(b[1]));
        out << "<text x=\"" << num(0.55 * R * b[0] / nrm) << "\" y=\""
            << num(-0.55 * R * b[1] / nrm) << "\" font-size=\"13\">C" << pi + 1
            << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

// ---- rank-3 stereographic picture ----

template <class K>
std::string svg_stereographic(const Catalog<K>& cat, const Fan<K>& fan,
                              SubmoduleOptions sub_opt = {}) {
    using namespace render_detail;
    if (cat.n() != 3) throw DomainError("the stereographic emitter requires rank 3");
    const double SCALE = 60.0;
    Projector proj(Vec3{1, 1, 1});

    auto pt = [&](Vec3 u) {
        auto [x, y] = proj.project(u);
        return std::pair<double, double>{SCALE * x, -SCALE * y};
    };
    auto vec = [](const std::vector<long long>& v) {
        return Vec3{double(v[0]), double(v[1]), double(v[2])};
    };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-400 -400 800 800\">\n";
    out << "<rect x=\"-400\" y=\"-400\" width=\"800\" height=\"800\" fill=\"white\"/>\n";

    // one group per wall: arcs between the sphere traces of its extreme rays
    auto emit_arc = [&](std::ostringstream& o, Vec3 a, Vec3 b) {
        Vec3 an = normalize(a), bn = normalize(b);
        Vec3 midv = normalize({an.x + bn.x, an.y + bn.y, an.z + bn.z});
        auto p1 = pt(an), p2 = pt(bn), pm = pt(midv);
        // circumcircle of the three projected points
        double ax = p1.first, ay = p1.second, bx = pm.first, by = pm.second,
               cx = p2.first, cy = p2.second;
        double dmat = 2 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
        if (std::abs(dmat) < 1e-9) {
            o << "  <line x1=\"" << num(ax) << "\" y1=\"" << num(ay) << "\" x2=\""
              << num(cx) << "\" y2=\"" << num(cy) << "\"/>\n";
            return;
        }
        double ux = ((ax * ax + ay * ay) * (by - cy) + (bx * bx + by * by) * (cy - ay) +
                     (cx * cx + cy * cy) * (ay - by)) /
                    dmat;
        double uy = ((ax * ax + ay * ay) * (cx - bx) + (bx * bx + by * by) * (ax - cx) +
                     (cx * cx + cy * cy) * (bx - ax)) /
                    dmat;
        double rad = std::hypot(ax - ux, ay - uy);
        // sweep: orientation of p1 -> pm -> p2; large arc: chord midpoint and
        // arc midpoint on opposite sides of the center
        double crossz = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
        int sweep = crossz > 0 ? 1 : 0;
        double chord_mx = (ax + cx) / 2, chord_my = (ay + cy) / 2;
        double d1 = std::hypot(bx - ux, by - uy);
        int large = (std::hypot(chord_mx - ux, chord_my - uy) < 1e-9)
                        ? 0
                        : ((bx - ux) * (chord_mx - ux) + (by - uy) * (chord_my - uy) < 0
                               ? 1
                               : 0);
        (void)d1;
        o << "  <path fill=\"none\" d=\"M " << num(ax) << " " << num(ay) << " A "
          << num(rad) << " " << num(rad) << " 0 " << large << " " << sweep << " "
          << num(cx) << " " << num(cy) << "\"/>\n";
    };

    int wall_count = 0;
    for (size_t w = 0; w < cat.corpus.size(); ++w) {
        StabilitySpace<K> D = stability_space(cat.corpus[w], sub_opt);
        if (!D.is_wall) continue;
        ++wall_count;
        out << "<g id=\"wall-" << w << "\" stroke=\"" << color(static_cast<int>(w))
            << "\" stroke-width=\"2\" fill=\"none\">\n";
        const auto& rays = D.vrep.rays;
        const auto& lin = D.vrep.lineality;
        if (lin.size() == 2) {
            // full plane: great circle, split into four arcs through a frame
            Vec3 l1 = vec(lin[0]), l2 = vec(lin[1]);
            Vec3 m1 = normalize(l1), m2n = normalize(l2);
            // orthogonalize the frame
            double d = dot(m2n, m1);
            Vec3 m2 = normalize({m2n.x - d * m1.x, m2n.y - d * m1.y, m2n.z - d * m1.z});
            Vec3 n1{-m1.x, -m1.y, -m1.z}, n2{-m2.x, -m2.y, -m2.z};
            emit_arc(out, m1, m2);
            emit_arc(out, m2, n1);
            emit_arc(out, n1, n2);
            emit_arc(out, n2, m1);
        } else if (lin.size() == 1 && rays.size() == 1) {
            // half plane: two arcs from the ray to both ends of the line
            Vec3 l = vec(lin[0]), r = vec(rays[0]);
            emit_arc(out, l, r);
            emit_arc(out, r, Vec3{-l.x, -l.y, -l.z});
        } else if (rays.size() == 2) {
            emit_arc(out, vec(rays[0]), vec(rays[1]));
        } else {
            throw EngineError("unexpected wall shape in the stereographic emitter");
        }
        out << "</g>\n";
    }

    // generator rays as labeled points
    std::set<DimVector> gens;
    for (const auto& p : fan.pairs)
        for (const auto& col : g_columns(cat, p)) gens.insert(col);
    for (const auto& gv : gens) {
        auto [x, y] = pt(Vec3{double(gv[0]), double(gv[1]), double(gv[2])});
        out << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y)
            << "\" r=\"3\" fill=\"red\"/>\n";
        out << "<text x=\"" << num(x + 5) << "\" y=\"" << num(y - 5)
            << "\" font-size=\"11\" fill=\"red\">g" << to_string(gv) << "</text>\n";
    }

    // chamber labels at interior sample points (weights keep the sample off
    // the projection center)
    for (size_t pi = 0; pi < fan.pairs.size(); ++pi) {
        auto cols = g_columns(cat, fan.pairs[pi]);
        Vec3 sample{0, 0, 0};
        std::vector<double> weights{2.0, 1.0, 1.0};
        Vec3 b{0, 0, 0};
        for (size_t j = 0; j < cols.size(); ++j) {
            b.x += cols[j][0];
            b.y += cols[j][1];
            b.z += cols[j][2];
        }
        bool central = std::abs(b.x - b.y) < 1e-9 && std::abs(b.y - b.z) < 1e-9;
        for (size_t j = 0; j < cols.size(); ++j) {
            double wj = central ? weights[j % 3] : 1.0;
            sample.x += wj * cols[j][0];
            sample.y += wj * cols[j][1];
            sample.z += wj * cols[j][2];
        }
        auto [x, y] = pt(sample);
        if (std::abs(x) > 390 || std::abs(y) > 390) continue;  // off the canvas
        out << "<text x=\"" << num(x) << "\" y=\"" << num(y) << "\" font-size=\"13\">C"
            << pi + 1 << "</text>\n";
    }
    out << "</svg>\n";
    engine_check(wall_count > 0, "no walls to draw");
    return out.str();
}

}  // namespace tautilt
