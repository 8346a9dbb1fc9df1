#include "ballpoly/bp3.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "ballpoly/core.hpp"

namespace ballpoly::bp3 {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTau = 2.0 * kPi;

Vec cross(const Vec& a, const Vec& b) {
    return vec3(a(1) * b(2) - a(2) * b(1), a(2) * b(0) - a(0) * b(2),
                a(0) * b(1) - a(1) * b(0));
}

struct Carrier {  // circle S(x_i) cap S(x_j)
    Vec center;
    double radius = 0.0;
    Vec u, v, axis;
    bool exists = false;
};

Carrier carrier_circle(const Vec& a, const Vec& b) {
    Carrier c;
    const Vec d = b - a;
    const double D = d.norm();
    if (D <= 1e-14 || D >= 2.0) return c;
    c.exists = true;
    c.center = 0.5 * (a + b);
    c.radius = std::sqrt(std::max(0.0, 1.0 - D * D / 4.0));
    c.axis = d / D;
    // any orthonormal pair spanning the carrier plane
    Vec t = std::abs(c.axis(0)) < 0.9 ? vec3(1, 0, 0) : vec3(0, 1, 0);
    c.u = cross(c.axis, t).normalized();
    c.v = cross(c.axis, c.u);
    return c;
}

Vec circle_point(const Carrier& c, double theta) {
    return c.center + c.radius * (std::cos(theta) * c.u + std::sin(theta) * c.v);
}

bool in_all_balls(std::span<const Vec> centers, const Vec& p, double slack) {
    for (const Vec& c : centers)
        if ((p - c).norm() > 1.0 + slack) return false;
    return true;
}

// max over the full carrier circle of |p - x| for a fixed x, in closed form
double circle_max_dist(const Carrier& c, const Vec& x) {
    const Vec w = x - c.center;
    const double axial = w.dot(c.axis);
    const Vec in_plane = w - axial * c.axis;
    const double a = in_plane.norm() + c.radius;
    return std::sqrt(a * a + axial * axial);
}

}  // namespace

// -- exact extrema -----------------------------------------------------------

namespace {

// Enumerates the candidate extremum points shared by both query kinds:
// triple-sphere points, per-pair circle critical points, per-sphere critical
// points, each filtered by membership in every ball.
template <typename PairCrit, typename SphereCrit, typename Consider>
void for_each_candidate(std::span<const Vec> X, const Tolerance& tol,
                        PairCrit pair_crit, SphereCrit sphere_crit,
                        Consider consider) {
    const int N = static_cast<int>(X.size());
    const double slack = 1e2 * tol.eps_geom;
    // triple points
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j)
            for (int k = j + 1; k < N; ++k) {
                std::vector<Sphere> fam = {{X[i], 1.0}, {X[j], 1.0}, {X[k], 1.0}};
                SubSphere s = core::intersect_spheres(fam, tol);
                std::vector<Vec> pts;
                if (s.is_point()) {
                    pts.push_back(s.center);
                } else if (s.is_sphere() && s.intrinsic_dim == 0) {
                    pts.push_back(s.center + s.radius * s.frame.col(0));
                    pts.push_back(s.center - s.radius * s.frame.col(0));
                }
                for (const Vec& p : pts)
                    if (in_all_balls(X, p, slack)) consider(p);
            }
    // pair circle critical points
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) {
            Carrier c = carrier_circle(X[i], X[j]);
            if (!c.exists) continue;
            Vec p;
            if (pair_crit(c, p) && in_all_balls(X, p, slack)) consider(p);
        }
    // per-sphere critical points
    for (int i = 0; i < N; ++i) {
        Vec p;
        if (sphere_crit(X[i], p) && in_all_balls(X, p, slack)) consider(p);
    }
}

}  // namespace

double max_distance_over_body(std::span<const Vec> centers, const Vec& q,
                              const Tolerance& tol) {
    if (centers.empty()) throw std::invalid_argument("max_distance_over_body: empty family");
    auto cb = core::circumball(centers, tol);
    if (cb.radius > 1.0 + tol.eps_geom) return -1.0;
    if (cb.radius >= 1.0 - tol.eps_geom) return (q - cb.center).norm();
    if (centers.size() == 1) return (q - centers[0]).norm() + 1.0;

    double best = 0.0;
    auto consider = [&](const Vec& p) { best = std::max(best, (p - q).norm()); };
    auto pair_crit = [&](const Carrier& c, Vec& p) {
        Vec w = q - c.center;
        Vec in_plane = w - w.dot(c.axis) * c.axis;
        const double nrm = in_plane.norm();
        // whole circle equidistant when q is on the axis: any point works
        p = nrm <= 1e-14 ? circle_point(c, 0.0)
                         : Vec(c.center - c.radius * (in_plane / nrm));
        return true;
    };
    auto sphere_crit = [&](const Vec& x, Vec& p) {
        Vec d = x - q;
        const double nrm = d.norm();
        if (nrm <= 1e-14) return false;
        p = x + d / nrm;
        return true;
    };
    for_each_candidate(centers, tol, pair_crit, sphere_crit, consider);
    return best;
}

DotArgmin min_dot_argmin_over_body(std::span<const Vec> centers, const Vec& u,
                                   const Tolerance& tol) {
    if (centers.empty()) throw std::invalid_argument("min_dot_over_body: empty family");
    DotArgmin out;
    auto cb = core::circumball(centers, tol);
    if (cb.radius > 1.0 + tol.eps_geom) return out;
    if (cb.radius >= 1.0 - tol.eps_geom) {
        out.value = cb.center.dot(u);
        out.point = cb.center;
        return out;
    }
    if (centers.size() == 1) {
        out.point = centers[0] - u / u.norm();
        out.value = out.point.dot(u);
        return out;
    }
    auto consider = [&](const Vec& p) {
        const double d = p.dot(u);
        if (d < out.value) {
            out.value = d;
            out.point = p;
        }
    };
    auto pair_crit = [&](const Carrier& c, Vec& p) {
        Vec in_plane = u - u.dot(c.axis) * c.axis;
        const double nrm = in_plane.norm();
        p = nrm <= 1e-14 ? circle_point(c, 0.0)
                         : Vec(c.center - c.radius * (in_plane / nrm));
        return true;
    };
    auto sphere_crit = [&](const Vec& x, Vec& p) {
        const double nrm = u.norm();
        if (nrm <= 1e-14) return false;
        p = x - u / nrm;
        return true;
    };
    for_each_candidate(centers, tol, pair_crit, sphere_crit, consider);
    return out;
}

double min_dot_over_body(std::span<const Vec> centers, const Vec& u,
                         const Tolerance& tol) {
    return min_dot_argmin_over_body(centers, u, tol).value;
}

// -- reduction ----------------------------------------------------------------

std::vector<Vec> reduce_family_3d(std::span<const Vec> centers, const Tolerance& tol) {
    std::vector<Vec> pts;
    for (const Vec& c : centers) {
        if (c.size() != 3) throw std::invalid_argument("reduce_family_3d: need 3D centers");
        bool dup = false;
        for (const Vec& p : pts)
            if ((p - c).norm() <= tol.eps_geom) { dup = true; break; }
        if (!dup) pts.push_back(c);
    }
    if (pts.empty()) throw std::invalid_argument("reduce_family_3d: empty family");
    auto cb = core::circumball(pts, tol);
    if (cb.radius > 1.0 + tol.eps_geom)
        throw std::invalid_argument("reduce_family_3d: empty intersection");

    bool removed = true;
    while (removed && pts.size() > 1) {
        removed = false;
        for (size_t i = 0; i < pts.size(); ++i) {
            std::vector<Vec> rest;
            for (size_t j = 0; j < pts.size(); ++j)
                if (j != i) rest.push_back(pts[j]);
            const double far = max_distance_over_body(rest, pts[i], tol);
            if (far >= 0.0 && far <= 1.0 + 10 * tol.eps_geom) {
                pts.erase(pts.begin() + i);
                removed = true;
                break;
            }
        }
    }
    return pts;
}

// -- boundary structure --------------------------------------------------------

BallPolyhedron3 boundary_structure(std::span<const Vec> centers, const Tolerance& tol) {
    BallPolyhedron3 P;
    std::vector<Vec> X = reduce_family_3d(centers, tol);
    P.centers = X;
    auto cb = core::circumball(X, tol);
    if (cb.radius > 1.0 + tol.eps_geom) {
        P.kind = BallPolyhedron3::Kind::Empty;
        return P;
    }
    if (cb.radius >= 1.0 - tol.eps_geom) {
        P.kind = BallPolyhedron3::Kind::Point;
        P.point = cb.center;
        return P;
    }
    const int N = static_cast<int>(X.size());
    if (N == 1) {
        P.kind = BallPolyhedron3::Kind::SingleBall;
        return P;
    }
    P.kind = BallPolyhedron3::Kind::Body;

    const double incident_band = 1e2 * tol.eps_geom;
    const double reject_band = 1e4 * tol.eps_geom;
    const double slack = incident_band;

    // vertices: triple points in all balls, merged across coincident triples
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j)
            for (int k = j + 1; k < N; ++k) {
                std::vector<Sphere> fam = {{X[i], 1.0}, {X[j], 1.0}, {X[k], 1.0}};
                SubSphere s = core::intersect_spheres(fam, tol);
                std::vector<Vec> pts;
                if (s.is_point()) pts.push_back(s.center);
                else if (s.is_sphere() && s.intrinsic_dim == 0) {
                    pts.push_back(s.center + s.radius * s.frame.col(0));
                    pts.push_back(s.center - s.radius * s.frame.col(0));
                }
                for (const Vec& p : pts) {
                    if (!in_all_balls(X, p, slack)) continue;
                    bool found = false;
                    for (auto& v : P.vertices)
                        if ((v.pos - p).norm() <= 10 * incident_band) { found = true; break; }
                    if (!found) P.vertices.push_back({p, {}});
                }
            }
    for (auto& v : P.vertices) {
        for (int i = 0; i < N; ++i) {
            const double gap = std::abs((v.pos - X[i]).norm() - 1.0);
            if (gap <= incident_band) v.spheres.push_back(i);
            else if (gap < reject_band)
                throw DegenerateConfiguration(
                    "boundary_structure: sphere passes near a vertex within the ambiguity band",
                    {i});
        }
        if (v.spheres.size() < 3)
            throw DegenerateConfiguration("boundary_structure: vertex with < 3 incident spheres",
                                          v.spheres);
    }

    // edges: cut each carrier circle by its vertices
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) {
            Carrier c = carrier_circle(X[i], X[j]);
            if (!c.exists) continue;
            std::vector<std::pair<double, int>> on_circle;  // (angle, vertex id)
            for (size_t vi = 0; vi < P.vertices.size(); ++vi) {
                const auto& sp = P.vertices[vi].spheres;
                if (std::find(sp.begin(), sp.end(), i) != sp.end() &&
                    std::find(sp.begin(), sp.end(), j) != sp.end()) {
                    const Vec w = P.vertices[vi].pos - c.center;
                    on_circle.push_back({std::atan2(w.dot(c.v), w.dot(c.u)),
                                         static_cast<int>(vi)});
                }
            }
            if (on_circle.empty()) {
                // seam candidate: the entire circle must lie in every other ball
                bool inside = true;
                for (int k = 0; k < N && inside; ++k) {
                    if (k == i || k == j) continue;
                    if (circle_max_dist(c, X[k]) > 1.0 + slack) inside = false;
                }
                if (inside)
                    P.seams.push_back({i, j, c.center, c.radius, c.u, c.v});
                continue;
            }
            std::sort(on_circle.begin(), on_circle.end());
            const int M = static_cast<int>(on_circle.size());
            for (int a = 0; a < M; ++a) {
                const double t0 = on_circle[a].first;
                const double t1 = (a + 1 < M) ? on_circle[a + 1].first
                                              : on_circle[0].first + kTau;
                if (t1 - t0 <= 1e-12) continue;
                const double tm = 0.5 * (t0 + t1);
                if (!in_all_balls(X, circle_point(c, tm), slack)) continue;
                if (on_circle[a].second == on_circle[(a + 1) % M].second)
                    throw DegenerateConfiguration(
                        "boundary_structure: loop edge (tangent carrier)", {i, j});
                BallPolyhedron3::Edge e;
                e.s1 = i;
                e.s2 = j;
                e.ccenter = c.center;
                e.cradius = c.radius;
                e.u = c.u;
                e.v = c.v;
                e.mid = 0.5 * (t0 + t1);
                e.half = 0.5 * (t1 - t0);
                e.v_start = on_circle[a].second;
                e.v_end = on_circle[(a + 1) % M].second;
                P.edges.push_back(e);
            }
        }

    // faces: walk edge cycles on each sphere
    for (int s = 0; s < N; ++s) {
        std::vector<int> se;  // edges on sphere s
        for (size_t e = 0; e < P.edges.size(); ++e)
            if (P.edges[e].s1 == s || P.edges[e].s2 == s) se.push_back(static_cast<int>(e));
        std::vector<int> sseams;
        for (size_t m = 0; m < P.seams.size(); ++m)
            if (P.seams[m].s1 == s || P.seams[m].s2 == s) sseams.push_back(static_cast<int>(m));

        if (se.empty()) {
            if (!sseams.empty()) {
                BallPolyhedron3::Face f;
                f.sphere = s;
                f.seams = sseams;
                P.faces.push_back(f);
            }
            // a reduced sphere with no boundary curves cannot happen for N >= 2
            continue;
        }
        // at each vertex of sphere s there must be exactly two s-edges
        std::map<int, std::vector<int>> at_vertex;
        for (int e : se) {
            at_vertex[P.edges[e].v_start].push_back(e);
            at_vertex[P.edges[e].v_end].push_back(e);
        }
        for (auto& [v, es] : at_vertex)
            if (es.size() != 2)
                throw DegenerateConfiguration(
                    "boundary_structure: face boundary is not a simple cycle", {s, v});
        std::vector<bool> used(P.edges.size(), false);
        std::vector<std::vector<int>> cycles;
        for (int e0 : se) {
            if (used[e0]) continue;
            std::vector<int> cyc;
            int e = e0;
            int v = P.edges[e].v_start;
            while (!used[e]) {
                used[e] = true;
                cyc.push_back(e);
                const int w = (P.edges[e].v_start == v) ? P.edges[e].v_end : P.edges[e].v_start;
                const auto& cand = at_vertex[w];
                e = (cand[0] == e) ? cand[1] : cand[0];
                v = w;
            }
            cycles.push_back(cyc);
        }
        if (cycles.size() != 1 || !sseams.empty())
            throw DegenerateConfiguration(
                "boundary_structure: disconnected face region on one sphere", {s});
        BallPolyhedron3::Face f;
        f.sphere = s;
        f.cycle_edges = cycles[0];
        int v = P.edges[f.cycle_edges[0]].v_start;
        // orient the vertex list along the walk
        {
            const auto& e0 = P.edges[f.cycle_edges[0]];
            if (f.cycle_edges.size() > 1) {
                const auto& e1 = P.edges[f.cycle_edges[1]];
                if (e0.v_start == e1.v_start || e0.v_start == e1.v_end) v = e0.v_end;
                else v = e0.v_start;
            }
        }
        // walk again to record vertices in order
        int cur = v;
        for (int e : f.cycle_edges) {
            f.cycle_verts.push_back(cur);
            cur = (P.edges[e].v_start == cur) ? P.edges[e].v_end : P.edges[e].v_start;
        }
        P.faces.push_back(f);
    }
    return P;
}

// -- standardness --------------------------------------------------------------

StandardnessReport standardness_and_lattice(const BallPolyhedron3& P) {
    StandardnessReport rep;
    if (P.kind != BallPolyhedron3::Kind::Body) {
        rep.witness = "degenerate body (not full-dimensional with boundary arrangement)";
        return rep;
    }
    if (P.has_seams()) {
        rep.witness = "full-circle seam (face without vertices)";
        return rep;
    }
    if (P.vertices.empty()) {
        rep.witness = "no vertices";
        return rep;
    }

    FaceLattice L;
    using El = FaceLattice::Element;
    L.elements.push_back({El::Type::Bottom, 0});
    const int v0 = static_cast<int>(L.elements.size());
    for (size_t i = 0; i < P.vertices.size(); ++i)
        L.elements.push_back({El::Type::Vertex, static_cast<int>(i)});
    const int e0 = static_cast<int>(L.elements.size());
    for (size_t i = 0; i < P.edges.size(); ++i)
        L.elements.push_back({El::Type::Edge, static_cast<int>(i)});
    const int f0 = static_cast<int>(L.elements.size());
    for (size_t i = 0; i < P.faces.size(); ++i)
        L.elements.push_back({El::Type::Face, static_cast<int>(i)});
    L.elements.push_back({El::Type::Top, 0});
    const int top = static_cast<int>(L.elements.size()) - 1;
    const int M = top + 1;

    L.leq.assign(M, std::vector<bool>(M, false));
    for (int i = 0; i < M; ++i) {
        L.leq[0][i] = true;
        L.leq[i][top] = true;
        L.leq[i][i] = true;
    }
    for (size_t e = 0; e < P.edges.size(); ++e) {
        L.leq[v0 + P.edges[e].v_start][e0 + e] = true;
        L.leq[v0 + P.edges[e].v_end][e0 + e] = true;
    }
    for (size_t f = 0; f < P.faces.size(); ++f) {
        for (int e : P.faces[f].cycle_edges) {
            L.leq[e0 + e][f0 + f] = true;
            L.leq[v0 + P.edges[e].v_start][f0 + f] = true;
            L.leq[v0 + P.edges[e].v_end][f0 + f] = true;
        }
    }

    auto describe = [&](int i) {
        const auto& el = L.elements[i];
        switch (el.type) {
            case El::Type::Bottom: return std::string("empty");
            case El::Type::Vertex: return "vertex " + std::to_string(el.index);
            case El::Type::Edge: return "edge " + std::to_string(el.index);
            case El::Type::Face: return "face " + std::to_string(el.index);
            case El::Type::Top: return std::string("P");
        }
        return std::string();
    };

    // meet/join existence for every pair
    for (int a = 0; a < M; ++a) {
        for (int b = a + 1; b < M; ++b) {
            // lower bounds
            std::vector<int> lower, upper;
            for (int c = 0; c < M; ++c) {
                if (L.leq[c][a] && L.leq[c][b]) lower.push_back(c);
                if (L.leq[a][c] && L.leq[b][c]) upper.push_back(c);
            }
            int maximal = 0, minimal = 0;
            for (int c : lower) {
                bool is_max = true;
                for (int d : lower)
                    if (d != c && L.leq[c][d]) { is_max = false; break; }
                if (is_max) ++maximal;
            }
            for (int c : upper) {
                bool is_min = true;
                for (int d : upper)
                    if (d != c && L.leq[d][c]) { is_min = false; break; }
                if (is_min) ++minimal;
            }
            if (maximal != 1 || minimal != 1) {
                rep.witness = "no unique meet/join for " + describe(a) + " and " + describe(b);
                return rep;
            }
        }
    }

    // atomic: every nonempty element has a vertex below it
    L.atomic = true;
    for (int i = v0; i < top + 1; ++i) {
        bool has_atom = false;
        for (size_t v = 0; v < P.vertices.size(); ++v)
            if (L.leq[v0 + v][i]) { has_atom = true; break; }
        if (!has_atom) L.atomic = false;
    }
    if (!L.atomic) {
        rep.witness = "lattice not atomic";
        return rep;
    }
    rep.standard = true;
    rep.lattice = std::move(L);
    return rep;
}

// -- graph checks ----------------------------------------------------------------

namespace {

using Dart = EdgeGraph::Dart;

std::vector<std::vector<Dart>> rotation_system(const BallPolyhedron3& P) {
    // interior reference point for outward normals: the circumcenter of the
    // generators lies within 1 - crr of every center, hence inside the body
    Vec c0 = core::circumball(P.centers).center;

    std::vector<std::vector<Dart>> rot(P.vertices.size());
    for (size_t v = 0; v < P.vertices.size(); ++v) {
        const Vec& p = P.vertices[v].pos;
        Vec n = p - c0;
        n.normalize();
        Vec t = std::abs(n(0)) < 0.9 ? vec3(1, 0, 0) : vec3(0, 1, 0);
        Vec b1 = cross(n, t).normalized();
        Vec b2 = cross(n, b1);
        std::vector<std::pair<double, Dart>> ord;
        for (size_t e = 0; e < P.edges.size(); ++e) {
            const auto& E = P.edges[e];
            for (int side = 0; side < 2; ++side) {
                const int at = side == 0 ? E.v_start : E.v_end;
                if (at != static_cast<int>(v)) continue;
                const double theta = side == 0 ? E.mid - E.half : E.mid + E.half;
                // tangent of the arc at this endpoint, pointing into the arc
                Vec tang = -std::sin(theta) * E.u + std::cos(theta) * E.v;
                if (side == 1) tang = -tang;
                Vec proj = tang - tang.dot(n) * n;
                ord.push_back({std::atan2(proj.dot(b2), proj.dot(b1)),
                               Dart{static_cast<int>(e), side == 0}});
            }
        }
        std::sort(ord.begin(), ord.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& [ang, d] : ord) rot[v].push_back(d);
    }
    return rot;
}

int trace_faces(const BallPolyhedron3& P, const std::vector<std::vector<Dart>>& rot) {
    // orbit counting of next(d) = rotation successor of the reversed dart
    auto dart_id = [&](const Dart& d) { return 2 * d.edge + (d.forward ? 0 : 1); };
    std::vector<bool> used(2 * P.edges.size(), false);
    int faces = 0;
    for (size_t e = 0; e < P.edges.size(); ++e) {
        for (int fwd = 0; fwd < 2; ++fwd) {
            Dart d{static_cast<int>(e), fwd == 0};
            if (used[dart_id(d)]) continue;
            ++faces;
            while (!used[dart_id(d)]) {
                used[dart_id(d)] = true;
                const auto& E = P.edges[d.edge];
                const int head = d.forward ? E.v_end : E.v_start;
                Dart rev{d.edge, !d.forward};
                const auto& ring = rot[head];
                int pos = -1;
                for (size_t i = 0; i < ring.size(); ++i)
                    if (ring[i].edge == rev.edge && ring[i].forward == rev.forward)
                        pos = static_cast<int>(i);
                d = ring[(pos + 1) % ring.size()];
            }
        }
    }
    return faces;
}

bool connected_without(const std::vector<std::vector<int>>& adj, int skip1, int skip2) {
    const int n = static_cast<int>(adj.size());
    std::vector<bool> seen(n, false);
    int start = -1;
    for (int i = 0; i < n; ++i)
        if (i != skip1 && i != skip2) { start = i; break; }
    if (start < 0) return true;
    std::vector<int> stack = {start};
    seen[start] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v]) {
            if (w == skip1 || w == skip2 || seen[w]) continue;
            seen[w] = true;
            stack.push_back(w);
        }
    }
    for (int i = 0; i < n; ++i)
        if (i != skip1 && i != skip2 && !seen[i]) return false;
    return true;
}

}  // namespace

EdgeGraph edge_graph(const BallPolyhedron3& P) {
    EdgeGraph G;
    G.vertex_count = static_cast<int>(P.vertices.size());
    for (const auto& e : P.edges) G.edges.push_back({e.v_start, e.v_end});
    if (!P.vertices.empty() && !P.edges.empty()) G.rotation = rotation_system(P);
    return G;
}

GraphReport euler_and_graph_checks(const BallPolyhedron3& P, const Tolerance&) {
    GraphReport R;
    R.V = static_cast<int>(P.vertices.size());
    R.E = static_cast<int>(P.edges.size());
    R.F = static_cast<int>(P.faces.size());
    R.chi = R.V - R.E + R.F;
    R.standard = standardness_and_lattice(P).standard;

    // simplicity
    R.simple = true;
    for (const auto& e : P.edges)
        if (e.v_start == e.v_end) R.simple = false;
    for (size_t a = 0; a < P.edges.size() && R.simple; ++a)
        for (size_t b = a + 1; b < P.edges.size(); ++b) {
            const auto& ea = P.edges[a];
            const auto& eb = P.edges[b];
            if ((ea.v_start == eb.v_start && ea.v_end == eb.v_end) ||
                (ea.v_start == eb.v_end && ea.v_end == eb.v_start)) {
                R.simple = false;
                break;
            }
        }

    // planarity via the geometric embedding
    if (R.V > 0 && R.E > 0) {
        auto rot = rotation_system(P);
        const int F_rot = trace_faces(P, rot);
        R.planar = (R.V - R.E + F_rot == 2);
    }

    // 3-connectivity (only meaningful for simple graphs with >= 4 vertices)
    if (R.simple && R.V >= 4) {
        std::vector<std::vector<int>> adj(R.V);
        for (const auto& e : P.edges) {
            adj[e.v_start].push_back(e.v_end);
            adj[e.v_end].push_back(e.v_start);
        }
        R.three_connected = true;
        for (int a = 0; a < R.V && R.three_connected; ++a)
            for (int b = a + 1; b < R.V; ++b)
                if (!connected_without(adj, a, b)) {
                    R.three_connected = false;
                    break;
                }
    }

    if (R.standard && (R.chi != 2 || !R.simple || !R.planar || !R.three_connected))
        throw TheoremViolation("euler_and_graph_checks: a guaranteed property failed on a standard body");
    return R;
}

// -- polytope approximation -----------------------------------------------------

Polytope make_tetrahedron(double R) {
    Polytope P;
    const double s = R / std::sqrt(3.0);
    P.vertices = {vec3(s, s, s), vec3(s, -s, -s), vec3(-s, s, -s), vec3(-s, -s, s)};
    P.faces = {{0, 1, 2}, {0, 3, 1}, {0, 2, 3}, {1, 3, 2}};
    return P;
}

Polytope make_cube(double R) {
    Polytope P;
    const double s = R / std::sqrt(3.0);
    for (int i = 0; i < 8; ++i)
        P.vertices.push_back(vec3(i & 1 ? s : -s, i & 2 ? s : -s, i & 4 ? s : -s));
    P.faces = {{0, 2, 3, 1}, {4, 5, 7, 6}, {0, 1, 5, 4}, {2, 6, 7, 3}, {0, 4, 6, 2}, {1, 3, 7, 5}};
    return P;
}

Polytope make_octahedron(double R) {
    Polytope P;
    P.vertices = {vec3(R, 0, 0), vec3(-R, 0, 0), vec3(0, R, 0),
                  vec3(0, -R, 0), vec3(0, 0, R), vec3(0, 0, -R)};
    P.faces = {{0, 2, 4}, {2, 1, 4}, {1, 3, 4}, {3, 0, 4},
               {2, 0, 5}, {1, 2, 5}, {3, 1, 5}, {0, 3, 5}};
    return P;
}

ApproxResult approximate_polyhedron(const Polytope& poly, double k, const Tolerance& tol) {
    ApproxResult out;
    out.k = k;
    Vec centroid = Vec::Zero(3);
    for (const Vec& v : poly.vertices) centroid += v;
    centroid /= static_cast<double>(poly.vertices.size());

    std::vector<Vec> gen;
    std::vector<double> sagitta;
    for (const auto& face : poly.faces) {
        if (face.size() < 3) throw std::invalid_argument("approximate_polyhedron: bad face");
        // face plane from the first three vertices
        const Vec& a = poly.vertices[face[0]];
        const Vec& b = poly.vertices[face[1]];
        const Vec& c = poly.vertices[face[2]];
        Vec n = cross(b - a, c - a);
        n.normalize();
        if (n.dot(centroid - a) < 0) n = -n;  // inner normal
        // circumcenter within the plane: equidistant from all face vertices
        Mat A(static_cast<int>(face.size()) - 1 + 1, 3);
        Vec rhs(static_cast<int>(face.size()) - 1 + 1);
        for (size_t i = 1; i < face.size(); ++i) {
            const Vec& p = poly.vertices[face[i]];
            A.row(static_cast<int>(i) - 1) = 2.0 * (p - a).transpose();
            rhs(static_cast<int>(i) - 1) = p.squaredNorm() - a.squaredNorm();
        }
        A.row(A.rows() - 1) = n.transpose();
        rhs(A.rows() - 1) = n.dot(a);
        Vec cf = A.colPivHouseholderQr().solve(rhs);
        double rf = (cf - a).norm();
        for (int idx : face)
            if (std::abs((poly.vertices[idx] - cf).norm() - rf) > 1e3 * tol.eps_geom)
                throw std::invalid_argument("approximate_polyhedron: face not co-circular");
        if (k * k <= rf * rf)
            throw std::invalid_argument("approximate_polyhedron: k <= face circumradius");
        const double off = std::sqrt(k * k - rf * rf);
        gen.push_back((cf + off * n) / k);
        sagitta.push_back(k - off);
    }

    out.body = boundary_structure(gen, tol);
    if (out.body.kind != BallPolyhedron3::Kind::Body)
        throw std::runtime_error("approximate_polyhedron: degenerate body");

    // Hausdorff distance d_H(k P_k, polytope). The polytope is contained in
    // k P_k (its vertices lie on every incident sphere), so the distance is
    // the largest bulge of the spherical faces; certify that each bulge apex
    // lies on its face.
    double dh = 0.0;
    for (size_t f = 0; f < gen.size(); ++f) {
        // bulge apex: the sphere point farthest outward against the face's
        // inner normal
        const auto& face = poly.faces[f];
        const Vec& a0 = poly.vertices[face[0]];
        const Vec& b0 = poly.vertices[face[1]];
        const Vec& c0 = poly.vertices[face[2]];
        Vec n = cross(b0 - a0, c0 - a0);
        n.normalize();
        if (n.dot(centroid - a0) < 0) n = -n;
        Vec apex = gen[f] - n;
        if (in_all_balls(out.body.centers, apex, 1e2 * tol.eps_geom))
            dh = std::max(dh, sagitta[f]);
    }
    out.hausdorff = dh;

    // lattice isomorphism via the geometric correspondence
    out.lattice_isomorphic = true;
    if (out.body.vertices.size() != poly.vertices.size()) out.lattice_isomorphic = false;
    std::vector<int> match(poly.vertices.size(), -1);
    if (out.lattice_isomorphic) {
        for (size_t i = 0; i < poly.vertices.size(); ++i) {
            for (size_t j = 0; j < out.body.vertices.size(); ++j)
                if ((k * out.body.vertices[j].pos - poly.vertices[i]).norm() < 1e-5 * k) {
                    match[i] = static_cast<int>(j);
                    break;
                }
            if (match[i] < 0) out.lattice_isomorphic = false;
        }
    }
    if (out.lattice_isomorphic) {
        // faces correspond generator-to-face; compare vertex sets
        if (out.body.faces.size() != poly.faces.size()) out.lattice_isomorphic = false;
        for (size_t f = 0; f < poly.faces.size() && out.lattice_isomorphic; ++f) {
            const BallPolyhedron3::Face* bf = nullptr;
            for (const auto& F : out.body.faces)
                if (F.sphere == static_cast<int>(f)) bf = &F;
            if (!bf) { out.lattice_isomorphic = false; break; }
            std::set<int> want, got;
            for (int idx : poly.faces[f]) want.insert(match[idx]);
            for (int v : bf->cycle_verts) got.insert(v);
            if (want != got) out.lattice_isomorphic = false;
        }
    }
    return out;
}

}  // namespace ballpoly::bp3
