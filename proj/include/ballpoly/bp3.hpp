#pragma once

#include <optional>
#include <span>

#include "ballpoly/types.hpp"

namespace ballpoly::bp3 {

/// 3D ball-polyhedron: reduced unit-ball centers plus the derived boundary
/// arrangement. Non-standard shapes (full-circle seams, parallel edges) are
/// representable and flagged, not rejected.
struct BallPolyhedron3 {
    enum class Kind { Body, SingleBall, Point, Empty };

    struct Vertex {
        Vec pos;
        std::vector<int> spheres;  // generating spheres through this point (>= 3)
    };

    struct Edge {
        int s1 = -1, s2 = -1;      // carrier spheres
        Vec ccenter;               // carrier circle center
        double cradius = 0.0;      // carrier circle radius (< 1)
        Vec u, v;                  // orthonormal frame of the carrier plane
        double mid = 0.0;          // angular interval on the carrier
        double half = 0.0;
        int v_start = -1, v_end = -1;
    };

    struct Seam {                  // full carrier circle on the boundary (lens)
        int s1 = -1, s2 = -1;
        Vec ccenter;
        double cradius = 0.0;
        Vec u, v;
    };

    struct Face {
        int sphere = -1;
        std::vector<int> cycle_edges;  // boundary cycle (empty iff seam-bounded)
        std::vector<int> cycle_verts;  // cycle_verts[i] = start vertex of cycle_edges[i]
        std::vector<int> seams;        // seam ids bounding this face
    };

    Kind kind = Kind::Empty;
    std::vector<Vec> centers;
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::vector<Seam> seams;
    std::vector<Face> faces;
    Vec point;  // Kind::Point

    bool has_seams() const { return !seams.empty(); }
};

/// Retains exactly the balls whose spheres contribute boundary; iterative
/// single removals, each certified by a farthest-point computation over the
/// remaining intersection.
std::vector<Vec> reduce_family_3d(std::span<const Vec> centers, const Tolerance& tol = {});

/// Full boundary arrangement of B[centers]. Reduces the family first.
/// Throws DegenerateConfiguration for ambiguous near-incidences.
BallPolyhedron3 boundary_structure(std::span<const Vec> centers, const Tolerance& tol = {});

inline BallPolyhedron3 boundary_structure(const std::vector<Vec>& centers,
                                          const Tolerance& tol = {}) {
    return boundary_structure(std::span<const Vec>(centers), tol);
}

// -- exact extrema over B[centers] (any family with nonempty intersection) --

/// max_{y in B[centers]} |y - q|; negative when the intersection is empty.
double max_distance_over_body(std::span<const Vec> centers, const Vec& q,
                              const Tolerance& tol = {});

/// min_{y in B[centers]} <y, u>; +inf when the intersection is empty.
double min_dot_over_body(std::span<const Vec> centers, const Vec& u,
                         const Tolerance& tol = {});

struct DotArgmin {
    double value = std::numeric_limits<double>::infinity();
    Vec point;      // a minimizer (valid when value is finite)
};

DotArgmin min_dot_argmin_over_body(std::span<const Vec> centers, const Vec& u,
                                   const Tolerance& tol = {});

// -- standardness and the face lattice --------------------------------------

struct FaceLattice {
    // element 0 = bottom (empty), then vertices, edges, faces, top (P)
    struct Element {
        enum class Type { Bottom, Vertex, Edge, Face, Top };
        Type type;
        int index;  // into the corresponding BallPolyhedron3 array
    };
    std::vector<Element> elements;
    std::vector<std::vector<bool>> leq;  // containment order
    bool atomic = false;
};

struct StandardnessReport {
    bool standard = false;
    std::string witness;           // human-readable reason when not standard
    std::optional<FaceLattice> lattice;
};

StandardnessReport standardness_and_lattice(const BallPolyhedron3& P);

// -- Euler / edge-graph checks -----------------------------------------------

/// Abstract edge-graph of a body (loop-free; parallel edges possible) plus
/// the geometric rotation system: the cyclic order of edge-ends around each
/// vertex as seen from outside.
struct EdgeGraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;
    struct Dart {
        int edge;
        bool forward;  // leaves the edge's first endpoint
    };
    std::vector<std::vector<Dart>> rotation;  // per vertex, cyclic order
};

EdgeGraph edge_graph(const BallPolyhedron3& P);

struct GraphReport {
    int V = 0, E = 0, F = 0;
    int chi = 0;
    bool simple = false;
    bool planar = false;         // certified via the geometric rotation system
    bool three_connected = false;
    bool standard = false;       // whether the Euler/Steinitz claims apply
};

GraphReport euler_and_graph_checks(const BallPolyhedron3& P, const Tolerance& tol = {});

// -- circumscribed-polyhedron approximation (Claim approx) -------------------

struct Polytope {
    std::vector<Vec> vertices;
    std::vector<std::vector<int>> faces;  // vertex index cycles
};

Polytope make_tetrahedron(double circumradius = 1.0);
Polytope make_cube(double circumradius = 1.0);
Polytope make_octahedron(double circumradius = 1.0);

struct ApproxResult {
    BallPolyhedron3 body;     // unit-ball polyhedron P_k (rescaled by 1/k)
    double k = 0.0;
    double hausdorff = 0.0;   // d_H(k * P_k, input polytope)
    bool lattice_isomorphic = false;
};

/// Builds P_k' as the intersection of radius-k balls over the faces and
/// rescales to unit generators. Throws on non-cocircular faces or k <= r_F.
ApproxResult approximate_polyhedron(const Polytope& poly, double k,
                                    const Tolerance& tol = {});

}  // namespace ballpoly::bp3
