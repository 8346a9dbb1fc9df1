#pragma once

#include <span>

#include "ballpoly/types.hpp"

namespace ballpoly::diskpoly {

/// Planar ball-polyhedron B[X]: intersection of unit disks. Boundary arcs
/// are stored as angular intervals on their generating circles, chained in
/// counterclockwise order.
struct DiskPolygon {
    enum class Kind { Polygon, FullDisk, Point, Empty };

    struct Arc {
        int gen = -1;        // index into centers
        double mid = 0.0;    // interval center angle on the generating circle
        double half = 0.0;   // interval half-width; arc spans [mid-half, mid+half]
        int v_start = -1;    // vertex at angle mid-half
        int v_end = -1;      // vertex at angle mid+half
    };

    struct Vertex {
        Vec pos;
        std::vector<int> gens;  // circles through this vertex
    };

    Kind kind = Kind::Empty;
    std::vector<Vec> centers;     // reduced generating centers
    std::vector<Arc> arcs;        // ccw boundary cycle (kind==Polygon)
    std::vector<Vertex> vertices;
    Vec point;                    // kind==Point: the single intersection point

    bool nondegenerate() const { return kind == Kind::Polygon; }
};

/// Closed chain of unit circle arcs through a vertex list; self-intersecting
/// chains are representable. Each edge is one of the two at-most-pi unit
/// arcs over its chord (they bulge to opposite sides and have equal length),
/// so only the perimeter is measured; area is left undefined.
struct CirclePolygon {
    std::vector<Vec> vertices;     // x_0 .. x_{n-1}, closed cyclically
    std::vector<bool> bulge_left;  // per edge: arc center right of the chord
};

/// Validates consecutive distances <= 2 and sums the arc lengths.
double circle_polygon_perimeter(const CirclePolygon& P, const Tolerance& tol = {});

/// The arc boundary of a nondegenerate disk-polygon as a circle-polygon.
CirclePolygon boundary_circle_polygon(const DiskPolygon& P);

/// Reduce the family and build the boundary. Degenerate families classify
/// exactly: empty intersection, single point (crr=1 band), or one disk.
DiskPolygon build_disk_polygon(std::span<const Vec> centers, const Tolerance& tol = {});

inline DiskPolygon build_disk_polygon(const std::vector<Vec>& centers,
                                      const Tolerance& tol = {}) {
    return build_disk_polygon(std::span<const Vec>(centers), tol);
}

struct Measure {
    double perimeter = 0.0;
    double area = 0.0;
};

/// Arc-length sum and (underlying polygon + circular segments) area.
Measure measure(const DiskPolygon& P);

// -- support machinery (exact per-arc support functions) --------------------

/// Support function of the region in direction (cos t, sin t).
double support(const DiskPolygon& P, double theta);

/// Exact diameter via vertex/arc farthest-pair candidates.
double diameter(const DiskPolygon& P);

/// Minimum width, by sweeping h(t)+h(t+pi) with local refinement.
double min_width(const DiskPolygon& P);

/// Largest distance from q to a point of the region (0 for empty regions).
double farthest_distance(const DiskPolygon& P, const Vec& q);

// -- regular families and extremal problems ---------------------------------

enum class FamilyKind { Inscribed, Circumscribed };

struct RegularFamily {
    DiskPolygon poly;
    double perimeter = 0.0;  // closed-form values
    double area = 0.0;
    bool degenerate = false;
};

/// Regular n-sided disk-polygon inscribed in / circumscribed about a circle
/// of radius r < 1 centered at the origin, with closed-form measures.
RegularFamily regular_family(int n, double r, FamilyKind kind, const Tolerance& tol = {});

enum class Objective { Perimeter, Area };
enum class Sense { Max, Min };

struct ExtremalResult {
    std::vector<double> angles;     // central angles (inscribed) or center directions
    double value = 0.0;
    double regular_deviation = 0.0; // max_i |theta_i - 2pi/n|
};

/// Multi-start coordinate search over inscribed central angles or
/// circumscribed center directions.
ExtremalResult extremal_search(int n, double r, FamilyKind kind, Objective obj,
                               Sense sense, int restarts = 32, unsigned seed = 0,
                               const Tolerance& tol = {});

// -- Dowker tables -----------------------------------------------------------

struct DowkerRow {
    int n = 0;
    double value = 0.0;   // extremal value at n (regular closed form)
    double combo = 0.0;   // value(n-1) + value(n+1) - 2*value(n)
    bool holds = false;   // the stated strict inequality
    bool conjecture_only = false;  // even-n inscribed-area rows
};

struct DowkerTable {
    std::vector<DowkerRow> inscribed_perimeter;   // concave: combo < 0
    std::vector<DowkerRow> inscribed_area;        // concave for odd n; even n conjecture
    std::vector<DowkerRow> circumscribed_area;    // convex: combo > 0
    std::vector<DowkerRow> circumscribed_perimeter;
    bool all_theorem_rows_hold = false;
};

DowkerTable dowker_table(double r, int n_min, int n_max, const Tolerance& tol = {});

}  // namespace ballpoly::diskpoly
