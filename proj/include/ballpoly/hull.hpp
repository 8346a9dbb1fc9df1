#pragma once

#include <optional>
#include <span>

#include "ballpoly/types.hpp"

namespace ballpoly::hull {

struct NoHemisphere : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotInHull : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct Unsupported : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact 2D spindle hull boundary: vertices (a subset of the input, ccw) and
/// the outward unit arcs joining consecutive vertices.
struct ArcBoundary2 {
    struct Arc {
        Vec center;   // supporting unit circle center
        double mid = 0.0, half = 0.0;  // angular range on that circle
    };
    std::vector<Vec> vertices;
    std::vector<Arc> arcs;  // arcs[i] joins vertices[i] -> vertices[i+1 mod n]
};

struct SpindleHull2 {
    enum class Kind { Boundary, SingleBall, WholePlane };
    Kind kind = Kind::Boundary;
    ArcBoundary2 boundary;  // Kind::Boundary; a single point has no arcs
    Vec ball_center;        // Kind::SingleBall
};

/// Gift-wrapping on arcs, started from a circumball support point.
SpindleHull2 spindle_hull_2d(std::span<const Vec> X, const Tolerance& tol = {});

inline SpindleHull2 spindle_hull_2d(const std::vector<Vec>& X, const Tolerance& tol = {}) {
    return spindle_hull_2d(std::span<const Vec>(X), tol);
}

/// Membership in conv_s X for ambient dimension 2 or 3, decided through the
/// farthest-point function over B[X]. Throws Unsupported for n >= 4.
bool spindle_hull_contains(std::span<const Vec> X, const Vec& p, const Tolerance& tol = {});

inline bool spindle_hull_contains(const std::vector<Vec>& X, const Vec& p,
                                  const Tolerance& tol = {}) {
    return spindle_hull_contains(std::span<const Vec>(X), p, tol);
}

/// Support function of conv_s X (|u| = 1) for n <= 3: the support ball
/// center is the minimizer of <.,u> over B[X], and h = min + 1.
double hull_support(std::span<const Vec> X, const Vec& u, const Tolerance& tol = {});

/// The minimizing point of <.,u> over B[X]: the center of the unit ball
/// supporting conv_s X in direction u. Requires a bounded hull.
Vec hull_support_center(std::span<const Vec> X, const Vec& u, const Tolerance& tol = {});

/// Spherically convex subset of a sphere, given by generator directions.
struct SphericalRegion {
    SubSphere carrier;
    std::vector<Vec> generators;  // unit directions from the carrier center
};

/// Membership via central projection onto the tangent hyperplane at a
/// hemisphere pole; throws NoHemisphere when none exists.
bool spherical_hull_contains(const SphericalRegion& R, const Vec& y_dir,
                             const Tolerance& tol = {});

/// Caratheodory/Steinitz reduction: smallest-cardinality-first exhaustive
/// search for Q with y in conv_s Q; |Q| <= n on the boundary, n+1 inside.
std::vector<int> caratheodory_steinitz_reduce(std::span<const Vec> X, const Vec& y,
                                              const Tolerance& tol = {});

/// Colorful Caratheodory transversal: one point per class with the origin in
/// the spindle hull of the chosen points. First hit in lexicographic order.
std::vector<int> colorful_transversal(std::span<const std::vector<Vec>> classes,
                                      const Tolerance& tol = {});

/// No point of A lies in the spindle hull of the others.
bool spindle_position(std::span<const Vec> A, const Tolerance& tol = {});

inline bool spindle_position(const std::vector<Vec>& A, const Tolerance& tol = {}) {
    return spindle_position(std::span<const Vec>(A), tol);
}

/// Exhaustive search for an m-subset in spindle convex position.
std::optional<std::vector<int>> es_search(std::span<const Vec> A, int m,
                                          const Tolerance& tol = {});

}  // namespace ballpoly::hull
