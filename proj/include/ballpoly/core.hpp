#pragma once

#include <optional>
#include <span>

#include "ballpoly/types.hpp"

namespace ballpoly::core {

/// Arc-distance rho(a,b) = 2*asin(|a-b|/2), the length of the shorter unit
/// circular arc joining a and b. Undefined (nullopt) for chords longer than
/// 2 + eps_geom; chords in the band (2, 2+eps_geom] clamp to pi.
std::optional<double> arc_distance(const Vec& a, const Vec& b,
                                   const Tolerance& tol = {});

enum class TriangleOrder { Greater, Equal, Less };

/// Sign of rho(a,b) + rho(b,c) - rho(a,c), with an eps_geom band for Equal.
/// Throws if any pairwise distance exceeds 2.
TriangleOrder classify_arc_triangle(const Vec& a, const Vec& b, const Vec& c,
                                    const Tolerance& tol = {});

/// Membership of x in the closed (or open) spindle [a,b]_s. Decided in
/// closed form: in the plane of a,b,x the spindle is the intersection of
/// the two unit disks whose circles pass through a and b.
bool spindle_contains(const Vec& a, const Vec& b, const Vec& x,
                      bool closed = true, const Tolerance& tol = {});

struct Circumball {
    Vec center;
    double radius = 0.0;
    std::vector<int> support;       // indices of points on the boundary
    bool degenerate_singleton = false;
};

/// Smallest enclosing ball. Exhaustive support-set enumeration for up to 12
/// points, Welzl move-to-front above; certified a posteriori.
Circumball circumball(std::span<const Vec> points, const Tolerance& tol = {});

inline Circumball circumball(const std::vector<Vec>& points, const Tolerance& tol = {}) {
    return circumball(std::span<const Vec>(points), tol);
}

/// x in B[centers] (radius r balls). The intersection over an empty family
/// is the whole space.
bool in_ball_intersection(std::span<const Vec> centers, double radius,
                          const Vec& x, bool closed = true,
                          const Tolerance& tol = {});

/// Common intersection of a family of spheres: empty, a point, or a
/// sphere. Radical-hyperplane elimination; rank decisions use a singular
/// value cutoff of eps_geom * sigma_max.
SubSphere intersect_spheres(std::span<const Sphere> family,
                            const Tolerance& tol = {});

inline SubSphere intersect_spheres(const std::vector<Sphere>& family,
                                   const Tolerance& tol = {}) {
    return intersect_spheres(std::span<const Sphere>(family), tol);
}

}  // namespace ballpoly::core
