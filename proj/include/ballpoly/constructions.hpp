#pragma once

#include <span>

#include "ballpoly/types.hpp"

namespace ballpoly::constructions {

struct Degenerate : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvalidPair : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// -- Titeica / Johnson ---------------------------------------------------------

struct TiteicaResult {
    Vec x, y, z;          // second pairwise intersections
    Vec circumcenter;
    double circumradius = 0.0;
    double deviation = 0.0;  // |circumradius - 1|
};

/// Three unit circles through a common point p: the second pairwise
/// intersections lie on a unit circle. Throws Degenerate for tangent or
/// coincident circle pairs.
TiteicaResult titeica_check(const Vec& c1, const Vec& c2, const Vec& c3, const Vec& p,
                            const Tolerance& tol = {});

// -- sphere-family Helly variant --------------------------------------------------

struct HellyCheck {
    bool hypothesis_met = false;
    std::vector<int> witness;  // an (n-k)-subset violating the hypothesis
    SubSphere full;            // intersection of the whole family
};

/// Hypothesis: every (n-k)-subfamily intersects in a sphere of dimension at
/// least k+1. When it holds, the full family intersects in such a sphere.
HellyCheck sphere_family_helly_check(std::span<const Sphere> family, int k,
                                     const Tolerance& tol = {});

// -- Maehara counterexample -------------------------------------------------------

/// g_m(t) = d(t)^2 + 2 r(t) - 1 with the closed forms for the tangent-sphere
/// radius r(t) and the center distance d(t) = |r(t) - t|.
double g_m(int m, double t);
double g_m_deriv(int m, double t);

struct MaeharaParameters {
    int n = 0, m = 0;
    double t_star = 0.0;
    double r = 0.0;             // tangent sphere radius (formula)
    double d = 0.0;             // |c|
    double r_geometric = 0.0;   // tangent distance recomputed from the simplex
    Vec apex;                   // b, on the unit circumsphere
    std::vector<Vec> base;      // regular (n-1)-simplex in the hyperplane x1 = t
    Vec tangent_center;         // c, on the axis
};

/// Root of g_m on (0,1): plain bisection for m >= 4 (endpoint signs from the
/// construction); for m = 3 the function touches zero, so the critical point
/// of g_3 is bisected on the analytic derivative instead.
MaeharaParameters maehara_parameters(int n, const Tolerance& tol = {});

/// Inversion x -> c + r^2 (x-c)/|x-c|^2.
Vec invert(const Vec& x, const Vec& center, double r);

struct MaeharaFamily {
    std::vector<Sphere> spheres;     // n+2 distinct unit spheres
    std::vector<Vec> loo_points;     // loo_points[i]: common point of all but sphere i
    double max_loo_residual = 0.0;
    double infeasibility_margin = 0.0;  // rigorous lower bound on the full-family residual
    bool full_intersection_empty = false;
};

/// Builds the n+2 unit spheres of which any n+1, but not all, share a point.
MaeharaFamily maehara_family(int n, const Tolerance& tol = {});

// -- Kneser-Poulsen experiments ----------------------------------------------------

struct KPReport {
    bool inradius_ok = false;
    double inradius_x = 0.0, inradius_y = 0.0;  // via the r + R = 1 identity
    double diameter_delta = 0.0;                // value(Y) - value(X)
    double circumradius_delta = 0.0;
    double width_delta = 0.0;
};

/// Contraction experiment in the plane. Throws InvalidPair unless Y is a
/// pairwise contraction of X (index correspondence, duplicates allowed).
KPReport kp_experiments(std::span<const Vec> X, std::span<const Vec> Y,
                        const Tolerance& tol = {});

/// Largest inscribed disk radius of B[centers], by direct concave
/// maximization of min_i (1 - |q - x_i|); independent of the circumball path.
double inscribed_disk_radius(std::span<const Vec> centers, const Tolerance& tol = {});

}  // namespace ballpoly::constructions
