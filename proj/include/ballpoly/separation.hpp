#pragma once

#include <optional>
#include <span>

#include "ballpoly/types.hpp"

namespace ballpoly::separation {

/// Sphere separating two sets, with the enclosed side and strictness flag.
struct SeparationResult {
    Vec center;
    double radius = 0.0;
    bool inner_is_first = true;   // the first argument is enclosed
    bool strict = false;          // clearance >= eps_geom on both sides
    bool singleton = false;       // degenerate radius-0 output (|A|=1, B empty)
    std::vector<int> active;      // indices into A ++ B certifying optimality
};

/// Smallest sphere with A enclosed and B outside, solved as the lifted
/// convex QP in (c, w): minimize |c|^2 - w subject to one linear constraint
/// per point. The optimum is located by KKT support-set enumeration
/// (Helly: at most n+2 active points) and then run through a primal
/// active-set method with Bland's rule for certification.
std::optional<SeparationResult> smallest_separating_sphere(std::span<const Vec> A,
                                                           std::span<const Vec> B,
                                                           const Tolerance& tol = {});

/// Infeasibility witness: a subset of at most n+2 points of A ++ B whose
/// sub-instance is already infeasible.
std::optional<std::vector<int>> infeasibility_witness(std::span<const Vec> A,
                                                      std::span<const Vec> B,
                                                      const Tolerance& tol = {});

/// Unit ball supported by the hyperplane with outward `normal` at boundary
/// point z, verified to contain every defining point. Throws NotSupporting.
struct NotSupporting : std::runtime_error {
    using std::runtime_error::runtime_error;
};
Ball support_unit_ball(std::span<const Vec> defining_points, const Vec& z,
                       const Vec& normal, const Tolerance& tol = {});

/// Separation of conv_s X from conv_s Y by a unit sphere (X enclosed):
/// hyperplane-separates the hulls through exact support functions, converts
/// via the support unit ball, then upgrades to strict when the closures
/// have a gap. Returns nullopt when the hulls overlap.
std::optional<SeparationResult> separate_by_unit_sphere(std::span<const Vec> X,
                                                        std::span<const Vec> Y,
                                                        const Tolerance& tol = {});

// -- Kirchberger ---------------------------------------------------------------

enum class KirchbergerVerdict { SeparableByCapRadius1, NotSeparable, CounterexampleWitness };

struct KirchbergerReport {
    KirchbergerVerdict verdict;
    std::optional<SeparationResult> full;   // solution of the full instance
    std::vector<int> witness;               // failing subset (global indices)
};

/// Checks the radius-at-most-one Kirchberger statement on finite A, B by
/// brute force over subsets of size <= n+2.
KirchbergerReport kirchberger_verdict(std::span<const Vec> A, std::span<const Vec> B,
                                      const Tolerance& tol = {});

struct Counterexample {
    Vec a;                     // A = {a}
    std::vector<Vec> B;
    double delta = 0.0;
    double eps = 0.0;
    // verification results (dense sampling of the construction's properties)
    bool ball_covered = true;          // B(a) inside the union of the B-disks
    bool covering_minimal = true;      // removing any disk uncovers part of C
    bool a_in_conv_B = true;
    bool unit_separable = false;       // full pair strictly separable by a unit sphere
};

/// The planar no-Kirchberger-for-unit-spheres construction: a singleton A
/// and disks arranged so that the inner cap is minimally covered. Throws
/// std::invalid_argument for parameters that cannot give a minimal covering
/// with at least three arcs.
Counterexample kirchberger_counterexample(double delta, double eps, int samples = 10000,
                                          unsigned seed = 0, const Tolerance& tol = {});

/// Unit-sphere separability of {a} from B (strict, A inside), decided by
/// sampling candidate centers in B(a): returns a valid center if one exists.
std::optional<Vec> unit_separation_center(const Vec& a, std::span<const Vec> B,
                                          int samples = 10000, unsigned seed = 0,
                                          const Tolerance& tol = {});

/// Independent minimality certificate from the inversion argument: after
/// normalizing the sphere to S(o,1), the halfspace system
///   <x, a> >= 1 (a in A on the sphere),  <x, b> <= 1 (b in B on the sphere)
/// must be infeasible. Searches for a Farkas certificate over small
/// supports; returns true when one is found.
bool minimality_certificate(std::span<const Vec> A, std::span<const Vec> B,
                            const Vec& center, double radius,
                            const Tolerance& tol = {});

}  // namespace ballpoly::separation
