#pragma once

#include <span>

#include "ballpoly/types.hpp"

namespace ballpoly::convexutil {

struct MinNormPoint {
    Vec point;                   // closest point of conv(pts) to the origin
    std::vector<double> coeffs;  // convex coefficients over pts
};

/// Minimum-norm point of the convex hull of a small point set, found by
/// exhaustive enumeration of support subsets (Caratheodory: at most dim+1
/// points carry the optimum).
MinNormPoint min_norm_point(std::span<const Vec> pts);

/// Euclidean convex-hull membership for a small point set, by enumerating
/// candidate simplices and testing barycentric coordinates.
bool in_convex_hull(std::span<const Vec> pts, const Vec& q, double tol = 1e-9);

}  // namespace ballpoly::convexutil
