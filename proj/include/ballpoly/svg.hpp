#pragma once

#include <string>

#include "ballpoly/types.hpp"

namespace ballpoly::io {

/// A circular arc for figure emission: unit-or-other radius circle, angular
/// interval [mid-half, mid+half], traversed counterclockwise.
struct SvgArc {
    Vec center;
    double radius = 1.0;
    double mid = 0.0;
    double half = 0.0;
};

/// SVG 1.1 document with one <path> element per arc (plus optional circles
/// for the generating disks). Math y-axis points up; the document flips it.
std::string svg_document(const std::vector<SvgArc>& arcs,
                         const std::vector<Vec>& circles = {},
                         double circle_radius = 1.0);

}  // namespace ballpoly::io
