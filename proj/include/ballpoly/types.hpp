#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

namespace ballpoly {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

inline Vec vec2(double x, double y) {
    Vec v(2);
    v << x, y;
    return v;
}

inline Vec vec3(double x, double y, double z) {
    Vec v(3);
    v << x, y, z;
    return v;
}

/// Two-tier tolerance: eps_geom drives geometric predicates, eps_opt
/// drives optimizer stopping rules.
struct Tolerance {
    double eps_geom = 1e-9;
    double eps_opt = 1e-12;

    Tolerance() = default;
    Tolerance(double geom, double opt) : eps_geom(geom), eps_opt(opt) {
        if (!(0.0 < opt && opt <= geom && geom < 1e-3))
            throw std::invalid_argument("Tolerance: need 0 < eps_opt <= eps_geom < 1e-3");
    }
};

/// Closed ball of positive radius. Radius zero is permitted only where an
/// operation explicitly documents a degenerate output (circumball of a
/// singleton); constructors of those results set it deliberately.
struct Ball {
    Vec center;
    double radius = 1.0;
};

struct Sphere {
    Vec center;
    double radius = 1.0;
};

/// Intersection of finitely many spheres: empty, a point, or a sphere of
/// some intrinsic dimension k living in an affine subspace whose direction
/// space is spanned by the orthonormal columns of `frame`.
struct SubSphere {
    enum class Kind { Empty, Point, Sphere };
    Kind kind = Kind::Empty;
    Vec center;                 // point location when kind==Point
    double radius = 0.0;
    Mat frame;                  // n x (k+1), orthonormal columns
    int intrinsic_dim = -1;     // k; -1 for empty/point

    bool is_sphere() const { return kind == Kind::Sphere; }
    bool is_point() const { return kind == Kind::Point; }
    bool is_empty() const { return kind == Kind::Empty; }
};

// Loud alarm: a property the underlying theory guarantees failed, which
// indicates an implementation bug rather than bad input.
struct TheoremViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configuration the structure code refuses to interpret (e.g. a sphere
// passing nearly-but-not-exactly through a vertex).
struct DegenerateConfiguration : std::runtime_error {
    std::vector<int> witness;
    DegenerateConfiguration(const std::string& msg, std::vector<int> w)
        : std::runtime_error(msg), witness(std::move(w)) {}
};

}  // namespace ballpoly
