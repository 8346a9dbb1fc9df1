#include "ballpoly/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace ballpoly::core {

namespace {

void check_same_dim(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("ambient dimension mismatch");
}

double clamp01(double x) { return std::clamp(x, -1.0, 1.0); }

}  // namespace

std::optional<double> arc_distance(const Vec& a, const Vec& b, const Tolerance& tol) {
    check_same_dim(a, b);
    const double chord = (a - b).norm();
    if (chord > 2.0 + tol.eps_geom) return std::nullopt;
    return 2.0 * std::asin(clamp01(chord / 2.0));
}

TriangleOrder classify_arc_triangle(const Vec& a, const Vec& b, const Vec& c,
                                    const Tolerance& tol) {
    auto ab = arc_distance(a, b, tol);
    auto bc = arc_distance(b, c, tol);
    auto ac = arc_distance(a, c, tol);
    if (!ab || !bc || !ac)
        throw std::invalid_argument("classify_arc_triangle: pairwise distance exceeds 2");
    const double gap = *ab + *bc - *ac;
    if (std::abs(gap) <= tol.eps_geom) return TriangleOrder::Equal;
    return gap > 0 ? TriangleOrder::Greater : TriangleOrder::Less;
}

bool spindle_contains(const Vec& a, const Vec& b, const Vec& x, bool closed,
                      const Tolerance& tol) {
    check_same_dim(a, b);
    check_same_dim(a, x);
    const double d = (a - b).norm();
    if (d > 2.0 + tol.eps_geom) return true;  // spindle is all of R^n
    if (d >= 2.0 - tol.eps_geom) {
        // diametral case: the spindle is the unit ball about the midpoint
        const double dist = (x - 0.5 * (a + b)).norm();
        return closed ? dist <= 1.0 + tol.eps_geom : dist < 1.0 - tol.eps_geom;
    }
    // Reduce to the plane of a,b,x. With u along the chord and v the
    // perpendicular offset of x, the binding extreme circle is the one
    // centered on the far side: membership iff u^2 + (v+h)^2 <= 1.
    const Vec m = 0.5 * (a + b);
    Vec e1 = (b - a) / d;
    Vec p = x - m;
    const double u = p.dot(e1);
    const double v = (p - u * e1).norm();
    const double h = std::sqrt(std::max(0.0, 1.0 - d * d / 4.0));
    const double q2 = u * u + (v + h) * (v + h);
    return closed ? q2 <= 1.0 + tol.eps_geom : q2 < 1.0 - tol.eps_geom;
}

namespace {

// Smallest sphere through an affinely independent support set: the center
// lies in the affine hull, equidistant from all support points.
bool sphere_through(std::span<const Vec> pts, const std::vector<int>& idx,
                    Vec& center, double& radius) {
    const int k = static_cast<int>(idx.size()) - 1;
    const Vec& p0 = pts[idx[0]];
    if (k == 0) {
        center = p0;
        radius = 0.0;
        return true;
    }
    Mat D(p0.size(), k);
    Eigen::VectorXd rhs(k);
    for (int i = 0; i < k; ++i) {
        D.col(i) = pts[idx[i + 1]] - p0;
        rhs(i) = 0.5 * D.col(i).squaredNorm();
    }
    Mat G = D.transpose() * D;
    Eigen::FullPivLU<Mat> lu(G);
    lu.setThreshold(1e-10);
    if (lu.rank() < k) return false;  // affinely dependent support
    Eigen::VectorXd alpha = lu.solve(rhs);
    center = p0 + D * alpha;
    radius = (D * alpha).norm();
    return true;
}

bool contains_all(std::span<const Vec> pts, const Vec& c, double r, double slack) {
    for (const Vec& p : pts)
        if ((p - c).norm() > r + slack) return false;
    return true;
}

Circumball circumball_exhaustive(std::span<const Vec> pts, const Tolerance& tol) {
    const int n = static_cast<int>(pts[0].size());
    const int N = static_cast<int>(pts.size());
    const int maxk = std::min(N, n + 1);
    Circumball best;
    best.radius = std::numeric_limits<double>::infinity();
    std::vector<int> idx;
    // enumerate support subsets in increasing size
    for (int k = 1; k <= maxk; ++k) {
        std::vector<int> comb(k);
        std::iota(comb.begin(), comb.end(), 0);
        while (true) {
            Vec c;
            double r;
            if (sphere_through(pts, comb, c, r) && r < best.radius &&
                contains_all(pts, c, r, tol.eps_geom)) {
                best.center = c;
                best.radius = r;
                best.support = comb;
            }
            // next combination
            int i = k - 1;
            while (i >= 0 && comb[i] == N - k + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    return best;
}

struct WelzlState {
    std::span<const Vec> pts;
    std::vector<int> order;
    int n;
};

// smallest ball with all of R on the boundary (R affinely independent)
bool ball_of_support(const WelzlState& st, const std::vector<int>& R, Vec& c, double& r) {
    if (R.empty()) {
        c = Vec::Zero(st.n);
        r = -1.0;  // empty ball
        return true;
    }
    return sphere_through(st.pts, R, c, r);
}

void welzl_mtf(WelzlState& st, int limit, std::vector<int>& R, Vec& c, double& r) {
    ball_of_support(st, R, c, r);
    if (static_cast<int>(R.size()) == st.n + 1) return;
    for (int i = 0; i < limit; ++i) {
        const int pi = st.order[i];
        if (r < 0 || (st.pts[pi] - c).norm() > r + 1e-12) {
            R.push_back(pi);
            welzl_mtf(st, i, R, c, r);
            R.pop_back();
            // move-to-front
            for (int j = i; j > 0; --j) std::swap(st.order[j], st.order[j - 1]);
        }
    }
}

}  // namespace

Circumball circumball(std::span<const Vec> points, const Tolerance& tol) {
    if (points.empty()) throw std::invalid_argument("circumball: empty input");
    const int N = static_cast<int>(points.size());
    Circumball out;
    if (N == 1) {
        out.center = points[0];
        out.radius = 0.0;
        out.support = {0};
        out.degenerate_singleton = true;
        return out;
    }
    if (N <= 12) {
        out = circumball_exhaustive(points, tol);
    } else {
        WelzlState st{points, {}, static_cast<int>(points[0].size())};
        st.order.resize(N);
        std::iota(st.order.begin(), st.order.end(), 0);
        std::mt19937_64 rng(0x5eed);
        std::shuffle(st.order.begin(), st.order.end(), rng);
        std::vector<int> R;
        Vec c;
        double r;
        welzl_mtf(st, N, R, c, r);
        out.center = c;
        out.radius = std::max(0.0, r);
        for (int i = 0; i < N; ++i)
            if (std::abs((points[i] - c).norm() - r) <= 1e2 * tol.eps_geom)
                out.support.push_back(i);
    }
    if (!contains_all(points, out.center, out.radius, 1e2 * tol.eps_geom))
        throw TheoremViolation("circumball: certification failed");
    return out;
}

bool in_ball_intersection(std::span<const Vec> centers, double radius, const Vec& x,
                          bool closed, const Tolerance& tol) {
    for (const Vec& c : centers) {
        const double d = (x - c).norm();
        if (closed ? d > radius + tol.eps_geom : d >= radius - tol.eps_geom)
            return false;
    }
    return true;
}

SubSphere intersect_spheres(std::span<const Sphere> family, const Tolerance& tol) {
    if (family.empty()) throw std::invalid_argument("intersect_spheres: empty family");
    const int n = static_cast<int>(family[0].center.size());
    for (const Sphere& s : family)
        if (s.center.size() != n)
            throw std::invalid_argument("intersect_spheres: dimension mismatch");

    const Sphere& s0 = family[0];
    const int m = static_cast<int>(family.size()) - 1;

    // geometric scale for tolerance decisions
    double scale = std::max(1.0, s0.radius);
    for (const Sphere& s : family)
        scale = std::max({scale, s.radius, (s.center - s0.center).norm()});

    SubSphere out;
    Mat frame;   // orthonormal basis of the direction space of the affine
                 // subspace carrying the intersection
    Vec x0;      // a point of that subspace

    if (m == 0) {
        frame = Mat::Identity(n, n);
        x0 = s0.center;
    } else {
        // radical hyperplanes: subtracting sphere i's equation from sphere
        // 0's gives 2(ci-c0).x = |ci|^2-|c0|^2 - ri^2 + r0^2
        Mat A(m, n);
        Vec b(m);
        for (int i = 0; i < m; ++i) {
            const Sphere& si = family[i + 1];
            A.row(i) = 2.0 * (si.center - s0.center).transpose();
            b(i) = si.center.squaredNorm() - s0.center.squaredNorm() -
                   si.radius * si.radius + s0.radius * s0.radius;
        }
        Eigen::JacobiSVD<Mat> svd(A, Eigen::ComputeFullV | Eigen::ComputeThinU);
        const auto& sv = svd.singularValues();
        const double cutoff = (sv.size() > 0 ? sv(0) : 0.0) * tol.eps_geom;
        int rank = 0;
        for (int i = 0; i < sv.size(); ++i)
            if (sv(i) > cutoff) ++rank;
        // particular least-squares solution, then consistency check
        Vec y = svd.matrixU().transpose() * b;
        Vec z = Vec::Zero(sv.size());
        for (int i = 0; i < rank; ++i) z(i) = y(i) / sv(i);
        x0 = svd.matrixV().leftCols(sv.size()) * z;
        if ((A * x0 - b).norm() > 1e3 * tol.eps_geom * scale * scale) {
            out.kind = SubSphere::Kind::Empty;
            return out;
        }
        frame = svd.matrixV().rightCols(n - rank);
    }

    // intersect the affine subspace with sphere 0
    const int f = static_cast<int>(frame.cols());
    Vec w = s0.center - x0;
    Vec proj = frame.transpose() * w;
    Vec q = x0 + frame * proj;           // projection of c0 onto the subspace
    const double axial2 = (s0.center - q).squaredNorm();
    const double rho2 = s0.radius * s0.radius - axial2;
    const double band = 1e2 * tol.eps_geom * scale * scale;
    if (rho2 < -band || f == 0) {
        if (f == 0) {
            // subspace is a single point; on the sphere iff rho2 ~ 0
            if (std::abs(rho2) <= band) {
                out.kind = SubSphere::Kind::Point;
                out.center = q;
            }
            return out;
        }
        out.kind = SubSphere::Kind::Empty;
        return out;
    }
    if (rho2 <= band) {
        out.kind = SubSphere::Kind::Point;
        out.center = q;
        return out;
    }
    out.kind = SubSphere::Kind::Sphere;
    out.center = q;
    out.radius = std::sqrt(rho2);
    out.frame = frame;
    out.intrinsic_dim = f - 1;
    return out;
}

}  // namespace ballpoly::core
