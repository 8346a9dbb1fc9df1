#include "ballpoly/hull.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ballpoly/bp3.hpp"
#include "ballpoly/convexutil.hpp"
#include "ballpoly/core.hpp"
#include "ballpoly/diskpoly.hpp"

namespace ballpoly::hull {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTau = 2.0 * kPi;

double ccw_angle(double from, double to) {  // in [0, 2pi)
    double a = std::fmod(to - from, kTau);
    if (a < 0) a += kTau;
    return a;
}

double angle_of(const Vec& v) { return std::atan2(v(1), v(0)); }

std::vector<Vec> dedupe(std::span<const Vec> X, double eps) {
    std::vector<Vec> out;
    for (const Vec& x : X) {
        bool dup = false;
        for (const Vec& y : out)
            if ((x - y).norm() <= eps) { dup = true; break; }
        if (!dup) out.push_back(x);
    }
    return out;
}

}  // namespace

SpindleHull2 spindle_hull_2d(std::span<const Vec> X, const Tolerance& tol) {
    if (X.empty()) throw std::invalid_argument("spindle_hull_2d: empty input");
    for (const Vec& x : X)
        if (x.size() != 2) throw std::invalid_argument("spindle_hull_2d: need planar points");
    std::vector<Vec> pts = dedupe(X, tol.eps_geom);

    SpindleHull2 H;
    if (pts.size() == 1) {
        H.kind = SpindleHull2::Kind::Boundary;
        H.boundary.vertices = {pts[0]};
        return H;
    }
    auto cb = core::circumball(pts, tol);
    if (cb.radius > 1.0 + tol.eps_geom) {
        H.kind = SpindleHull2::Kind::WholePlane;
        return H;
    }
    if (cb.radius >= 1.0 - tol.eps_geom) {
        H.kind = SpindleHull2::Kind::SingleBall;
        H.ball_center = cb.center;
        return H;
    }

    // start at a circumcircle support point (certain to be a hull vertex)
    int start = cb.support[0];
    for (int s : cb.support) {
        const Vec& a = pts[s];
        const Vec& b = pts[start];
        if (a(1) < b(1) - 1e-15 || (std::abs(a(1) - b(1)) <= 1e-15 && a(0) < b(0)))
            start = s;
    }
    Vec e_ref = (cb.center - pts[start]).normalized();

    const double contain_slack = 10 * tol.eps_geom;
    auto contains_all = [&](const Vec& c) {
        for (const Vec& x : pts)
            if ((x - c).norm() > 1.0 + contain_slack) return false;
        return true;
    };

    H.kind = SpindleHull2::Kind::Boundary;
    int cur = start;
    for (size_t step = 0; step <= pts.size(); ++step) {
        const Vec v = pts[cur];
        struct Cand { int w; Vec c; double beta; double sweep; };
        std::vector<Cand> cands;
        for (size_t w = 0; w < pts.size(); ++w) {
            if (static_cast<int>(w) == cur) continue;
            const Vec d = pts[w] - v;
            const double D = d.norm();
            if (D > 2.0 + tol.eps_geom) continue;
            const double h = std::sqrt(std::max(0.0, 1.0 - D * D / 4.0));
            const Vec left = vec2(-d(1), d(0)) / D;
            const Vec c = 0.5 * (v + pts[w]) + h * left;
            if (!contains_all(c)) continue;
            const double beta = ccw_angle(angle_of(e_ref), angle_of(c - v));
            const double sweep = ccw_angle(angle_of(v - c), angle_of(pts[w] - c));
            if (beta < 1e-12) continue;
            cands.push_back({static_cast<int>(w), c, beta, sweep});
        }
        if (cands.empty())
            throw std::runtime_error("spindle_hull_2d: gift wrap found no successor");
        double bmin = cands[0].beta;
        for (const auto& c : cands) bmin = std::min(bmin, c.beta);
        // among co-circular candidates take the farthest sweep (absorbs
        // points lying mid-arc on the same supporting circle)
        const Cand* pick = nullptr;
        for (const auto& c : cands)
            if (c.beta <= bmin + 1e-9 && (!pick || c.sweep > pick->sweep)) pick = &c;

        ArcBoundary2::Arc arc;
        arc.center = pick->c;
        const double a0 = angle_of(v - pick->c);
        arc.half = 0.5 * pick->sweep;
        arc.mid = a0 + arc.half;
        H.boundary.vertices.push_back(v);
        H.boundary.arcs.push_back(arc);

        cur = pick->w;
        e_ref = (pick->c - pts[cur]).normalized();
        if (cur == start) break;
    }
    if (cur != start) throw std::runtime_error("spindle_hull_2d: gift wrap did not close");
    return H;
}

bool spindle_hull_contains(std::span<const Vec> X, const Vec& p, const Tolerance& tol) {
    if (X.empty()) throw std::invalid_argument("spindle_hull_contains: empty input");
    const int n = static_cast<int>(X[0].size());
    if (n == 2) {
        auto D = diskpoly::build_disk_polygon(X, tol);
        if (D.kind == diskpoly::DiskPolygon::Kind::Empty) return true;  // hull is the plane
        return diskpoly::farthest_distance(D, p) <= 1.0 + 1e2 * tol.eps_geom;
    }
    if (n == 3) {
        const double far = bp3::max_distance_over_body(X, p, tol);
        if (far < 0.0) return true;
        return far <= 1.0 + 1e2 * tol.eps_geom;
    }
    throw Unsupported("spindle_hull_contains: ambient dimension must be 2 or 3");
}

namespace {

// minimizer of <.,u> over B[X] with its value; infinity when B[X] is empty
std::pair<double, Vec> body_min_dot(std::span<const Vec> X, const Vec& u,
                                    const Tolerance& tol) {
    const int n = static_cast<int>(X[0].size());
    if (n == 2) {
        auto D = diskpoly::build_disk_polygon(X, tol);
        switch (D.kind) {
            case diskpoly::DiskPolygon::Kind::Empty:
                return {std::numeric_limits<double>::infinity(), Vec()};
            case diskpoly::DiskPolygon::Kind::Point:
                return {D.point.dot(u), D.point};
            case diskpoly::DiskPolygon::Kind::FullDisk: {
                Vec p = D.point - u / u.norm();
                return {p.dot(u), p};
            }
            case diskpoly::DiskPolygon::Kind::Polygon:
                break;
        }
        double best = std::numeric_limits<double>::infinity();
        Vec arg;
        for (const auto& v : D.vertices)
            if (v.pos.dot(u) < best) { best = v.pos.dot(u); arg = v.pos; }
        for (const auto& a : D.arcs) {
            const double tstar = std::atan2(-u(1), -u(0));
            double delta = std::fmod(tstar - a.mid, kTau);
            if (delta < -kPi) delta += kTau;
            if (delta > kPi) delta -= kTau;
            if (std::abs(delta) <= a.half) {
                Vec p = D.centers[a.gen] - u / u.norm();
                if (p.dot(u) < best) { best = p.dot(u); arg = p; }
            }
        }
        return {best, arg};
    }
    if (n == 3) {
        auto r = bp3::min_dot_argmin_over_body(X, u, tol);
        return {r.value, r.point};
    }
    throw Unsupported("hull_support: ambient dimension must be 2 or 3");
}

}  // namespace

double hull_support(std::span<const Vec> X, const Vec& u, const Tolerance& tol) {
    std::vector<Vec> pts = dedupe(X, tol.eps_geom);
    if (pts.size() == 1) return pts[0].dot(u);  // hull of a singleton is the point
    auto [value, point] = body_min_dot(X, u, tol);
    if (!std::isfinite(value)) return std::numeric_limits<double>::infinity();
    return value + 1.0;
}

Vec hull_support_center(std::span<const Vec> X, const Vec& u, const Tolerance& tol) {
    std::vector<Vec> pts = dedupe(X, tol.eps_geom);
    if (pts.size() == 1) return pts[0] - u / u.norm();
    auto [value, point] = body_min_dot(X, u, tol);
    if (!std::isfinite(value))
        throw std::invalid_argument("hull_support_center: unbounded hull");
    return point;
}

bool spherical_hull_contains(const SphericalRegion& R, const Vec& y_dir,
                             const Tolerance& tol) {
    if (R.generators.empty())
        throw std::invalid_argument("spherical_hull_contains: no generators");
    auto mnp = convexutil::min_norm_point(R.generators);
    if (mnp.point.norm() <= tol.eps_geom)
        throw NoHemisphere("spherical_hull_contains: generators span no open hemisphere");
    const Vec pole = mnp.point.normalized();
    const double yc = y_dir.normalized().dot(pole);
    if (yc <= tol.eps_geom) return false;
    std::vector<Vec> proj;
    proj.reserve(R.generators.size());
    for (const Vec& g : R.generators) {
        const double c = g.normalized().dot(pole);
        if (c <= tol.eps_geom)
            throw NoHemisphere("spherical_hull_contains: generator on the hemisphere boundary");
        proj.push_back(g.normalized() / c);
    }
    return convexutil::in_convex_hull(proj, y_dir.normalized() / yc, 1e2 * tol.eps_geom);
}

std::vector<int> caratheodory_steinitz_reduce(std::span<const Vec> X, const Vec& y,
                                              const Tolerance& tol) {
    const int n = static_cast<int>(X[0].size());
    if (n > 3) throw Unsupported("caratheodory_steinitz_reduce: n <= 3 only");
    std::vector<Vec> all(X.begin(), X.end());
    if (!spindle_hull_contains(all, y, tol))
        throw NotInHull("caratheodory_steinitz_reduce: y not in conv_s X");
    const int N = static_cast<int>(X.size());
    for (int k = 1; k <= std::min(N, n + 1); ++k) {
        std::vector<int> comb(k);
        std::iota(comb.begin(), comb.end(), 0);
        while (true) {
            std::vector<Vec> sub;
            for (int i : comb) sub.push_back(X[i]);
            if (spindle_hull_contains(sub, y, tol)) return comb;
            int i = k - 1;
            while (i >= 0 && comb[i] == N - k + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    throw TheoremViolation("caratheodory_steinitz_reduce: no subset of size n+1 works");
}

std::vector<int> colorful_transversal(std::span<const std::vector<Vec>> classes,
                                      const Tolerance& tol) {
    if (classes.empty()) throw std::invalid_argument("colorful_transversal: no classes");
    const int n = static_cast<int>(classes[0][0].size());
    if (n > 3) throw Unsupported("colorful_transversal: n <= 3 only");
    if (static_cast<int>(classes.size()) != n + 1)
        throw std::invalid_argument("colorful_transversal: need n+1 classes");
    const Vec o = Vec::Zero(n);
    for (size_t i = 0; i < classes.size(); ++i)
        if (!spindle_hull_contains(classes[i], o, tol))
            throw std::invalid_argument("colorful_transversal: class " + std::to_string(i) +
                                        " does not contain the origin in its spindle hull");
    std::vector<int> pick(classes.size(), 0);
    while (true) {
        std::vector<Vec> T;
        for (size_t i = 0; i < classes.size(); ++i) T.push_back(classes[i][pick[i]]);
        if (spindle_hull_contains(T, o, tol)) return pick;
        int i = static_cast<int>(classes.size()) - 1;
        while (i >= 0 && pick[i] + 1 >= static_cast<int>(classes[i].size())) {
            pick[i] = 0;
            --i;
        }
        if (i < 0) break;
        ++pick[i];
    }
    throw TheoremViolation("colorful_transversal: no transversal found");
}

bool spindle_position(std::span<const Vec> A, const Tolerance& tol) {
    if (A.size() < 2) return true;
    auto cb = core::circumball(A, tol);
    if (cb.radius > 1.0 + tol.eps_geom)
        throw std::invalid_argument("spindle_position: crr(A) > 1 is out of scope");
    for (size_t i = 0; i < A.size(); ++i) {
        std::vector<Vec> rest;
        for (size_t j = 0; j < A.size(); ++j)
            if (j != i) rest.push_back(A[j]);
        if (spindle_hull_contains(rest, A[i], tol)) return false;
    }
    return true;
}

std::optional<std::vector<int>> es_search(std::span<const Vec> A, int m,
                                          const Tolerance& tol) {
    const int N = static_cast<int>(A.size());
    if (N > 20) throw std::invalid_argument("es_search: desk-scale cap is 20 points");
    if (m < 2 || m > N) return std::nullopt;
    auto cb = core::circumball(A, tol);
    if (cb.radius > 1.0 + tol.eps_geom)
        throw std::invalid_argument("es_search: crr(A) > 1 is out of scope");
    std::vector<int> comb(m);
    std::iota(comb.begin(), comb.end(), 0);
    while (true) {
        std::vector<Vec> sub;
        for (int i : comb) sub.push_back(A[i]);
        if (spindle_position(sub, tol)) return comb;
        int i = m - 1;
        while (i >= 0 && comb[i] == N - m + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < m; ++j) comb[j] = comb[j - 1] + 1;
    }
    return std::nullopt;
}

}  // namespace ballpoly::hull
