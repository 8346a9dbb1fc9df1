#include "ballpoly/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ballpoly/core.hpp"
#include "ballpoly/diskpoly.hpp"

namespace ballpoly::constructions {

namespace {

Vec reflect_across_line(const Vec& p, const Vec& a, const Vec& b) {
    const Vec u = (b - a).normalized();
    const Vec proj = a + (p - a).dot(u) * u;
    return 2.0 * proj - p;
}

// circumcircle of three planar points; false when collinear
bool circumcircle2(const Vec& a, const Vec& b, const Vec& c, Vec& center, double& radius) {
    const double ax = a(0), ay = a(1), bx = b(0), by = b(1), cx = c(0), cy = c(1);
    const double d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
    if (std::abs(d) < 1e-14) return false;
    const double ux = ((ax * ax + ay * ay) * (by - cy) + (bx * bx + by * by) * (cy - ay) +
                       (cx * cx + cy * cy) * (ay - by)) /
                      d;
    const double uy = ((ax * ax + ay * ay) * (cx - bx) + (bx * bx + by * by) * (ax - cx) +
                       (cx * cx + cy * cy) * (bx - ax)) /
                      d;
    center = vec2(ux, uy);
    radius = (a - center).norm();
    return true;
}

}  // namespace

TiteicaResult titeica_check(const Vec& c1, const Vec& c2, const Vec& c3, const Vec& p,
                            const Tolerance& tol) {
    for (const Vec* c : {&c1, &c2, &c3})
        if (std::abs((*c - p).norm() - 1.0) > 1e3 * tol.eps_geom)
            throw std::invalid_argument("titeica_check: p is not on all three unit circles");
    auto second = [&](const Vec& a, const Vec& b) {
        const double D = (a - b).norm();
        if (D <= 1e3 * tol.eps_geom || std::abs(D - 2.0) <= 1e3 * tol.eps_geom)
            throw Degenerate("titeica_check: tangent or coincident circle pair");
        return reflect_across_line(p, a, b);
    };
    TiteicaResult R;
    R.x = second(c1, c2);
    R.y = second(c1, c3);
    R.z = second(c2, c3);
    if (!circumcircle2(R.x, R.y, R.z, R.circumcenter, R.circumradius))
        throw Degenerate("titeica_check: second intersections are collinear");
    R.deviation = std::abs(R.circumradius - 1.0);
    return R;
}

HellyCheck sphere_family_helly_check(std::span<const Sphere> family, int k,
                                     const Tolerance& tol) {
    if (family.empty()) throw std::invalid_argument("sphere_family_helly_check: empty family");
    const int n = static_cast<int>(family[0].center.size());
    if (k < 0 || k > n - 1)
        throw std::invalid_argument("sphere_family_helly_check: need 0 <= k <= n-1");
    const int need = n - k;
    const int N = static_cast<int>(family.size());
    if (N < need)
        throw std::invalid_argument("sphere_family_helly_check: family smaller than n-k");

    HellyCheck out;
    std::vector<int> comb(need);
    std::iota(comb.begin(), comb.end(), 0);
    while (true) {
        std::vector<Sphere> sub;
        for (int i : comb) sub.push_back(family[i]);
        SubSphere s = core::intersect_spheres(sub, tol);
        if (!(s.is_sphere() && s.intrinsic_dim >= k + 1)) {
            out.hypothesis_met = false;
            out.witness = comb;
            return out;
        }
        int i = need - 1;
        while (i >= 0 && comb[i] == N - need + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < need; ++j) comb[j] = comb[j - 1] + 1;
    }
    out.hypothesis_met = true;
    out.full = core::intersect_spheres(family, tol);
    if (!(out.full.is_sphere() && out.full.intrinsic_dim >= k + 1))
        throw TheoremViolation("sphere_family_helly_check: conclusion failed under the hypothesis");
    return out;
}

// -- Maehara -------------------------------------------------------------------

double g_m(int m, double t) {
    const double s = std::sqrt(1.0 + t);
    const double Q = std::sqrt(m * m + 1.0 - (m * m - 1.0) * t);
    const double r = s * (Q + s) / (m * m);
    const double d = std::abs(r - t);
    return d * d + 2.0 * r - 1.0;
}

double g_m_deriv(int m, double t) {
    const double s = std::sqrt(1.0 + t);
    const double sp = 0.5 / s;
    const double Q = std::sqrt(m * m + 1.0 - (m * m - 1.0) * t);
    const double Qp = -0.5 * (m * m - 1.0) / Q;
    const double r = s * (Q + s) / (m * m);
    const double rp = (sp * (Q + s) + s * (Qp + sp)) / (m * m);
    return 2.0 * (r - t) * (rp - 1.0) + 2.0 * rp;
}

namespace {

// unit direction vectors of a regular m-simplex in R^m (m+1 of them)
std::vector<Vec> regular_simplex_directions(int m) {
    // vertices e_i of R^{m+1}, centered, mapped into the hyperplane sum = 0
    Mat V(m + 1, m + 1);
    V.setIdentity();
    Vec center = Vec::Constant(m + 1, 1.0 / (m + 1));
    Mat W(m + 1, m + 1);
    for (int i = 0; i <= m; ++i) W.col(i) = V.col(i) - center;
    // orthonormal basis of the hyperplane orthogonal to (1,...,1)
    Mat ones = Mat::Constant(m + 1, 1, 1.0);
    Eigen::JacobiSVD<Mat> svd(ones, Eigen::ComputeFullU);
    Mat basis = svd.matrixU().rightCols(m);  // m+1 x m
    std::vector<Vec> dirs;
    for (int i = 0; i <= m; ++i) {
        Vec q = basis.transpose() * W.col(i);
        dirs.push_back(q.normalized());
    }
    return dirs;
}

Vec axis_vec(int n, double coord) {
    Vec v = Vec::Zero(n);
    v(0) = coord;
    return v;
}

}  // namespace

MaeharaParameters maehara_parameters(int n, const Tolerance&) {
    if (n < 4) throw std::invalid_argument("maehara_parameters: the conjecture holds for n <= 3");
    MaeharaParameters P;
    P.n = n;
    P.m = n - 1;

    double lo = 1e-9, hi = 1.0 - 1e-9;
    if (P.m == 3) {
        // g_3 >= 0 with a tangential root at 1/2: bisect the derivative
        lo = 0.25;
        hi = 0.75;
        for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
            const double mid = 0.5 * (lo + hi);
            (g_m_deriv(3, mid) < 0.0 ? lo : hi) = mid;
        }
        P.t_star = 0.5 * (lo + hi);
    } else {
        if (!(g_m(P.m, lo) < 0.0 && g_m(P.m, hi) > 0.0))
            throw TheoremViolation("maehara_parameters: endpoint signs of g_m are wrong");
        for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
            const double mid = 0.5 * (lo + hi);
            (g_m(P.m, mid) < 0.0 ? lo : hi) = mid;
        }
        P.t_star = 0.5 * (lo + hi);
    }

    const double t = P.t_star;
    const double s = std::sqrt(1.0 + t);
    const double Q = std::sqrt(P.m * P.m + 1.0 - (P.m * P.m - 1.0) * t);
    P.r = s * (Q + s) / (P.m * P.m);
    P.d = std::abs(P.r - t);

    // geometry: apex b on the axis, base simplex in the hyperplane x1 = t
    P.apex = axis_vec(n, 1.0);
    const double ring = std::sqrt(std::max(0.0, 1.0 - t * t));
    for (const Vec& q : regular_simplex_directions(P.m)) {
        Vec v = Vec::Zero(n);
        v(0) = t;
        v.tail(n - 1) = ring * q;
        P.base.push_back(v);
    }
    P.tangent_center = axis_vec(n, t - P.r);

    // recompute the tangent distance from an actual side facet
    {
        std::vector<Vec> pts = {P.apex};
        for (size_t i = 1; i < P.base.size(); ++i) pts.push_back(P.base[i]);
        Mat D(n, n - 1);
        for (int i = 0; i < n - 1; ++i) D.col(i) = pts[i + 1] - pts[0];
        Eigen::JacobiSVD<Mat> svd(D, Eigen::ComputeFullU);
        Vec normal = svd.matrixU().col(n - 1);
        P.r_geometric = std::abs((P.tangent_center - pts[0]).dot(normal));
    }
    return P;
}

Vec invert(const Vec& x, const Vec& center, double r) {
    const Vec d = x - center;
    const double n2 = d.squaredNorm();
    if (n2 <= 1e-300) throw std::invalid_argument("invert: point at the inversion center");
    return center + (r * r / n2) * d;
}

MaeharaFamily maehara_family(int n, const Tolerance& tol) {
    MaeharaParameters P = maehara_parameters(n, tol);
    MaeharaFamily F;
    const Vec c = P.tangent_center;
    const double r = P.r;

    // all n+1 simplex vertices; facet i is opposite vertex i
    std::vector<Vec> verts = {P.apex};
    for (const Vec& b : P.base) verts.push_back(b);
    const int nv = static_cast<int>(verts.size());

    // image of the circumsphere S(o,1) under inversion about S(c, r)
    {
        const double delta2 = c.squaredNorm() - 1.0;  // |c - o|^2 - R^2, negative here
        const Vec ic = c + (r * r / delta2) * (Vec::Zero(n) - c);
        const double ir = r * r / std::abs(delta2);
        F.spheres.push_back({ic, ir});
    }
    // images of the n+1 facet hyperplanes (each tangent to S(c,r))
    for (int i = 0; i < nv; ++i) {
        Mat D(n, n - 1);
        int col = 0;
        int base_idx = -1;
        for (int j = 0; j < nv; ++j) {
            if (j == i) continue;
            if (base_idx < 0) { base_idx = j; continue; }
            D.col(col++) = verts[j] - verts[base_idx];
        }
        Eigen::JacobiSVD<Mat> svd(D, Eigen::ComputeFullU);
        Vec normal = svd.matrixU().col(n - 1);
        double delta = (verts[base_idx] - c).dot(normal);  // signed distance of the plane
        if (std::abs(std::abs(delta) - r) > 1e-8)
            throw TheoremViolation("maehara_family: facet plane is not tangent to S(c,r)");
        const Vec ic = c + (r * r / (2.0 * delta)) * normal;
        F.spheres.push_back({ic, r * r / (2.0 * std::abs(delta))});
    }

    // rescale by 2/r to unit spheres
    for (auto& s : F.spheres) {
        if (std::abs(s.radius - r / 2.0) > 1e-8)
            throw TheoremViolation("maehara_family: an image sphere does not have radius r/2");
        s.center = (2.0 / r) * s.center;
        s.radius = 1.0;
    }

    // leave-one-out common points
    F.loo_points.resize(F.spheres.size());
    F.loo_points[0] = (2.0 / r) * c;  // on every hyperplane image
    for (int i = 0; i < nv; ++i)
        F.loo_points[i + 1] = (2.0 / r) * invert(verts[i], c, r);

    F.max_loo_residual = 0.0;
    for (size_t omit = 0; omit < F.spheres.size(); ++omit) {
        for (size_t j = 0; j < F.spheres.size(); ++j) {
            if (j == omit) continue;
            const double res =
                std::abs((F.loo_points[omit] - F.spheres[j].center).norm() - 1.0);
            F.max_loo_residual = std::max(F.max_loo_residual, res);
        }
    }

    // full intersection should be empty
    F.full_intersection_empty = core::intersect_spheres(F.spheres, tol).is_empty();

    // rigorous residual lower bound from the radical system: if some x had
    // max_i | |x - c_i| - 1 | = eta <= 1 then the radical rows would be
    // satisfied within 6*eta, so eta >= dist(b, range A) / (6 sqrt(#rows))
    {
        const int rows = static_cast<int>(F.spheres.size()) - 1;
        Mat A(rows, n);
        Vec b(rows);
        const Vec& c0 = F.spheres[0].center;
        for (int i = 0; i < rows; ++i) {
            const Vec& ci = F.spheres[i + 1].center;
            A.row(i) = 2.0 * (ci - c0).transpose();
            b(i) = ci.squaredNorm() - c0.squaredNorm();
        }
        Vec x_ls = A.colPivHouseholderQr().solve(b);
        const double dist = (A * x_ls - b).norm();
        F.infeasibility_margin = dist / (6.0 * std::sqrt(static_cast<double>(rows)));
    }
    return F;
}

// -- Kneser-Poulsen -------------------------------------------------------------

KPReport kp_experiments(std::span<const Vec> X, std::span<const Vec> Y,
                        const Tolerance& tol) {
    if (X.empty() || Y.empty()) throw std::invalid_argument("kp_experiments: empty center list");
    for (const Vec& p : X)
        if (p.size() != 2) throw std::invalid_argument("kp_experiments: planar only");
    if (X.size() != Y.size())
        throw InvalidPair("kp_experiments: X and Y must correspond by index");
    for (size_t i = 0; i < X.size(); ++i)
        for (size_t j = i + 1; j < X.size(); ++j)
            if ((Y[i] - Y[j]).norm() > (X[i] - X[j]).norm() + tol.eps_geom)
                throw InvalidPair("kp_experiments: Y is not a contraction of X");

    auto cbx = core::circumball(X, tol);
    if (cbx.radius > 1.0 + tol.eps_geom)
        throw std::invalid_argument("kp_experiments: crr(X) > 1");
    auto cby = core::circumball(Y, tol);

    KPReport R;
    R.inradius_x = 1.0 - cbx.radius;
    R.inradius_y = 1.0 - cby.radius;
    R.inradius_ok = R.inradius_y >= R.inradius_x - 1e-9;
    R.circumradius_delta = cby.radius - cbx.radius;

    auto PX = diskpoly::build_disk_polygon(X, tol);
    auto PY = diskpoly::build_disk_polygon(Y, tol);
    R.diameter_delta = diskpoly::diameter(PY) - diskpoly::diameter(PX);
    R.width_delta = diskpoly::min_width(PY) - diskpoly::min_width(PX);
    return R;
}

double inscribed_disk_radius(std::span<const Vec> centers, const Tolerance& tol) {
    auto cb = core::circumball(centers, tol);
    auto value = [&](const Vec& q) {
        double m = std::numeric_limits<double>::infinity();
        for (const Vec& c : centers) m = std::min(m, 1.0 - (q - c).norm());
        return m;
    };
    // multi-scale grid, then Nelder-Mead polish (the objective is concave)
    Vec best = cb.center;
    double bval = value(best);
    double h = 0.6;
    for (int level = 0; level < 6; ++level) {
        const int G = 17;
        Vec center = best;
        for (int i = 0; i < G; ++i)
            for (int j = 0; j < G; ++j) {
                Vec q = center + vec2(h * (2.0 * i / (G - 1) - 1.0),
                                      h * (2.0 * j / (G - 1) - 1.0));
                const double v = value(q);
                if (v > bval) { bval = v; best = q; }
            }
        h *= 0.25;
    }
    // Nelder-Mead in 2D
    std::vector<std::pair<double, Vec>> simplex = {
        {value(best), best},
        {value(best + vec2(1e-4, 0)), best + vec2(1e-4, 0)},
        {value(best + vec2(0, 1e-4)), best + vec2(0, 1e-4)}};
    for (int it = 0; it < 400; ++it) {
        std::sort(simplex.begin(), simplex.end(),
                  [](const auto& a, const auto& b) { return a.first > b.first; });
        const Vec centroid = 0.5 * (simplex[0].second + simplex[1].second);
        const Vec worst = simplex[2].second;
        Vec refl = centroid + (centroid - worst);
        double fr = value(refl);
        if (fr > simplex[0].first) {
            Vec exp = centroid + 2.0 * (centroid - worst);
            double fe = value(exp);
            simplex[2] = fe > fr ? std::make_pair(fe, exp) : std::make_pair(fr, refl);
        } else if (fr > simplex[1].first) {
            simplex[2] = {fr, refl};
        } else {
            Vec con = centroid + 0.5 * (worst - centroid);
            double fc = value(con);
            if (fc > simplex[2].first) {
                simplex[2] = {fc, con};
            } else {
                for (int i = 1; i < 3; ++i) {
                    simplex[i].second = simplex[0].second +
                                        0.5 * (simplex[i].second - simplex[0].second);
                    simplex[i].first = value(simplex[i].second);
                }
            }
        }
        if ((simplex[0].second - simplex[2].second).norm() < 1e-13) break;
    }
    std::sort(simplex.begin(), simplex.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    return std::max(bval, simplex[0].first);
}

}  // namespace ballpoly::constructions
