#include "ballpoly/illumination.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>

#include "ballpoly/bp3.hpp"
#include "ballpoly/core.hpp"

namespace ballpoly::illumination {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTau = 2.0 * kPi;

Vec cross(const Vec& a, const Vec& b) {
    return vec3(a(1) * b(2) - a(2) * b(1), a(2) * b(0) - a(0) * b(2),
                a(0) * b(1) - a(1) * b(0));
}

double diam(std::span<const Vec> X) {
    double d = 0.0;
    for (size_t i = 0; i < X.size(); ++i)
        for (size_t j = i + 1; j < X.size(); ++j)
            d = std::max(d, (X[i] - X[j]).norm());
    return d;
}

// the +-dir pair illuminates at a point whose Gauss image is spanned by
// `gens` iff all generators have the same strict sign against dir
bool pair_misses(const std::vector<Vec>& gens, const Vec& dir, double band) {
    bool all_pos = true, all_neg = true;
    for (const Vec& g : gens) {
        const double ip = g.dot(dir);
        if (ip <= band) all_pos = false;
        if (ip >= -band) all_neg = false;
    }
    return all_pos || all_neg;
}

bool point_illuminated(const std::vector<Vec>& gens, const Frame& f, double band) {
    return pair_misses(gens, f.u, band) || pair_misses(gens, f.v, band) ||
           pair_misses(gens, f.w, band);
}

}  // namespace

Frame make_frame(const Vec& u, const Vec& v, const Tolerance& tol) {
    Frame f;
    f.u = u.normalized();
    Vec vv = v - v.dot(f.u) * f.u;
    if (vv.norm() <= tol.eps_geom)
        throw std::invalid_argument("make_frame: v parallel to u");
    f.v = vv.normalized();
    f.w = cross(f.u, f.v);
    return f;
}

GaussImage gauss_image(std::span<const Vec> X, const Vec& z, const Tolerance& tol) {
    if (diam(X) > 1.0 + 1e2 * tol.eps_geom)
        throw std::invalid_argument("gauss_image: diam(X) must be at most 1");
    GaussImage G;
    double maxd = 0.0, chord = 0.0;
    for (const Vec& x : X) {
        const double d = (x - z).norm();
        maxd = std::max(maxd, d);
        if (d > 1.0 + 1e2 * tol.eps_geom)
            throw std::invalid_argument("gauss_image: z outside B[X]");
        if (d >= 1.0 - 1e2 * tol.eps_geom) G.generators.push_back(x - z);
    }
    if (G.generators.empty())
        throw std::invalid_argument("gauss_image: z is not a boundary point");
    for (size_t i = 0; i < G.generators.size(); ++i)
        for (size_t j = i + 1; j < G.generators.size(); ++j)
            chord = std::max(chord, (G.generators[i] - G.generators[j]).norm());
    G.spherical_diameter = 2.0 * std::asin(std::clamp(chord / 2.0, 0.0, 1.0));
    G.stratum = G.generators.size() >= 3   ? GaussImage::Stratum::Vertex
                : G.generators.size() == 2 ? GaussImage::Stratum::EdgePoint
                                           : GaussImage::Stratum::FacePoint;
    return G;
}

IlluminationResult illuminates_frame(std::span<const Vec> X, const Frame& f,
                                     const Tolerance& tol) {
    if (X.empty()) throw std::invalid_argument("illuminates_frame: empty X");
    if (diam(X) > 1.0 + 1e2 * tol.eps_geom)
        throw std::invalid_argument("illuminates_frame: diam(X) must be at most 1");
    const double band = tol.eps_geom;

    IlluminationResult R;
    R.illuminated = true;
    auto body = bp3::boundary_structure(X, tol);
    if (body.kind != bp3::BallPolyhedron3::Kind::Body &&
        body.kind != bp3::BallPolyhedron3::Kind::SingleBall)
        throw std::invalid_argument("illuminates_frame: degenerate body");
    if (body.kind == bp3::BallPolyhedron3::Kind::SingleBall)
        return R;  // single-generator images everywhere

    // vertices: exact sign tests on the generator sets
    for (const auto& v : body.vertices) {
        std::vector<Vec> gens;
        for (int s : v.spheres) gens.push_back(body.centers[s] - v.pos);
        if (!point_illuminated(gens, f, band)) {
            R.illuminated = false;
            R.witnesses.push_back({v.pos, "vertex"});
        }
    }

    // edges and seams: partition by the sign-change angles of the six
    // sinusoids <x_c - z(theta), dir>
    auto check_arc = [&](const Vec& m, double rho, const Vec& au, const Vec& av,
                         int s1, int s2, double lo, double hi, const char* name) {
        std::vector<double> cuts = {lo, hi};
        for (int c : {s1, s2}) {
            for (const Vec* dir : {&f.u, &f.v, &f.w}) {
                const double B = rho * au.dot(*dir);
                const double C = rho * av.dot(*dir);
                const double Rm = std::hypot(B, C);
                if (Rm <= 1e-15) continue;
                const double rhs = (body.centers[c] - m).dot(*dir) / Rm;
                if (std::abs(rhs) > 1.0) continue;
                const double phi = std::atan2(C, B);
                const double acv = std::acos(std::clamp(rhs, -1.0, 1.0));
                for (double root : {phi + acv, phi - acv}) {
                    for (int k = -2; k <= 2; ++k) {
                        const double t = root + k * kTau;
                        if (t > lo + 1e-12 && t < hi - 1e-12) cuts.push_back(t);
                    }
                }
            }
        }
        std::sort(cuts.begin(), cuts.end());
        auto probe = [&](double theta) {
            const Vec z = m + rho * (std::cos(theta) * au + std::sin(theta) * av);
            std::vector<Vec> gens = {body.centers[s1] - z, body.centers[s2] - z};
            if (!point_illuminated(gens, f, band)) {
                R.illuminated = false;
                R.witnesses.push_back({z, name});
                return false;
            }
            return true;
        };
        // subinterval midpoints carry the constant-sign checks; the partition
        // angles themselves are probed too (a two-generator sub-image that
        // meets all three circles blocks the full image as well)
        for (size_t i = 0; i + 1 < cuts.size(); ++i)
            if (cuts[i + 1] - cuts[i] > 1e-12 && !probe(0.5 * (cuts[i] + cuts[i + 1])))
                return;
        for (double t : cuts)
            if (!probe(t)) return;
    };

    for (const auto& e : body.edges)
        check_arc(e.ccenter, e.cradius, e.u, e.v, e.s1, e.s2, e.mid - e.half,
                  e.mid + e.half, "edge");
    for (const auto& s : body.seams)
        check_arc(s.ccenter, s.cradius, s.u, s.v, s.s1, s.s2, 0.0, kTau, "seam");

    return R;
}

Frame find_frame(std::span<const Vec> X, const Vec& u, int sweep, const Tolerance& tol) {
    Vec un = u.normalized();
    Vec t = std::abs(un(0)) < 0.9 ? vec3(1, 0, 0) : vec3(0, 1, 0);
    const Vec v0 = cross(un, t).normalized();
    const Vec w0 = cross(un, v0);
    std::vector<double> failed;
    auto try_angle = [&](double phi) -> std::optional<Frame> {
        Frame f;
        f.u = un;
        f.v = std::cos(phi) * v0 + std::sin(phi) * w0;
        f.w = cross(f.u, f.v);
        if (illuminates_frame(X, f, tol).illuminated) return f;
        failed.push_back(phi);
        return std::nullopt;
    };
    // the six-direction set has period pi/2 in the rotation angle
    for (int j = 0; j < sweep; ++j) {
        if (auto f = try_angle((j + 0.382) * (kPi / 2.0) / sweep)) return *f;
    }
    // blocked angles are finite: probe the largest gaps between failures
    std::sort(failed.begin(), failed.end());
    for (int round = 0; round < 8; ++round) {
        double best_gap = -1.0, best_mid = 0.0;
        for (size_t i = 0; i < failed.size(); ++i) {
            const double a = failed[i];
            const double b = (i + 1 < failed.size()) ? failed[i + 1] : failed[0] + kPi / 2.0;
            if (b - a > best_gap) {
                best_gap = b - a;
                best_mid = 0.5 * (a + b);
            }
        }
        if (auto f = try_angle(best_mid)) return *f;
        std::sort(failed.begin(), failed.end());
    }
    throw TheoremViolation("find_frame: no illuminating frame found in the sweep");
}

FrameExperiment random_frame_experiment(std::span<const Vec> X, int trials,
                                        unsigned seed, const Tolerance& tol) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    FrameExperiment E;
    E.trials = trials;
    for (int t = 0; t < trials; ++t) {
        Mat M(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) M(i, j) = gauss(rng);
        Eigen::HouseholderQR<Mat> qr(M);
        Mat Q = qr.householderQ();
        Frame f;
        f.u = Q.col(0);
        f.v = Q.col(1);
        f.w = Q.col(2);
        if (illuminates_frame(X, f, tol).illuminated)
            ++E.successes;
        else
            E.failures.push_back(f);
    }
    E.ratio = static_cast<double>(E.successes) / std::max(1, trials);
    return E;
}

bool ray_illuminates(std::span<const Vec> X, const Vec& z, const Vec& d,
                     const Tolerance&) {
    const Vec dn = d.normalized();
    for (double t : {1e-5, 1e-4, 1e-3, 1e-2, 5e-2}) {
        const Vec p = z + t * dn;
        bool interior = true;
        for (const Vec& x : X)
            if ((p - x).norm() >= 1.0 - 1e-12) { interior = false; break; }
        if (interior) return true;
    }
    return false;
}

}  // namespace ballpoly::illumination
