// Acceptance suite: runs every top-level criterion at its stated tolerance
// and prints one pass/fail line each. Exit code = number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "ballpoly/bp3.hpp"
#include "ballpoly/constructions.hpp"
#include "ballpoly/core.hpp"
#include "ballpoly/diskpoly.hpp"
#include "ballpoly/hull.hpp"
#include "ballpoly/illumination.hpp"
#include "ballpoly/separation.hpp"

using namespace ballpoly;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Runner {
    int failures = 0;
    template <typename F>
    void criterion(int id, const char* label, double time_limit_s, F f) {
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        std::string detail;
        try {
            ok = f(detail);
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        const double dt =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (dt > time_limit_s) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + std::string("over time limit");
        }
        std::printf("[%s] criterion %d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", id, label,
                    dt, detail.empty() ? "" : " -- ", detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
};

Vec polar(double r, double t) { return vec2(r * std::cos(t), r * std::sin(t)); }

std::vector<Vec> tetra_centers(double edge = 1.0) {
    const double s = edge / (2.0 * std::sqrt(2.0));
    return {vec3(s, s, s), vec3(s, -s, -s), vec3(-s, s, -s), vec3(-s, -s, s)};
}

std::vector<Vec> random_diameter_one(int k, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<Vec> X;
    for (int i = 0; i < k; ++i) X.push_back(vec3(g(rng), g(rng), g(rng)));
    double d = 0.0;
    for (size_t i = 0; i < X.size(); ++i)
        for (size_t j = i + 1; j < X.size(); ++j) d = std::max(d, (X[i] - X[j]).norm());
    if (d > 0)
        for (Vec& x : X) x *= (1.0 - 1e-9) / d;
    return X;
}

double grid_oracle_radius(const std::vector<Vec>& A, const std::vector<Vec>& B) {
    const int n = static_cast<int>(A[0].size());
    Vec lo = A[0], hi = A[0];
    for (const Vec& p : A) { lo = lo.cwiseMin(p); hi = hi.cwiseMax(p); }
    for (const Vec& p : B) { lo = lo.cwiseMin(p); hi = hi.cwiseMax(p); }
    lo.array() -= 1.0;
    hi.array() += 1.0;
    auto radius_at = [&](const Vec& c) -> double {
        double ra = 0.0, rb = std::numeric_limits<double>::infinity();
        for (const Vec& a : A) ra = std::max(ra, (a - c).norm());
        for (const Vec& b : B) rb = std::min(rb, (b - c).norm());
        return ra <= rb + 1e-12 ? ra : std::numeric_limits<double>::infinity();
    };
    Vec best = 0.5 * (lo + hi);
    double bv = std::numeric_limits<double>::infinity();
    const int C = 22;
    for (int i = 0; i < C; ++i)
        for (int j = 0; j < C; ++j)
            for (int k = 0; k < (n == 3 ? C : 1); ++k) {
                Vec c(n);
                c(0) = lo(0) + (hi(0) - lo(0)) * i / (C - 1);
                c(1) = lo(1) + (hi(1) - lo(1)) * j / (C - 1);
                if (n == 3) c(2) = lo(2) + (hi(2) - lo(2)) * k / (C - 1);
                const double v = radius_at(c);
                if (v < bv) { bv = v; best = c; }
            }
    double h = (hi - lo).maxCoeff() / 2.0;
    const int G = 11;
    for (int level = 0; level < 14; ++level) {
        Vec center = best;
        for (int i = 0; i < G; ++i)
            for (int j = 0; j < G; ++j)
                for (int k = 0; k < (n == 3 ? G : 1); ++k) {
                    Vec c = center;
                    c(0) += h * (2.0 * i / (G - 1) - 1.0);
                    c(1) += h * (2.0 * j / (G - 1) - 1.0);
                    if (n == 3) c(2) += h * (2.0 * k / (G - 1) - 1.0);
                    const double v = radius_at(c);
                    if (v < bv) { bv = v; best = c; }
                }
        h *= 0.4;
    }
    // exact-penalty Nelder-Mead polish around the grid optimum
    auto pen = [&](const Vec& c) {
        double ra = 0.0, rb = std::numeric_limits<double>::infinity();
        for (const Vec& a : A) ra = std::max(ra, (a - c).norm());
        for (const Vec& b : B) rb = std::min(rb, (b - c).norm());
        return ra + 100.0 * std::max(0.0, ra - rb);
    };
    for (double s : {1e-2, 1e-4, 1e-6}) {
        std::vector<std::pair<double, Vec>> simplex;
        simplex.push_back({pen(best), best});
        for (int i = 0; i < n; ++i) {
            Vec x = best;
            x(i) += s;
            simplex.push_back({pen(x), x});
        }
        for (int it = 0; it < 400; ++it) {
            std::sort(simplex.begin(), simplex.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            Vec centroid = Vec::Zero(n);
            for (int i = 0; i < n; ++i) centroid += simplex[i].second;
            centroid /= n;
            const Vec& worst = simplex[n].second;
            Vec refl = centroid + (centroid - worst);
            const double fr = pen(refl);
            if (fr < simplex[0].first) {
                Vec ex = centroid + 2.0 * (centroid - worst);
                const double fe = pen(ex);
                simplex[n] = fe < fr ? std::make_pair(fe, ex) : std::make_pair(fr, refl);
            } else if (fr < simplex[n - 1].first) {
                simplex[n] = {fr, refl};
            } else {
                Vec con = centroid + 0.5 * (worst - centroid);
                const double fc = pen(con);
                if (fc < simplex[n].first) {
                    simplex[n] = {fc, con};
                } else {
                    for (int i = 1; i <= n; ++i) {
                        simplex[i].second = simplex[0].second +
                                            0.5 * (simplex[i].second - simplex[0].second);
                        simplex[i].first = pen(simplex[i].second);
                    }
                }
            }
            if ((simplex[0].second - simplex[n].second).norm() < 1e-14) break;
        }
        std::sort(simplex.begin(), simplex.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        best = simplex[0].second;
        double ra = 0.0, rb = std::numeric_limits<double>::infinity();
        for (const Vec& a : A) ra = std::max(ra, (a - best).norm());
        for (const Vec& b : B) rb = std::min(rb, (b - best).norm());
        if (ra <= rb + 1e-6 && ra < bv) bv = ra;
    }
    return bv;
}

}  // namespace

int main() {
    Runner R;

    R.criterion(1, "Maehara counterexample family (n=4,5,6)", 5.0, [](std::string& why) {
        auto P4 = constructions::maehara_parameters(4);
        if (std::abs(P4.t_star - 0.5) > 1e-12) {
            why = "t_star for n=4 is off";
            return false;
        }
        for (int n : {4, 5, 6}) {
            auto F = constructions::maehara_family(n);
            if (static_cast<int>(F.spheres.size()) != n + 2) { why = "sphere count"; return false; }
            if (F.max_loo_residual >= 1e-8) { why = "leave-one-out residual too large"; return false; }
            if (!F.full_intersection_empty) { why = "full intersection not empty"; return false; }
            if (F.infeasibility_margin <= 1e-6) { why = "infeasibility margin too small"; return false; }
        }
        return true;
    });

    R.criterion(2, "Titeica circumradius over 1000 random triples", 2.0, [](std::string& why) {
        std::mt19937_64 rng(2);
        std::uniform_real_distribution<double> ut(0.0, 2 * kPi), up(-1.0, 1.0);
        int done = 0;
        while (done < 1000) {
            const Vec p = vec2(up(rng), up(rng));
            const double a = ut(rng), b = ut(rng), c = ut(rng);
            try {
                auto res = constructions::titeica_check(
                    p + vec2(std::cos(a), std::sin(a)), p + vec2(std::cos(b), std::sin(b)),
                    p + vec2(std::cos(c), std::sin(c)), p);
                if (res.deviation >= 1e-9) {
                    why = "deviation " + std::to_string(res.deviation);
                    return false;
                }
                ++done;
            } catch (const constructions::Degenerate&) {
            }
        }
        return true;
    });

    R.criterion(3, "Euler-Poincare on standard 3D bodies", 30.0, [](std::string& why) {
        auto check = [&](const bp3::BallPolyhedron3& body) {
            auto g = bp3::euler_and_graph_checks(body);
            return g.standard && g.V - g.E + g.F == 2;
        };
        if (!check(bp3::boundary_structure(tetra_centers()))) { why = "tetra"; return false; }
        auto cube = bp3::approximate_polyhedron(bp3::make_cube(std::sqrt(3.0)), 20.0);
        if (!check(cube.body)) { why = "cube approximand"; return false; }
        auto octa = bp3::approximate_polyhedron(bp3::make_octahedron(1.0), 10.0);
        if (!check(octa.body)) { why = "octa approximand"; return false; }
        // randomized standard bodies from perturbed fixtures
        std::mt19937_64 rng(3);
        std::uniform_real_distribution<double> noise(-0.02, 0.02);
        int standard = 0, tried = 0;
        while (standard < 50 && tried < 300) {
            ++tried;
            std::vector<Vec> centers;
            if (tried % 2 == 0) {
                centers = tetra_centers();
            } else {
                centers = cube.body.centers;
            }
            for (auto& c : centers) c += vec3(noise(rng), noise(rng), noise(rng));
            try {
                auto body = bp3::boundary_structure(centers);
                if (body.kind != bp3::BallPolyhedron3::Kind::Body) continue;
                auto g = bp3::euler_and_graph_checks(body);
                if (!g.standard) continue;
                if (g.V - g.E + g.F != 2) { why = "chi != 2 on a perturbed body"; return false; }
                ++standard;
            } catch (const DegenerateConfiguration&) {
            }
        }
        if (standard < 50) { why = "fewer than 50 standard perturbed bodies"; return false; }
        return true;
    });

    R.criterion(4, "edge-graph: simple, planar, 3-connected", 10.0, [](std::string& why) {
        std::vector<bp3::BallPolyhedron3> fixtures;
        fixtures.push_back(bp3::boundary_structure(tetra_centers()));
        fixtures.push_back(
            bp3::approximate_polyhedron(bp3::make_cube(std::sqrt(3.0)), 20.0).body);
        fixtures.push_back(bp3::approximate_polyhedron(bp3::make_octahedron(1.0), 10.0).body);
        for (const auto& body : fixtures) {
            auto g = bp3::euler_and_graph_checks(body);
            if (!(g.standard && g.simple && g.planar && g.three_connected)) {
                why = "a standard fixture failed a graph property";
                return false;
            }
        }
        // negative fixture: the 3-ball body has parallel edges
        std::vector<Vec> triple = {vec3(0, 0, 0), vec3(1, 0, 0),
                                   vec3(0.5, std::sqrt(3.0) / 2.0, 0)};
        auto g = bp3::euler_and_graph_checks(bp3::boundary_structure(triple));
        if (g.simple || g.standard) { why = "3-ball body unexpectedly simple"; return false; }
        return true;
    });

    R.criterion(5, "Dowker tables and extremal searches", 60.0, [](std::string& why) {
        for (double r : {0.3, 0.5, 0.8}) {
            auto T = diskpoly::dowker_table(r, 4, 8);
            for (const auto& row : T.inscribed_perimeter)
                if (!(row.combo < -1e-10)) { why = "inscribed perimeter concavity"; return false; }
            for (const auto& row : T.circumscribed_area)
                if (!(row.combo > 1e-10)) { why = "circumscribed area convexity"; return false; }
            for (const auto& row : T.circumscribed_perimeter)
                if (!(row.combo > 1e-10)) { why = "circumscribed perimeter convexity"; return false; }
            for (const auto& row : T.inscribed_area)
                if (!row.conjecture_only && !(row.combo < -1e-10)) {
                    why = "odd-n inscribed area concavity";
                    return false;
                }
            for (int n = 4; n <= 8; ++n) {
                auto fam_i = diskpoly::regular_family(n, r, diskpoly::FamilyKind::Inscribed);
                auto per = diskpoly::extremal_search(n, r, diskpoly::FamilyKind::Inscribed,
                                                     diskpoly::Objective::Perimeter,
                                                     diskpoly::Sense::Max, 32, 5);
                if (per.value > fam_i.perimeter + 1e-6) { why = "optimizer beat the closed form"; return false; }
                auto area = diskpoly::extremal_search(n, r, diskpoly::FamilyKind::Inscribed,
                                                      diskpoly::Objective::Area,
                                                      diskpoly::Sense::Max, 32, 6);
                if (area.value > fam_i.area + 1e-6) { why = "optimizer beat the closed form"; return false; }
                auto fam_c = diskpoly::regular_family(n, r, diskpoly::FamilyKind::Circumscribed);
                auto carea = diskpoly::extremal_search(n, r, diskpoly::FamilyKind::Circumscribed,
                                                       diskpoly::Objective::Area,
                                                       diskpoly::Sense::Min, 32, 7);
                if (carea.value < fam_c.area - 1e-6) { why = "optimizer beat the closed form"; return false; }
                auto cper = diskpoly::extremal_search(n, r, diskpoly::FamilyKind::Circumscribed,
                                                      diskpoly::Objective::Perimeter,
                                                      diskpoly::Sense::Min, 32, 8);
                if (cper.value < fam_c.perimeter - 1e-6) { why = "optimizer beat the closed form"; return false; }
            }
        }
        return true;
    });

    R.criterion(6, "Kneser-Poulsen anchors and inradius monotonicity", 10.0,
                [](std::string& why) {
        const Vec o = vec2(0, 0);
        auto R1 = constructions::kp_experiments(
            std::vector<Vec>{o, polar(0.5, kPi / 3), polar(0.5, -kPi / 3)},
            std::vector<Vec>{o, polar(0.5, kPi / 4), polar(0.5, -kPi / 4)});
        if (!(R1.diameter_delta < 0.0 && R1.circumradius_delta < 0.0)) {
            why = "diameter/circumradius did not strictly decrease";
            return false;
        }
        auto R2 = constructions::kp_experiments(
            std::vector<Vec>{o, polar(0.8, kPi / 10), polar(0.8, -kPi / 10)},
            std::vector<Vec>{o, polar(0.8, 0.0), polar(0.8, 0.0)});
        if (!(R2.width_delta < 0.0)) { why = "width did not strictly decrease"; return false; }
        std::mt19937_64 rng(6);
        std::uniform_real_distribution<double> un(-0.4, 0.4), us(0.3, 1.0), ut(0.0, 2 * kPi);
        for (int t = 0; t < 1000; ++t) {
            std::vector<Vec> X, Y;
            const int N = 2 + static_cast<int>(rng() % 4);
            const double s = us(rng), a = ut(rng);
            Mat Rot(2, 2);
            Rot << std::cos(a), -std::sin(a), std::sin(a), std::cos(a);
            for (int i = 0; i < N; ++i) {
                X.push_back(vec2(un(rng), un(rng)));
                Y.push_back(s * (Rot * X.back()));
            }
            auto rep = constructions::kp_experiments(X, Y);
            if (!rep.inradius_ok) { why = "inradius decreased under contraction"; return false; }
            // identity cross-check against the direct inscribed disk
            const double direct = constructions::inscribed_disk_radius(X);
            if (std::abs(direct - rep.inradius_x) > 1e-8) {
                why = "r + R = 1 identity mismatch";
                return false;
            }
        }
        return true;
    });

    R.criterion(7, "separation solver vs oracle, Kirchberger", 60.0, [](std::string& why) {
        std::mt19937_64 rng(7);
        std::normal_distribution<double> g(0.0, 1.0);
        std::uniform_real_distribution<double> ur(0.5, 1.5);
        for (int t = 0; t < 100; ++t) {
            const int n = (t % 2) ? 3 : 2;
            const double r0 = ur(rng);
            Vec c0(n);
            for (int d = 0; d < n; ++d) c0(d) = 0.3 * g(rng);
            std::vector<Vec> A, B;
            for (int i = 0; i < 4 + static_cast<int>(rng() % 3); ++i) {
                Vec p(n);
                for (int d = 0; d < n; ++d) p(d) = g(rng);
                A.push_back(c0 + 0.85 * r0 * p / std::max(1.0, p.norm()));
            }
            for (int i = 0; i < 4 + static_cast<int>(rng() % 3); ++i) {
                Vec p(n);
                for (int d = 0; d < n; ++d) p(d) = g(rng);
                p.normalize();
                B.push_back(c0 + (1.15 + 0.8 * ur(rng)) * r0 * p);
            }
            auto res = separation::smallest_separating_sphere(A, B);
            if (!res) { why = "solver reported infeasible"; return false; }
            if (static_cast<int>(res->active.size()) > n + 2) { why = "active set too large"; return false; }
            const double oracle = grid_oracle_radius(A, B);
            if (std::abs(res->radius - oracle) > 1e-5) {
                why = "radius disagrees with the grid oracle by " +
                      std::to_string(std::abs(res->radius - oracle));
                return false;
            }
        }
        // Kirchberger confirmation on 50 separable instances
        int confirmed = 0;
        while (confirmed < 50) {
            std::vector<Vec> A, B;
            Vec c0 = vec2(0.2 * g(rng), 0.2 * g(rng));
            for (int i = 0; i < 4; ++i) {
                Vec p = vec2(g(rng), g(rng));
                A.push_back(c0 + 0.4 * p / std::max(1.0, p.norm()));
            }
            for (int i = 0; i < 5; ++i) {
                Vec p = vec2(g(rng), g(rng)).normalized();
                B.push_back(c0 + (0.85 + 0.5 * std::abs(g(rng))) * p);
            }
            auto v = separation::kirchberger_verdict(A, B);
            if (v.verdict != separation::KirchbergerVerdict::SeparableByCapRadius1) {
                why = "a separable instance was not confirmed";
                return false;
            }
            ++confirmed;
        }
        // the unit-sphere counterexample behaves as constructed
        auto CE = separation::kirchberger_counterexample(0.5, 0.25, 10000, 1);
        if (!(CE.ball_covered && CE.covering_minimal && CE.a_in_conv_B && !CE.unit_separable)) {
            why = "counterexample verification failed";
            return false;
        }
        for (size_t skip = 0; skip < CE.B.size(); ++skip) {
            std::vector<Vec> sub;
            for (size_t j = 0; j < CE.B.size(); ++j)
                if (j != skip) sub.push_back(CE.B[j]);
            if (!separation::unit_separation_center(CE.a, sub, 30000, 40 + skip)) {
                why = "a small subset was not unit-separable";
                return false;
            }
        }
        return true;
    });

    R.criterion(8, "trichotomy, hull oracles, Caratheodory bounds", 30.0,
                [](std::string& why) {
        std::mt19937_64 rng(8);
        std::uniform_real_distribution<double> un(-0.7, 0.7);
        for (int t = 0; t < 10000; ++t) {
            const Vec a = vec2(un(rng), un(rng)), b = vec2(un(rng), un(rng)),
                      c = vec2(un(rng), un(rng));
            const auto cls = core::classify_arc_triangle(a, b, c);
            const bool in_open = core::spindle_contains(a, c, b, false);
            const bool in_closed = core::spindle_contains(a, c, b, true);
            const bool ok = (cls == core::TriangleOrder::Less && in_open) ||
                            (cls == core::TriangleOrder::Greater && !in_closed) ||
                            (cls == core::TriangleOrder::Equal && in_closed);
            if (!ok) { why = "trichotomy disagrees with spindle membership"; return false; }
        }
        std::uniform_real_distribution<double> uh(-0.45, 0.45);
        int oracle_pairs = 0;
        while (oracle_pairs < 1000) {
            std::vector<Vec> X;
            const int N = 2 + static_cast<int>(rng() % 6);
            for (int i = 0; i < N; ++i) X.push_back(vec2(uh(rng), uh(rng)));
            auto H = hull::spindle_hull_2d(X);
            if (H.kind != hull::SpindleHull2::Kind::Boundary || H.boundary.arcs.empty())
                continue;
            const Vec p = vec2(2.0 * uh(rng), 2.0 * uh(rng));
            double margin = 1e9;
            bool in_arcs = true;
            for (const auto& arc : H.boundary.arcs) {
                const double d = (p - arc.center).norm();
                margin = std::min(margin, std::abs(d - 1.0));
                if (d > 1.0) in_arcs = false;
            }
            if (margin < 1e-7) continue;
            if (hull::spindle_hull_contains(X, p) != in_arcs) {
                why = "hull membership oracle mismatch";
                return false;
            }
            ++oracle_pairs;
        }
        int reduced = 0;
        while (reduced < 50) {
            std::vector<Vec> X;
            for (int i = 0; i < 5; ++i) X.push_back(vec2(uh(rng), uh(rng)));
            auto H = hull::spindle_hull_2d(X);
            if (H.kind != hull::SpindleHull2::Kind::Boundary || H.boundary.arcs.empty())
                continue;
            const auto& arc = H.boundary.arcs[0];
            const Vec yb = arc.center + vec2(std::cos(arc.mid), std::sin(arc.mid));
            auto qb = hull::caratheodory_steinitz_reduce(X, yb, Tolerance(1e-7, 1e-12));
            if (qb.size() > 2) { why = "boundary reduction exceeded 2 points"; return false; }
            Vec yi = vec2(0, 0);
            for (const Vec& v : H.boundary.vertices) yi += v;
            yi /= static_cast<double>(H.boundary.vertices.size());
            if (hull::spindle_hull_contains(X, yi)) {
                auto qi = hull::caratheodory_steinitz_reduce(X, yi);
                if (qi.size() > 3) { why = "interior reduction exceeded 3 points"; return false; }
            }
            ++reduced;
        }
        return true;
    });

    R.criterion(9, "illumination: Gauss bound, frames, probability one", 120.0,
                [](std::string& why) {
        // Gauss-image diameter bound on the strata of varied fixtures
        for (unsigned seed = 1; seed <= 6; ++seed) {
            auto X = random_diameter_one(4 + seed % 5, seed);
            auto body = bp3::boundary_structure(X);
            for (const auto& v : body.vertices) {
                auto G = illumination::gauss_image(X, v.pos);
                if (G.spherical_diameter > kPi / 3.0 + 1e-9) { why = "Gauss bound (vertex)"; return false; }
            }
            for (const auto& e : body.edges) {
                const Vec z = e.ccenter + e.cradius * (std::cos(e.mid) * e.u +
                                                       std::sin(e.mid) * e.v);
                auto G = illumination::gauss_image(X, z);
                if (G.spherical_diameter > kPi / 3.0 + 1e-9) { why = "Gauss bound (edge)"; return false; }
            }
        }
        // find_frame on 50 random diameter-1 bodies
        std::mt19937_64 rng(9);
        std::normal_distribution<double> g(0.0, 1.0);
        for (int t = 0; t < 50; ++t) {
            auto X = random_diameter_one(4 + t % 6, 1000 + t);
            Vec u = vec3(g(rng), g(rng), g(rng)).normalized();
            auto f = illumination::find_frame(X, u);
            if (!illumination::illuminates_frame(X, f).illuminated) {
                why = "find_frame result failed self-certification";
                return false;
            }
        }
        // probability-one experiments: 500 trials per body
        std::vector<std::vector<Vec>> bodies = {
            {vec3(0, 0, 0)},
            {vec3(0, 0, 0), vec3(1, 0, 0)},
            random_diameter_one(10, 77)};
        for (size_t i = 0; i < bodies.size(); ++i) {
            auto E = illumination::random_frame_experiment(bodies[i], 500, 2000 + i);
            if (E.ratio != 1.0) { why = "a random frame failed to illuminate"; return false; }
        }
        return true;
    });

    R.criterion(10, "polytope approximation: lattice and Hausdorff", 30.0,
                [](std::string& why) {
        for (int which = 0; which < 2; ++which) {
            auto poly = which == 0 ? bp3::make_cube(std::sqrt(3.0)) : bp3::make_octahedron(1.0);
            auto at20 = bp3::approximate_polyhedron(poly, 20.0);
            if (!at20.lattice_isomorphic) { why = "lattice not isomorphic at k=20"; return false; }
            double prev = -1.0;
            for (double k : {10.0, 20.0, 40.0}) {
                auto res = bp3::approximate_polyhedron(poly, k);
                if (prev > 0.0) {
                    const double ratio = res.hausdorff / prev;
                    if (!(ratio > 0.5 / 1.5 && ratio < 0.5 * 1.5)) {
                        why = "Hausdorff ratio outside the halving band";
                        return false;
                    }
                }
                prev = res.hausdorff;
            }
        }
        return true;
    });

    if (R.failures == 0) std::printf("all acceptance criteria passed\n");
    return R.failures;
}
