#include "ballpoly/diskpoly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "ballpoly/core.hpp"

namespace ballpoly::diskpoly {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTau = 2.0 * kPi;

double wrap_pm(double a) {  // wrap to (-pi, pi]
    a = std::fmod(a, kTau);
    if (a <= -kPi) a += kTau;
    if (a > kPi) a -= kTau;
    return a;
}

Vec dir(double t) { return vec2(std::cos(t), std::sin(t)); }

struct Interval {   // angular interval [mid-half, mid+half] on a circle
    double mid = 0.0;
    double half = 0.0;
    bool full = true;   // whole circle until the first constraint lands
    bool empty = false;
};

// Intersect with the cap of directions theta such that the circle point
// x_i + e(theta) lies in the unit disk about a center at distance D, seen
// under direction angle phi.
void clip(Interval& iv, double phi, double w) {
    if (iv.empty) return;
    if (iv.full) {
        iv.full = false;
        iv.mid = phi;
        iv.half = w;
        return;
    }
    const double delta = wrap_pm(phi - iv.mid);
    const double lo = std::max(-iv.half, delta - w);
    const double hi = std::min(iv.half, delta + w);
    if (lo > hi) {
        iv.empty = true;
        return;
    }
    iv.mid += 0.5 * (lo + hi);
    iv.half = 0.5 * (hi - lo);
}

bool angle_in(double theta, double mid, double half, double slack = 1e-12) {
    return std::abs(wrap_pm(theta - mid)) <= half + slack;
}

// Angular interval of circle i lying inside every other disk of `kept`.
Interval visible_interval(const std::vector<Vec>& pts, const std::vector<int>& kept,
                          int i) {
    Interval iv;
    for (int j : kept) {
        if (j == i) continue;
        const Vec d = pts[j] - pts[i];
        const double D = d.norm();
        if (D > 2.0) {
            iv.empty = true;
            return iv;
        }
        clip(iv, std::atan2(d(1), d(0)), std::acos(std::clamp(D / 2.0, -1.0, 1.0)));
        if (iv.empty) return iv;
    }
    return iv;
}

}  // namespace

double circle_polygon_perimeter(const CirclePolygon& P, const Tolerance& tol) {
    const size_t n = P.vertices.size();
    if (n < 2) throw std::invalid_argument("circle_polygon_perimeter: need >= 2 vertices");
    if (!P.bulge_left.empty() && P.bulge_left.size() != n)
        throw std::invalid_argument("circle_polygon_perimeter: one arc choice per edge");
    double len = 0.0;
    for (size_t i = 0; i < n; ++i) {
        const double chord = (P.vertices[(i + 1) % n] - P.vertices[i]).norm();
        if (chord > 2.0 + tol.eps_geom)
            throw std::invalid_argument("circle_polygon_perimeter: consecutive distance > 2");
        len += 2.0 * std::asin(std::clamp(chord / 2.0, 0.0, 1.0));
    }
    return len;
}

CirclePolygon boundary_circle_polygon(const DiskPolygon& P) {
    if (P.kind != DiskPolygon::Kind::Polygon)
        throw std::invalid_argument("boundary_circle_polygon: degenerate disk-polygon");
    CirclePolygon C;
    for (const auto& a : P.arcs) {
        C.vertices.push_back(P.vertices[a.v_start].pos);
        // boundary arcs bulge away from the generating center
        C.bulge_left.push_back(false);
    }
    return C;
}

DiskPolygon build_disk_polygon(std::span<const Vec> centers, const Tolerance& tol) {
    DiskPolygon P;
    if (centers.empty()) {
        // no constraints: treat the empty family as degenerate full plane;
        // callers in this library always pass at least one center
        throw std::invalid_argument("build_disk_polygon: empty center family");
    }
    for (const Vec& c : centers)
        if (c.size() != 2) throw std::invalid_argument("build_disk_polygon: need 2D centers");

    // dedupe near-identical centers
    std::vector<Vec> pts;
    for (const Vec& c : centers) {
        bool dup = false;
        for (const Vec& p : pts)
            if ((p - c).norm() <= tol.eps_geom) { dup = true; break; }
        if (!dup) pts.push_back(c);
    }

    const auto cb = core::circumball(pts, tol);
    if (cb.radius > 1.0 + tol.eps_geom) {
        P.kind = DiskPolygon::Kind::Empty;
        return P;
    }
    if (cb.radius >= 1.0 - tol.eps_geom) {
        P.kind = DiskPolygon::Kind::Point;
        P.point = cb.center;
        return P;
    }

    // reduce: drop circles whose visible interval is empty (or a tangency)
    std::vector<int> kept(pts.size());
    std::iota(kept.begin(), kept.end(), 0);
    bool removed = true;
    while (removed && kept.size() > 1) {
        removed = false;
        for (size_t k = 0; k < kept.size(); ++k) {
            Interval iv = visible_interval(pts, kept, kept[k]);
            if (iv.empty || (!iv.full && iv.half <= tol.eps_geom)) {
                kept.erase(kept.begin() + k);
                removed = true;
                break;
            }
        }
    }

    for (int k : kept) P.centers.push_back(pts[k]);
    if (P.centers.size() == 1) {
        P.kind = DiskPolygon::Kind::FullDisk;
        P.point = P.centers[0];
        return P;
    }

    // boundary arcs, one interval per surviving circle
    std::vector<int> all(P.centers.size());
    std::iota(all.begin(), all.end(), 0);
    struct RawArc { int gen; double mid, half; Vec p0, p1; };
    std::vector<RawArc> raw;
    for (int i : all) {
        Interval iv = visible_interval(P.centers, all, i);
        if (iv.empty || iv.full) continue;  // full cannot happen with >=2 circles
        RawArc a;
        a.gen = i;
        a.mid = iv.mid;
        a.half = iv.half;
        a.p0 = P.centers[i] + dir(iv.mid - iv.half);
        a.p1 = P.centers[i] + dir(iv.mid + iv.half);
        raw.push_back(a);
    }
    if (raw.size() < 2)
        throw std::runtime_error("build_disk_polygon: inconsistent boundary");

    // collect vertices by merging coincident arc endpoints
    auto vertex_id = [&](const Vec& p) {
        for (size_t v = 0; v < P.vertices.size(); ++v)
            if ((P.vertices[v].pos - p).norm() <= 1e5 * tol.eps_geom)
                return static_cast<int>(v);
        P.vertices.push_back({p, {}});
        return static_cast<int>(P.vertices.size()) - 1;
    };
    std::vector<std::pair<int, int>> ends(raw.size());  // (start vid, end vid)
    for (size_t k = 0; k < raw.size(); ++k) {
        ends[k] = {vertex_id(raw[k].p0), vertex_id(raw[k].p1)};
        P.vertices[ends[k].first].gens.push_back(raw[k].gen);
        P.vertices[ends[k].second].gens.push_back(raw[k].gen);
    }
    for (auto& v : P.vertices) {
        std::sort(v.gens.begin(), v.gens.end());
        v.gens.erase(std::unique(v.gens.begin(), v.gens.end()), v.gens.end());
    }

    // chain arcs ccw: the end vertex of one arc is the start of the next
    std::vector<int> next(raw.size(), -1);
    for (size_t k = 0; k < raw.size(); ++k) {
        for (size_t l = 0; l < raw.size(); ++l) {
            if (k == l) continue;
            if (ends[k].second == ends[l].first) { next[k] = static_cast<int>(l); break; }
        }
        if (next[k] < 0) throw std::runtime_error("build_disk_polygon: open boundary chain");
    }
    std::vector<bool> used(raw.size(), false);
    int cur = 0;
    for (size_t step = 0; step < raw.size(); ++step) {
        if (used[cur]) throw std::runtime_error("build_disk_polygon: boundary not a single cycle");
        used[cur] = true;
        DiskPolygon::Arc a;
        a.gen = raw[cur].gen;
        a.mid = raw[cur].mid;
        a.half = raw[cur].half;
        a.v_start = ends[cur].first;
        a.v_end = ends[cur].second;
        P.arcs.push_back(a);
        cur = next[cur];
    }
    if (cur != 0) throw std::runtime_error("build_disk_polygon: boundary cycle did not close");

    P.kind = DiskPolygon::Kind::Polygon;
    return P;
}

Measure measure(const DiskPolygon& P) {
    Measure m;
    switch (P.kind) {
        case DiskPolygon::Kind::Empty:
        case DiskPolygon::Kind::Point:
            return m;
        case DiskPolygon::Kind::FullDisk:
            m.perimeter = kTau;
            m.area = kPi;
            return m;
        case DiskPolygon::Kind::Polygon:
            break;
    }
    double shoelace = 0.0;
    for (const auto& a : P.arcs) {
        const double theta = 2.0 * a.half;
        m.perimeter += theta;
        m.area += 0.5 * (theta - std::sin(theta));  // unit circular segment
        const Vec& p = P.vertices[a.v_start].pos;
        const Vec& q = P.vertices[a.v_end].pos;
        shoelace += p(0) * q(1) - q(0) * p(1);
    }
    m.area += 0.5 * shoelace;
    return m;
}

double support(const DiskPolygon& P, double theta) {
    const Vec u = dir(theta);
    switch (P.kind) {
        case DiskPolygon::Kind::Empty:
            return -std::numeric_limits<double>::infinity();
        case DiskPolygon::Kind::Point:
            return P.point.dot(u);
        case DiskPolygon::Kind::FullDisk:
            return P.point.dot(u) + 1.0;
        case DiskPolygon::Kind::Polygon:
            break;
    }
    double h = -std::numeric_limits<double>::infinity();
    for (const auto& a : P.arcs)
        if (angle_in(theta, a.mid, a.half))
            h = std::max(h, P.centers[a.gen].dot(u) + 1.0);
    for (const auto& v : P.vertices) h = std::max(h, v.pos.dot(u));
    return h;
}

double diameter(const DiskPolygon& P) {
    switch (P.kind) {
        case DiskPolygon::Kind::Empty:
        case DiskPolygon::Kind::Point:
            return 0.0;
        case DiskPolygon::Kind::FullDisk:
            return 2.0;
        case DiskPolygon::Kind::Polygon:
            break;
    }
    double best = 0.0;
    const auto& V = P.vertices;
    for (size_t i = 0; i < V.size(); ++i)
        for (size_t j = i + 1; j < V.size(); ++j)
            best = std::max(best, (V[i].pos - V[j].pos).norm());
    for (const auto& v : V) {
        for (const auto& a : P.arcs) {
            const Vec d = P.centers[a.gen] - v.pos;
            const double D = d.norm();
            if (D <= 1e-14) continue;
            if (angle_in(std::atan2(d(1), d(0)), a.mid, a.half))
                best = std::max(best, D + 1.0);
        }
    }
    for (const auto& a : P.arcs) {
        for (const auto& b : P.arcs) {
            if (a.gen == b.gen) continue;
            const Vec d = P.centers[a.gen] - P.centers[b.gen];
            const double D = d.norm();
            if (D <= 1e-14) continue;
            const double ta = std::atan2(d(1), d(0));
            if (angle_in(ta, a.mid, a.half) && angle_in(ta + kPi, b.mid, b.half))
                best = std::max(best, D + 2.0);
        }
    }
    return best;
}

double min_width(const DiskPolygon& P) {
    if (P.kind == DiskPolygon::Kind::FullDisk) return 2.0;
    if (P.kind != DiskPolygon::Kind::Polygon) return 0.0;
    auto breadth = [&](double t) { return support(P, t) + support(P, t + kPi); };
    const int N = 4096;
    double best = std::numeric_limits<double>::infinity();
    double bt = 0.0;
    for (int i = 0; i < N; ++i) {
        const double t = kPi * i / N;  // breadth has period pi
        const double b = breadth(t);
        if (b < best) { best = b; bt = t; }
    }
    // golden-section polish on the winning bracket
    double lo = bt - kPi / N, hi = bt + kPi / N;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = breadth(x1), f2 = breadth(x2);
    for (int it = 0; it < 80; ++it) {
        if (f1 < f2) {
            hi = x2; x2 = x1; f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = breadth(x1);
        } else {
            lo = x1; x1 = x2; f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = breadth(x2);
        }
    }
    return std::min({best, f1, f2});
}

double farthest_distance(const DiskPolygon& P, const Vec& q) {
    switch (P.kind) {
        case DiskPolygon::Kind::Empty:
            return 0.0;
        case DiskPolygon::Kind::Point:
            return (q - P.point).norm();
        case DiskPolygon::Kind::FullDisk:
            return (q - P.point).norm() + 1.0;
        case DiskPolygon::Kind::Polygon:
            break;
    }
    double best = 0.0;
    for (const auto& v : P.vertices) best = std::max(best, (q - v.pos).norm());
    for (const auto& a : P.arcs) {
        const Vec d = P.centers[a.gen] - q;
        const double D = d.norm();
        if (D <= 1e-14) { best = std::max(best, 1.0); continue; }
        if (angle_in(std::atan2(d(1), d(0)), a.mid, a.half))
            best = std::max(best, D + 1.0);
    }
    return best;
}

// ---------------------------------------------------------------------------

namespace {

double seg_area(double theta) { return 0.5 * (theta - std::sin(theta)); }

double inscribed_perimeter(int n, double r, const std::vector<double>& th) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += 2.0 * std::asin(std::clamp(r * std::sin(th[i] / 2.0), -1.0, 1.0));
    return s;
}

double inscribed_area(int n, double r, const std::vector<double>& th) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
        const double arc = 2.0 * std::asin(std::clamp(r * std::sin(th[i] / 2.0), -1.0, 1.0));
        s += 0.5 * r * r * std::sin(th[i]) + seg_area(arc);
    }
    return s;
}

std::vector<Vec> ring_centers(int n, double rho, const std::vector<double>& phi) {
    std::vector<Vec> c;
    c.reserve(n);
    for (int i = 0; i < n; ++i) c.push_back(rho * dir(phi[i]));
    return c;
}

// fast measures for a family in which every circle must carry one boundary
// arc (the circumscribed optimizer's inner loop); no reduction pass. The
// underlying polygon's shoelace sum runs over arc endpoint pairs, which is
// valid because consecutive boundary arcs share their endpoints.
std::optional<Measure> full_ring_measure(const std::vector<Vec>& centers) {
    const int n = static_cast<int>(centers.size());
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    Measure m;
    double shoelace = 0.0;
    for (int i = 0; i < n; ++i) {
        Interval iv = visible_interval(centers, all, i);
        if (iv.empty || iv.full || iv.half <= 1e-9) return std::nullopt;
        const double th = 2.0 * iv.half;
        m.perimeter += th;
        m.area += 0.5 * (th - std::sin(th));
        const Vec p0 = centers[i] + dir(iv.mid - iv.half);
        const Vec p1 = centers[i] + dir(iv.mid + iv.half);
        shoelace += p0(0) * p1(1) - p1(0) * p0(1);
    }
    m.area += 0.5 * shoelace;
    return m;
}

}  // namespace

RegularFamily regular_family(int n, double r, FamilyKind kind, const Tolerance& tol) {
    if (n < 3 || r <= 0.0 || r >= 1.0)
        throw std::invalid_argument("regular_family: need n >= 3 and 0 < r < 1");
    RegularFamily out;
    if (kind == FamilyKind::Inscribed) {
        const double s_half = r * std::sin(kPi / n);           // half chord
        const double arc = 2.0 * std::asin(s_half);
        out.perimeter = n * arc;
        out.area = 0.5 * n * r * r * std::sin(kTau / n) + n * seg_area(arc);
        const double h = std::sqrt(std::max(0.0, 1.0 - s_half * s_half));
        std::vector<Vec> centers;
        for (int i = 0; i < n; ++i) {
            const double tm = kTau * (i + 0.5) / n;           // edge midpoint angle
            const double rm = r * std::cos(kPi / n);
            centers.push_back((rm - h) * dir(tm));
        }
        out.poly = build_disk_polygon(centers, tol);
        if (!out.poly.nondegenerate() || static_cast<int>(out.poly.vertices.size()) != n) {
            out.degenerate = true;
            return out;
        }
        for (const auto& v : out.poly.vertices)
            if (std::abs(v.pos.norm() - r) > 1e3 * tol.eps_geom) out.degenerate = true;
    } else {
        const double rho = 1.0 - r;
        const double root = std::sqrt(std::max(0.0, 1.0 - rho * rho * std::pow(std::sin(kPi / n), 2)));
        const double s_minus = rho * std::cos(kPi / n) - root;  // signed vertex offset
        const double w = std::acos(std::clamp(rho - s_minus * std::cos(kPi / n), -1.0, 1.0));
        out.perimeter = 2.0 * n * w;
        out.area = 0.5 * n * s_minus * s_minus * std::sin(kTau / n) + n * seg_area(2.0 * w);
        std::vector<double> phi(n);
        for (int i = 0; i < n; ++i) phi[i] = kTau * i / n;
        out.poly = build_disk_polygon(ring_centers(n, rho, phi), tol);
        if (!out.poly.nondegenerate() || static_cast<int>(out.poly.vertices.size()) != n) {
            out.degenerate = true;
            return out;
        }
        // interior tangency of every edge to the circle of radius r
        for (const auto& a : out.poly.arcs) {
            const Vec c = out.poly.centers[a.gen];
            const double t_near = std::atan2(-c(1), -c(0));
            if (!angle_in(t_near, a.mid, a.half, 1e-9)) out.degenerate = true;
            if (std::abs((1.0 - c.norm()) - r) > 1e3 * tol.eps_geom) out.degenerate = true;
        }
    }
    return out;
}

namespace {

// golden-section minimizer on [lo,hi]
template <typename F>
double golden_min(F f, double lo, double hi, int iters = 60) {
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < iters; ++i) {
        if (f1 < f2) {
            hi = x2; x2 = x1; f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1; x1 = x2; f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = f(x2);
        }
    }
    return f1 < f2 ? x1 : x2;
}

}  // namespace

ExtremalResult extremal_search(int n, double r, FamilyKind kind, Objective obj,
                               Sense sense, int restarts, unsigned seed,
                               const Tolerance&) {
    std::mt19937_64 rng(seed);
    const double sgn = (sense == Sense::Max) ? 1.0 : -1.0;  // maximize sgn * f

    auto eval_inscribed = [&](const std::vector<double>& th) {
        return obj == Objective::Perimeter ? inscribed_perimeter(n, r, th)
                                           : inscribed_area(n, r, th);
    };
    auto eval_circumscribed = [&](const std::vector<double>& phi) -> double {
        auto m = full_ring_measure(ring_centers(n, 1.0 - r, phi));
        if (!m) return -sgn * 1e9;  // some circle lost its boundary arc
        return obj == Objective::Perimeter ? m->perimeter : m->area;
    };

    ExtremalResult best;
    double best_score = -std::numeric_limits<double>::infinity();

    for (int restart = 0; restart < restarts; ++restart) {
        std::vector<double> th(n);
        if (kind == FamilyKind::Inscribed) {
            // random point of the simplex {th > 0, sum = 2pi}
            std::exponential_distribution<double> ex(1.0);
            double s = 0.0;
            for (double& t : th) { t = ex(rng) + 1e-3; s += t; }
            for (double& t : th) t *= kTau / s;
            double cur = sgn * eval_inscribed(th);
            for (int sweep = 0; sweep < 200; ++sweep) {
                double improved = 0.0;
                for (int i = 0; i < n; ++i) {
                    for (int j = i + 1; j < n; ++j) {
                        // transfer mass between th[i] and th[j]
                        const double lo = -th[j] + 1e-9, hi = th[i] - 1e-9;
                        if (hi <= lo) continue;
                        auto f = [&](double t) {
                            std::vector<double> cand = th;
                            cand[i] -= t;
                            cand[j] += t;
                            return -sgn * eval_inscribed(cand);
                        };
                        const double t0 = golden_min(f, lo, hi, 52);
                        const double v = -f(t0);
                        if (v > cur + 1e-15) {
                            improved += v - cur;
                            th[i] -= t0;
                            th[j] += t0;
                            cur = v;
                        }
                    }
                }
                if (improved < 1e-14) break;
            }
            if (cur > best_score) {
                best_score = cur;
                best.angles = th;
                best.value = sgn * cur;
            }
        } else {
            // center directions; fix phi[0] = 0, keep the cyclic order
            std::vector<double> phi(n);
            std::uniform_real_distribution<double> un(0.1, 1.0);
            double s = 0.0;
            std::vector<double> gaps(n);
            for (double& g : gaps) { g = un(rng); s += g; }
            phi[0] = 0.0;
            for (int i = 1; i < n; ++i) phi[i] = phi[i - 1] + gaps[i - 1] * kTau / s;
            double cur = sgn * eval_circumscribed(phi);
            for (int sweep = 0; sweep < 120; ++sweep) {
                double improved = 0.0;
                for (int i = 1; i < n; ++i) {
                    const double lo = phi[i - 1] + 1e-6;
                    const double hi = (i + 1 < n ? phi[i + 1] : kTau) - 1e-6;
                    if (hi <= lo) continue;
                    auto f = [&](double t) {
                        std::vector<double> cand = phi;
                        cand[i] = t;
                        return -sgn * eval_circumscribed(cand);
                    };
                    const double t0 = golden_min(f, lo, hi, 52);
                    const double v = -f(t0);
                    if (v > cur + 1e-15) {
                        improved += v - cur;
                        phi[i] = t0;
                        cur = v;
                    }
                }
                if (improved < 1e-14) break;
            }
            if (cur > best_score) {
                best_score = cur;
                best.angles = phi;
                best.value = sgn * cur;
            }
        }
    }

    // deviation from the regular configuration, measured on consecutive gaps
    std::vector<double> gaps;
    if (kind == FamilyKind::Inscribed) {
        gaps = best.angles;
    } else {
        std::vector<double> phi = best.angles;
        std::sort(phi.begin(), phi.end());
        for (int i = 0; i < n; ++i) {
            const double next = (i + 1 < n) ? phi[i + 1] : phi[0] + kTau;
            gaps.push_back(next - phi[i]);
        }
    }
    double dev = 0.0;
    for (double g : gaps) dev = std::max(dev, std::abs(g - kTau / n));
    best.regular_deviation = dev;
    return best;
}

DowkerTable dowker_table(double r, int n_min, int n_max, const Tolerance& tol) {
    if (n_min < 4 || n_max > 12 || n_min > n_max)
        throw std::invalid_argument("dowker_table: need 4 <= n_min <= n_max <= 12");
    DowkerTable T;
    auto value = [&](int n, FamilyKind k, Objective o) {
        RegularFamily f = regular_family(n, r, k, tol);
        if (f.degenerate) throw std::runtime_error("dowker_table: degenerate regular family");
        return o == Objective::Perimeter ? f.perimeter : f.area;
    };
    T.all_theorem_rows_hold = true;
    for (int n = n_min; n <= n_max; ++n) {
        auto row = [&](FamilyKind k, Objective o, bool convex) {
            DowkerRow R;
            R.n = n;
            R.value = value(n, k, o);
            R.combo = value(n - 1, k, o) + value(n + 1, k, o) - 2.0 * R.value;
            R.holds = convex ? (R.combo > 0.0) : (R.combo < 0.0);
            return R;
        };
        DowkerRow ip = row(FamilyKind::Inscribed, Objective::Perimeter, false);
        DowkerRow ia = row(FamilyKind::Inscribed, Objective::Area, false);
        ia.conjecture_only = (n % 2 == 0);
        DowkerRow ca = row(FamilyKind::Circumscribed, Objective::Area, true);
        DowkerRow cp = row(FamilyKind::Circumscribed, Objective::Perimeter, true);
        T.inscribed_perimeter.push_back(ip);
        T.inscribed_area.push_back(ia);
        T.circumscribed_area.push_back(ca);
        T.circumscribed_perimeter.push_back(cp);
        if (!ip.holds || !ca.holds || !cp.holds) T.all_theorem_rows_hold = false;
        if (!ia.conjecture_only && !ia.holds) T.all_theorem_rows_hold = false;
    }
    return T;
}

}  // namespace ballpoly::diskpoly
