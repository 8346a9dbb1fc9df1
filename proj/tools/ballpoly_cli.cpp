#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <random>

#include "ballpoly/bp3.hpp"
#include "ballpoly/constructions.hpp"
#include "ballpoly/core.hpp"
#include "ballpoly/diskpoly.hpp"
#include "ballpoly/hull.hpp"
#include "ballpoly/illumination.hpp"
#include "ballpoly/scene.hpp"
#include "ballpoly/separation.hpp"
#include "ballpoly/svg.hpp"

namespace bp = ballpoly;
using bp::Vec;
using bp::io::Json;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Common {
    std::string scene_path;
    std::string report_path;
    std::string svg_path;
    unsigned long long seed = 0;
    double eps = 1e-9;
    int trials = 500;
};

void add_common(CLI::App* cmd, Common& c, bool scene_positional = true) {
    if (scene_positional) cmd->add_option("scene", c.scene_path, "JSON scene file");
    cmd->add_option("--report", c.report_path, "write the JSON report here");
    cmd->add_option("--svg", c.svg_path, "write an SVG figure here (2D scenes)");
    cmd->add_option("--seed", c.seed, "random seed");
    cmd->add_option("--eps", c.eps, "geometric predicate tolerance");
    cmd->add_option("--trials", c.trials, "number of randomized trials");
}

bp::Tolerance tol_of(const Common& c) { return bp::Tolerance(c.eps, std::min(c.eps, 1e-12)); }

class Report {
  public:
    explicit Report(const std::string& command) : root_(Json::object()) {
        root_.set("command", command);
        inputs_ = Json::object();
        results_ = Json::object();
        assertions_ = Json::array();
    }
    Json& inputs() { return inputs_; }
    Json& results() { return results_; }
    void check(const std::string& name, bool holds, const std::string& details = "") {
        Json a = Json::object();
        a.set("name", name);
        a.set("holds", Json(holds));
        a.set("details", details);
        assertions_.push_back(std::move(a));
        all_ = all_ && holds;
        std::cout << (holds ? "[ok]   " : "[FAIL] ") << name
                  << (details.empty() ? "" : "  (" + details + ")") << "\n";
    }
    int finish(const Common& c) {
        root_.set("inputs", std::move(inputs_));
        root_.set("results", std::move(results_));
        root_.set("assertions", std::move(assertions_));
        if (!c.report_path.empty()) bp::io::write_file_atomic(c.report_path, root_.dump(2));
        return all_ ? 0 : 1;
    }

  private:
    Json root_, inputs_, results_, assertions_;
    bool all_ = true;
};

std::vector<bp::io::SvgArc> diskpoly_arcs(const bp::diskpoly::DiskPolygon& P) {
    std::vector<bp::io::SvgArc> arcs;
    for (const auto& a : P.arcs)
        arcs.push_back({P.centers[a.gen], 1.0, a.mid, a.half});
    return arcs;
}

std::pair<int, int> parse_range(const std::string& s) {
    const auto pos = s.find("..");
    if (pos == std::string::npos) {
        const int v = std::stoi(s);
        return {v, v};
    }
    return {std::stoi(s.substr(0, pos)), std::stoi(s.substr(pos + 2))};
}

int run_hull2d(const Common& c) {
    auto tol = tol_of(c);
    auto scene = bp::io::load_scene(c.scene_path);
    const auto& pts = scene.points.empty() ? scene.centers : scene.points;
    if (pts.empty()) throw bp::io::SceneError("hull2d: scene has no points");
    Report rep("hull2d");
    rep.inputs().set("points", Json(static_cast<int>(pts.size())));
    auto H = bp::hull::spindle_hull_2d(pts, tol);
    switch (H.kind) {
        case bp::hull::SpindleHull2::Kind::WholePlane:
            rep.results().set("kind", "whole-plane");
            break;
        case bp::hull::SpindleHull2::Kind::SingleBall:
            rep.results().set("kind", "single-ball");
            rep.results().set("center", bp::io::vec_to_json(H.ball_center));
            break;
        case bp::hull::SpindleHull2::Kind::Boundary: {
            rep.results().set("kind", "boundary");
            Json vs = Json::array();
            for (const Vec& v : H.boundary.vertices) vs.push_back(bp::io::vec_to_json(v));
            rep.results().set("vertices", std::move(vs));
            rep.results().set("arc_count", Json(static_cast<int>(H.boundary.arcs.size())));
            bool inside = true;
            for (const Vec& p : pts)
                inside = inside && bp::hull::spindle_hull_contains(pts, p, tol);
            rep.check("inputs_in_hull", inside);
            if (!H.boundary.arcs.empty()) {
                auto H2 = bp::hull::spindle_hull_2d(H.boundary.vertices, tol);
                rep.check("idempotent",
                          H2.kind == H.kind &&
                              H2.boundary.vertices.size() == H.boundary.vertices.size());
            }
            if (!c.svg_path.empty()) {
                std::vector<bp::io::SvgArc> arcs;
                for (const auto& a : H.boundary.arcs)
                    arcs.push_back({a.center, 1.0, a.mid, a.half});
                bp::io::write_file_atomic(c.svg_path, bp::io::svg_document(arcs, pts, 0.01));
            }
            break;
        }
    }
    return rep.finish(c);
}

int run_bp3_structure(const Common& c) {
    auto tol = tol_of(c);
    auto scene = bp::io::load_scene(c.scene_path);
    Report rep("bp3-structure");
    auto body = bp::bp3::boundary_structure(scene.centers, tol);
    rep.results().set("V", Json(static_cast<int>(body.vertices.size())));
    rep.results().set("E", Json(static_cast<int>(body.edges.size())));
    rep.results().set("F", Json(static_cast<int>(body.faces.size())));
    rep.results().set("seams", Json(static_cast<int>(body.seams.size())));
    Json vs = Json::array();
    for (const auto& v : body.vertices) {
        Json jv = Json::object();
        jv.set("pos", bp::io::vec_to_json(v.pos));
        Json sp = Json::array();
        for (int s : v.spheres) sp.push_back(Json(s));
        jv.set("spheres", std::move(sp));
        vs.push_back(std::move(jv));
    }
    rep.results().set("vertices", std::move(vs));
    Json es = Json::array();
    for (const auto& e : body.edges) {
        Json je = Json::object();
        je.set("spheres", Json::array().push_back(Json(e.s1)).push_back(Json(e.s2)));
        je.set("carrier_center", bp::io::vec_to_json(e.ccenter));
        je.set("carrier_radius", Json(e.cradius));
        je.set("mid", Json(e.mid));
        je.set("half", Json(e.half));
        je.set("ends", Json::array().push_back(Json(e.v_start)).push_back(Json(e.v_end)));
        es.push_back(std::move(je));
    }
    rep.results().set("edges", std::move(es));
    Json fs = Json::array();
    for (const auto& f : body.faces) {
        Json jf = Json::object();
        jf.set("sphere", Json(f.sphere));
        Json cyc = Json::array();
        for (int v : f.cycle_verts) cyc.push_back(Json(v));
        jf.set("cycle", std::move(cyc));
        fs.push_back(std::move(jf));
    }
    rep.results().set("faces", std::move(fs));
    if (body.kind == bp::bp3::BallPolyhedron3::Kind::Body && !body.edges.empty()) {
        std::vector<int> face_count(body.edges.size(), 0);
        for (const auto& f : body.faces)
            for (int e : f.cycle_edges) ++face_count[e];
        bool two = true;
        for (int k : face_count) two = two && k == 2;
        rep.check("each_edge_in_two_faces", two);
    }
    return rep.finish(c);
}

int run_euler_check(const Common& c) {
    auto tol = tol_of(c);
    auto scene = bp::io::load_scene(c.scene_path);
    Report rep("euler-check");
    auto body = bp::bp3::boundary_structure(scene.centers, tol);
    auto g = bp::bp3::euler_and_graph_checks(body, tol);
    rep.results().set("V", Json(g.V));
    rep.results().set("E", Json(g.E));
    rep.results().set("F", Json(g.F));
    rep.results().set("chi", Json(g.chi));
    rep.results().set("standard", Json(g.standard));
    if (g.standard)
        rep.check("euler_poincare", g.chi == 2, "V-E+F=" + std::to_string(g.chi));
    else
        rep.check("euler_poincare", true, "body not standard; formula not asserted");
    return rep.finish(c);
}

int run_standardness(const Common& c) {
    auto tol = tol_of(c);
    auto scene = bp::io::load_scene(c.scene_path);
    Report rep("standardness");
    auto body = bp::bp3::boundary_structure(scene.centers, tol);
    auto s = bp::bp3::standardness_and_lattice(body);
    rep.results().set("standard", Json(s.standard));
    if (!s.standard) rep.results().set("witness", s.witness);
    rep.check("structure_computed", true);
    return rep.finish(c);
}

int run_dowker(const Common& c, double r, const std::string& range,
               const std::string& setting) {
    auto tol = tol_of(c);
    auto [n0, n1] = parse_range(range);
    Report rep("dowker");
    rep.inputs().set("r", Json(r));
    auto T = bp::diskpoly::dowker_table(r, n0, n1, tol);
    auto emit = [&](const char* name, const std::vector<bp::diskpoly::DowkerRow>& rows,
                    bool convex) {
        if (setting != "all" && setting != name) return;
        Json arr = Json::array();
        for (const auto& row : rows) {
            Json j = Json::object();
            j.set("n", Json(row.n));
            j.set("value", Json(row.value));
            j.set("combo", Json(row.combo));
            j.set("holds", Json(row.holds));
            if (row.conjecture_only) j.set("status", "CONJECTURE");
            arr.push_back(std::move(j));
            const std::string label =
                std::string(name) + " n=" + std::to_string(row.n);
            if (row.conjecture_only)
                rep.check(label + " [conjecture noted]", true,
                          row.holds ? "numerically holds" : "numerically fails");
            else
                rep.check(label, row.holds, convex ? "strict convexity" : "strict concavity");
        }
        rep.results().set(name, std::move(arr));
    };
    emit("inscribed-perimeter", T.inscribed_perimeter, false);
    emit("inscribed-area", T.inscribed_area, false);
    emit("circumscribed-area", T.circumscribed_area, true);
    emit("circumscribed-perimeter", T.circumscribed_perimeter, true);
    if (!c.svg_path.empty()) {
        auto fam = bp::diskpoly::regular_family(n0, r, bp::diskpoly::FamilyKind::Inscribed, tol);
        bp::io::write_file_atomic(c.svg_path, bp::io::svg_document(diskpoly_arcs(fam.poly)));
    }
    return rep.finish(c);
}

int run_extremal(const Common& c, double r, int n, const std::string& setting,
                 const std::string& objective, const std::string& sense, int restarts) {
    auto tol = tol_of(c);
    Report rep("extremal");
    const auto kind = setting == "inscribed" ? bp::diskpoly::FamilyKind::Inscribed
                                             : bp::diskpoly::FamilyKind::Circumscribed;
    const auto obj = objective == "perimeter" ? bp::diskpoly::Objective::Perimeter
                                              : bp::diskpoly::Objective::Area;
    const auto sns = sense == "max" ? bp::diskpoly::Sense::Max : bp::diskpoly::Sense::Min;
    auto res = bp::diskpoly::extremal_search(n, r, kind, obj, sns, restarts,
                                             static_cast<unsigned>(c.seed), tol);
    auto fam = bp::diskpoly::regular_family(n, r, kind, tol);
    const double closed = obj == bp::diskpoly::Objective::Perimeter ? fam.perimeter : fam.area;
    rep.results().set("optimizer_value", Json(res.value));
    rep.results().set("regular_closed_form", Json(closed));
    rep.results().set("regular_deviation", Json(res.regular_deviation));
    const double slack = 1e-6;
    const bool ok = sns == bp::diskpoly::Sense::Max ? res.value <= closed + slack
                                                    : res.value >= closed - slack;
    rep.check("never_beats_regular_closed_form", ok);
    return rep.finish(c);
}

int run_maehara(const Common& c, int dim) {
    auto tol = tol_of(c);
    Report rep("maehara");
    rep.inputs().set("dim", Json(dim));
    auto P = bp::constructions::maehara_parameters(dim, tol);
    auto F = bp::constructions::maehara_family(dim, tol);
    rep.results().set("t_star", Json(P.t_star));
    rep.results().set("r", Json(P.r));
    rep.results().set("d", Json(P.d));
    rep.results().set("sphere_count", Json(static_cast<int>(F.spheres.size())));
    rep.results().set("max_leave_one_out_residual", Json(F.max_loo_residual));
    rep.results().set("infeasibility_margin", Json(F.infeasibility_margin));
    if (dim == 4) rep.check("t_star_is_half", std::abs(P.t_star - 0.5) <= 1e-12);
    rep.check("tangent_radius_consistent", std::abs(P.r - P.r_geometric) <= 1e-10);
    rep.check("any_n_plus_1_share_a_point", F.max_loo_residual < 1e-8);
    rep.check("full_family_has_no_common_point",
              F.full_intersection_empty && F.infeasibility_margin > 1e-6);
    return rep.finish(c);
}

int run_titeica(const Common& c) {
    auto tol = tol_of(c);
    Report rep("titeica");
    if (!c.scene_path.empty()) {
        auto scene = bp::io::load_scene(c.scene_path);
        if (scene.centers.size() != 3 || scene.points.size() != 1)
            throw bp::io::SceneError("titeica: need 3 centers and 1 point");
        auto R = bp::constructions::titeica_check(scene.centers[0], scene.centers[1],
                                                  scene.centers[2], scene.points[0], tol);
        rep.results().set("deviation", Json(R.deviation));
        rep.check("second_intersections_on_unit_circle", R.deviation < 1e-9);
    } else {
        std::mt19937_64 rng(c.seed);
        std::uniform_real_distribution<double> un(0.0, 2.0 * kPi);
        double worst = 0.0;
        int done = 0;
        while (done < c.trials) {
            const Vec p = bp::vec2(un(rng) - kPi, un(rng) - kPi);
            const double a = un(rng), b = un(rng), cc = un(rng);
            try {
                auto R = bp::constructions::titeica_check(
                    p + bp::vec2(std::cos(a), std::sin(a)),
                    p + bp::vec2(std::cos(b), std::sin(b)),
                    p + bp::vec2(std::cos(cc), std::sin(cc)), p, tol);
                worst = std::max(worst, R.deviation);
                ++done;
            } catch (const bp::constructions::Degenerate&) {
            }
        }
        rep.results().set("trials", Json(done));
        rep.results().set("max_deviation", Json(worst));
        rep.check("second_intersections_on_unit_circle", worst < 1e-9);
    }
    return rep.finish(c);
}

int run_kneser_poulsen(const Common& c, bool paper_configs) {
    auto tol = tol_of(c);
    Report rep("kneser-poulsen");
    auto polar = [](double r, double t) { return bp::vec2(r * std::cos(t), r * std::sin(t)); };
    if (paper_configs) {
        const Vec o = bp::vec2(0, 0);
        std::vector<Vec> X1 = {o, polar(0.5, kPi / 3), polar(0.5, -kPi / 3)};
        std::vector<Vec> Y1 = {o, polar(0.5, kPi / 4), polar(0.5, -kPi / 4)};
        auto R1 = bp::constructions::kp_experiments(X1, Y1, tol);
        rep.results().set("diameter_delta", Json(R1.diameter_delta));
        rep.results().set("circumradius_delta", Json(R1.circumradius_delta));
        rep.check("diameter_decreases", R1.diameter_delta < 0.0);
        rep.check("circumradius_decreases", R1.circumradius_delta < 0.0);
        rep.check("inradius_monotone_1", R1.inradius_ok);
        std::vector<Vec> X2 = {o, polar(0.8, kPi / 10), polar(0.8, -kPi / 10)};
        std::vector<Vec> Y2 = {o, polar(0.8, 0.0), polar(0.8, 0.0)};
        auto R2 = bp::constructions::kp_experiments(X2, Y2, tol);
        rep.results().set("width_delta", Json(R2.width_delta));
        rep.check("width_decreases", R2.width_delta < 0.0);
        rep.check("inradius_monotone_2", R2.inradius_ok);
        if (!c.svg_path.empty()) {
            auto P = bp::diskpoly::build_disk_polygon(X1, tol);
            bp::io::write_file_atomic(c.svg_path,
                                      bp::io::svg_document(diskpoly_arcs(P), X1, 1.0));
        }
    } else {
        auto scene = bp::io::load_scene(c.scene_path);
        auto R = bp::constructions::kp_experiments(scene.centers, scene.points, tol);
        rep.results().set("inradius_x", Json(R.inradius_x));
        rep.results().set("inradius_y", Json(R.inradius_y));
        rep.results().set("diameter_delta", Json(R.diameter_delta));
        rep.results().set("circumradius_delta", Json(R.circumradius_delta));
        rep.results().set("width_delta", Json(R.width_delta));
        rep.check("inradius_monotone", R.inradius_ok);
        if (!c.svg_path.empty()) {
            auto P = bp::diskpoly::build_disk_polygon(scene.centers, tol);
            bp::io::write_file_atomic(
                c.svg_path, bp::io::svg_document(diskpoly_arcs(P), scene.centers, 1.0));
        }
    }
    return rep.finish(c);
}

int run_illuminate(const Common& c) {
    auto tol = tol_of(c);
    auto scene = bp::io::load_scene(c.scene_path);
    const auto& X = scene.centers.empty() ? scene.points : scene.centers;
    Report rep("illuminate");
    auto frame = bp::illumination::find_frame(X, bp::vec3(0, 0, 1), 64, tol);
    rep.results().set("frame_u", bp::io::vec_to_json(frame.u));
    rep.results().set("frame_v", bp::io::vec_to_json(frame.v));
    rep.results().set("frame_w", bp::io::vec_to_json(frame.w));
    rep.check("frame_illuminates", bp::illumination::illuminates_frame(X, frame, tol).illuminated);
    auto E = bp::illumination::random_frame_experiment(X, c.trials,
                                                       static_cast<unsigned>(c.seed), tol);
    rep.results().set("trials", Json(E.trials));
    rep.results().set("successes", Json(E.successes));
    rep.results().set("ratio", Json(E.ratio));
    rep.check("probability_one_ratio", E.ratio == 1.0);
    if (!E.failures.empty()) {
        Json fails = Json::array();
        for (const auto& f : E.failures) {
            Json j = Json::object();
            j.set("u", bp::io::vec_to_json(f.u));
            j.set("v", bp::io::vec_to_json(f.v));
            j.set("w", bp::io::vec_to_json(f.w));
            Json ws = Json::array();
            for (const auto& w : bp::illumination::illuminates_frame(X, f, tol).witnesses) {
                Json jw = Json::object();
                jw.set("stratum", w.stratum);
                jw.set("point", bp::io::vec_to_json(w.point));
                ws.push_back(std::move(jw));
            }
            j.set("blocking_witnesses", std::move(ws));
            fails.push_back(std::move(j));
        }
        rep.results().set("counterexamples", std::move(fails));
    }
    return rep.finish(c);
}

int run_separate(const Common& c) {
    auto tol = tol_of(c);
    auto scene = bp::io::load_scene(c.scene_path);
    Report rep("separate");
    auto R = bp::separation::separate_by_unit_sphere(scene.points, scene.centers, tol);
    if (!R) {
        rep.results().set("separable", Json(false));
        rep.check("hulls_separable", false, "spindle hulls overlap");
        return rep.finish(c);
    }
    rep.results().set("center", bp::io::vec_to_json(R->center));
    rep.results().set("strict", Json(R->strict));
    bool ok_in = true, ok_out = true;
    for (const Vec& x : scene.points) ok_in = ok_in && (x - R->center).norm() <= 1.0 + 1e-7;
    for (const Vec& y : scene.centers) ok_out = ok_out && (y - R->center).norm() >= 1.0 - 1e-7;
    rep.check("first_set_enclosed", ok_in);
    rep.check("second_set_outside", ok_out);
    auto S = bp::separation::smallest_separating_sphere(scene.points, scene.centers, tol);
    if (S) {
        rep.results().set("smallest_radius", Json(S->radius));
        rep.results().set("smallest_center", bp::io::vec_to_json(S->center));
        rep.check("active_set_within_helly_bound",
                  static_cast<int>(S->active.size()) <= scene.dim + 2);
    }
    return rep.finish(c);
}

int run_kirchberger(const Common& c, double delta, double eps) {
    auto tol = tol_of(c);
    Report rep("kirchberger");
    if (!c.scene_path.empty()) {
        auto scene = bp::io::load_scene(c.scene_path);
        auto R = bp::separation::kirchberger_verdict(scene.points, scene.centers, tol);
        const char* verdicts[] = {"SeparableByCapRadius1", "NotSeparable",
                                  "CounterexampleWitness"};
        rep.results().set("verdict", verdicts[static_cast<int>(R.verdict)]);
        if (!R.witness.empty()) {
            Json w = Json::array();
            for (int i : R.witness) w.push_back(Json(i));
            rep.results().set("witness", std::move(w));
        }
        rep.check("verdict_computed", true);
    } else {
        auto CE = bp::separation::kirchberger_counterexample(
            delta, eps, c.trials, static_cast<unsigned>(c.seed), tol);
        rep.inputs().set("delta", Json(delta));
        rep.inputs().set("eps", Json(eps));
        rep.results().set("disk_count", Json(static_cast<int>(CE.B.size())));
        rep.check("open_ball_covered", CE.ball_covered);
        rep.check("covering_minimal", CE.covering_minimal);
        rep.check("a_in_conv_B", CE.a_in_conv_B);
        rep.check("not_unit_separable", !CE.unit_separable);
    }
    return rep.finish(c);
}

int run_es_search(const Common& c, int m) {
    auto tol = tol_of(c);
    auto scene = bp::io::load_scene(c.scene_path);
    const auto& A = scene.points.empty() ? scene.centers : scene.points;
    Report rep("es-search");
    rep.inputs().set("m", Json(m));
    auto res = bp::hull::es_search(A, m, tol);
    if (res) {
        Json idx = Json::array();
        std::vector<Vec> sub;
        for (int i : *res) {
            idx.push_back(Json(i));
            sub.push_back(A[i]);
        }
        rep.results().set("found", Json(true));
        rep.results().set("subset", std::move(idx));
        rep.check("subset_in_spindle_position", bp::hull::spindle_position(sub, tol));
    } else {
        rep.results().set("found", Json(false));
        rep.check("search_exhausted", true);
    }
    return rep.finish(c);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spindle convexity and ball-polyhedra toolbox"};
    app.require_subcommand(1);

    Common c_hull, c_bp3, c_euler, c_std, c_dowker, c_ext, c_mae, c_tit, c_kp, c_ill,
        c_sep, c_kir, c_es;
    double dowker_r = 0.5, ext_r = 0.5, kir_delta = 0.5, kir_eps = 0.25;
    std::string dowker_range = "4..8", dowker_setting = "all";
    std::string ext_setting = "inscribed", ext_obj = "perimeter", ext_sense = "max";
    int ext_n = 5, ext_restarts = 32, mae_dim = 4, es_m = 3;
    bool kp_paper = false;

    auto* hull2d = app.add_subcommand("hull2d", "2D spindle convex hull");
    add_common(hull2d, c_hull);
    auto* bp3s = app.add_subcommand("bp3-structure", "3D ball-polyhedron boundary");
    add_common(bp3s, c_bp3);
    auto* euler = app.add_subcommand("euler-check", "Euler-Poincare check");
    add_common(euler, c_euler);
    auto* stdn = app.add_subcommand("standardness", "standardness and face lattice");
    add_common(stdn, c_std);

    auto* dowker = app.add_subcommand("dowker", "Dowker-type inequality tables");
    add_common(dowker, c_dowker, false);
    dowker->add_option("--r", dowker_r, "circle radius in (0,1)");
    dowker->add_option("--n", dowker_range, "side range, e.g. 4..8");
    dowker->add_option("--setting", dowker_setting,
                       "inscribed-perimeter|inscribed-area|circumscribed-area|"
                       "circumscribed-perimeter|all");

    auto* ext = app.add_subcommand("extremal", "extremal disk-polygon search");
    add_common(ext, c_ext, false);
    ext->add_option("--r", ext_r, "circle radius in (0,1)");
    ext->add_option("--n", ext_n, "number of sides");
    ext->add_option("--setting", ext_setting, "inscribed|circumscribed");
    ext->add_option("--objective", ext_obj, "perimeter|area");
    ext->add_option("--sense", ext_sense, "max|min");
    ext->add_option("--restarts", ext_restarts, "multistart count");

    auto* mae = app.add_subcommand("maehara", "Maehara counterexample family");
    add_common(mae, c_mae, false);
    mae->add_option("--dim", mae_dim, "ambient dimension, at least 4");

    auto* tit = app.add_subcommand("titeica", "Titeica four-circle check");
    add_common(tit, c_tit);

    auto* kp = app.add_subcommand("kneser-poulsen", "contraction experiments");
    add_common(kp, c_kp);
    kp->add_flag("--paper-configs", kp_paper, "run the built-in polar configurations");

    auto* ill = app.add_subcommand("illuminate", "six-direction illumination");
    add_common(ill, c_ill);

    auto* sep = app.add_subcommand("separate", "separation by spheres");
    add_common(sep, c_sep);

    auto* kir = app.add_subcommand("kirchberger", "Kirchberger counterexample / verdict");
    add_common(kir, c_kir);
    kir->add_option("--delta", kir_delta, "distance from a to b0, in (0,1)");
    kir->add_option("--ceps", kir_eps, "covering cap radius");

    auto* es = app.add_subcommand("es-search", "spindle convex position search");
    add_common(es, c_es);
    es->add_option("--m", es_m, "subset size");

    CLI11_PARSE(app, argc, argv);

    try {
        if (hull2d->parsed()) return run_hull2d(c_hull);
        if (bp3s->parsed()) return run_bp3_structure(c_bp3);
        if (euler->parsed()) return run_euler_check(c_euler);
        if (stdn->parsed()) return run_standardness(c_std);
        if (dowker->parsed()) return run_dowker(c_dowker, dowker_r, dowker_range, dowker_setting);
        if (ext->parsed())
            return run_extremal(c_ext, ext_r, ext_n, ext_setting, ext_obj, ext_sense,
                                ext_restarts);
        if (mae->parsed()) return run_maehara(c_mae, mae_dim);
        if (tit->parsed()) return run_titeica(c_tit);
        if (kp->parsed()) return run_kneser_poulsen(c_kp, kp_paper);
        if (ill->parsed()) return run_illuminate(c_ill);
        if (sep->parsed()) return run_separate(c_sep);
        if (kir->parsed()) return run_kirchberger(c_kir, kir_delta, kir_eps);
        if (es->parsed()) return run_es_search(c_es, es_m);
    } catch (const bp::io::SceneError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const bp::DegenerateConfiguration& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const bp::constructions::Degenerate& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "property violation: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
