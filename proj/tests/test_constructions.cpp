#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "ballpoly/constructions.hpp"
#include "ballpoly/core.hpp"

using namespace ballpoly;
using namespace ballpoly::constructions;

namespace {

constexpr double kPi = 3.14159265358979323846;

Vec polar(double r, double t) { return vec2(r * std::cos(t), r * std::sin(t)); }

}  // namespace

TEST_CASE("titeica: symmetric configuration") {
    const Vec p = vec2(0.3, -0.2);
    std::vector<Vec> cs;
    for (int i = 0; i < 3; ++i)
        cs.push_back(p + vec2(std::cos(2 * kPi * i / 3), std::sin(2 * kPi * i / 3)));
    auto R = titeica_check(cs[0], cs[1], cs[2], p);
    CHECK(R.deviation < 1e-12);
}

TEST_CASE("titeica: random configurations") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ut(0.0, 2 * kPi), up(-1.0, 1.0);
    int done = 0;
    double worst = 0.0;
    while (done < 1000) {
        const Vec p = vec2(up(rng), up(rng));
        const double a = ut(rng), b = ut(rng), c = ut(rng);
        try {
            auto R = titeica_check(p + vec2(std::cos(a), std::sin(a)),
                                   p + vec2(std::cos(b), std::sin(b)),
                                   p + vec2(std::cos(c), std::sin(c)), p);
            worst = std::max(worst, R.deviation);
            ++done;
        } catch (const Degenerate&) {
        }
    }
    CHECK(worst < 1e-9);
}

TEST_CASE("titeica: degenerate pairs rejected") {
    const Vec p = vec2(0, 0);
    const Vec c1 = vec2(1, 0);
    CHECK_THROWS_AS(titeica_check(c1, c1, vec2(0, 1), p), Degenerate);
}

TEST_CASE("sphere family helly: spheres through a common circle") {
    // circle of radius 0.8 in the z = 0 plane; spheres centered on the axis
    std::vector<Sphere> fam;
    for (double t : {-0.5, 0.0, 0.4, 0.9})
        fam.push_back({vec3(0, 0, t), std::sqrt(0.64 + t * t)});
    auto R = sphere_family_helly_check(fam, 0);  // n=3, k=0: any 3 intersect in dim >= 1
    CHECK(R.hypothesis_met);
    REQUIRE(R.full.is_sphere());
    CHECK(R.full.intrinsic_dim == 1);
    CHECK(R.full.radius == doctest::Approx(0.8));
}

TEST_CASE("sphere family helly: hypothesis failure path") {
    std::vector<Sphere> two = {{vec3(0, 0, 0), 1.0}, {vec3(1, 0, 0), 1.0}};
    auto R = sphere_family_helly_check(two, 1);  // needs any-2 to meet in dim >= 2
    CHECK(!R.hypothesis_met);
    CHECK(R.witness.size() == 2);
}

TEST_CASE("sphere family helly: simplex sharpness fixture") {
    const double q = 1.0 / std::sqrt(3.0);
    std::vector<Sphere> simp = {{vec3(q, q, q), 1.0},
                                {vec3(q, -q, -q), 1.0},
                                {vec3(-q, q, -q), 1.0},
                                {vec3(-q, -q, q), 1.0}};
    // k = 0: subfamilies of size 3 intersect in 0-spheres (dim k, not k+1)
    auto R = sphere_family_helly_check(simp, 0);
    CHECK(!R.hypothesis_met);
    // the full intersection is a single point: the sharpness of k+1
    auto full = core::intersect_spheres(simp);
    CHECK(full.is_point());
}

TEST_CASE("g_m endpoint signs and the n=4 anchor") {
    CHECK(std::abs(g_m(3, 0.5)) < 1e-14);
    CHECK(g_m(3, 0.0) > 0.0);  // m = 3 touches zero instead of crossing
    for (int m : {4, 5, 6}) {
        CHECK(g_m(m, 1e-9) < 0.0);
        CHECK(g_m(m, 1.0 - 1e-9) > 0.0);
    }
    // derivative sign change around the m = 3 tangential root
    CHECK(g_m_deriv(3, 0.4) < 0.0);
    CHECK(g_m_deriv(3, 0.6) > 0.0);
}

TEST_CASE("maehara parameters") {
    auto P4 = maehara_parameters(4);
    CHECK(std::abs(P4.t_star - 0.5) <= 1e-12);
    CHECK(std::abs(g_m(3, P4.t_star)) <= 1e-13);
    CHECK(P4.r == doctest::Approx(0.5));
    CHECK(P4.d <= 1e-12);
    CHECK(std::abs(P4.r - P4.r_geometric) <= 1e-10);

    for (int n : {5, 6}) {
        auto P = maehara_parameters(n);
        CHECK(P.t_star > 0.0);
        CHECK(P.t_star < 1.0);
        CHECK(std::abs(g_m(n - 1, P.t_star)) <= 1e-13);
        CHECK(std::abs(P.r - P.r_geometric) <= 1e-10);
        // the simplex is inscribed in the unit circumsphere
        CHECK(P.apex.norm() == doctest::Approx(1.0));
        for (const Vec& v : P.base) CHECK(v.norm() == doctest::Approx(1.0));
    }
    CHECK_THROWS_AS(maehara_parameters(3), std::invalid_argument);
}

TEST_CASE("inversion is an involution") {
    std::mt19937_64 rng(5);
    std::normal_distribution<double> g(0.0, 1.0);
    const Vec c = vec3(0.2, -0.1, 0.4);
    for (int t = 0; t < 100; ++t) {
        Vec x = vec3(g(rng), g(rng), g(rng));
        if ((x - c).norm() < 1e-3) continue;
        const Vec y = invert(invert(x, c, 0.7), c, 0.7);
        CHECK((y - x).norm() <= 1e-12 * std::max(1.0, x.norm()));
    }
}

TEST_CASE("maehara family verification for n = 4, 5, 6") {
    for (int n : {4, 5, 6}) {
        auto F = maehara_family(n);
        CHECK(static_cast<int>(F.spheres.size()) == n + 2);
        for (const auto& s : F.spheres) CHECK(s.radius == doctest::Approx(1.0));
        // spheres pairwise distinct
        for (size_t i = 0; i < F.spheres.size(); ++i)
            for (size_t j = i + 1; j < F.spheres.size(); ++j)
                CHECK((F.spheres[i].center - F.spheres[j].center).norm() > 1e-6);
        CHECK(F.max_loo_residual < 1e-8);
        CHECK(F.full_intersection_empty);
        CHECK(F.infeasibility_margin > 1e-6);
    }
    CHECK_THROWS_AS(maehara_family(3), std::invalid_argument);
}

TEST_CASE("kp experiments: the diameter/circumradius configuration") {
    const Vec o = vec2(0, 0);
    std::vector<Vec> X = {o, polar(0.5, kPi / 3), polar(0.5, -kPi / 3)};
    std::vector<Vec> Y = {o, polar(0.5, kPi / 4), polar(0.5, -kPi / 4)};
    auto R = kp_experiments(X, Y);
    CHECK(R.inradius_ok);
    CHECK(R.diameter_delta < 0.0);
    CHECK(R.circumradius_delta < 0.0);
}

TEST_CASE("kp experiments: the width configuration") {
    const Vec o = vec2(0, 0);
    std::vector<Vec> X = {o, polar(0.8, kPi / 10), polar(0.8, -kPi / 10)};
    std::vector<Vec> Y = {o, polar(0.8, 0.0), polar(0.8, 0.0)};
    auto R = kp_experiments(X, Y);
    CHECK(R.inradius_ok);
    CHECK(R.width_delta < 0.0);
}

TEST_CASE("kp experiments: identity and invalid pairs") {
    std::vector<Vec> X = {vec2(0, 0), vec2(0.4, 0.2)};
    auto R = kp_experiments(X, X);
    CHECK(R.inradius_ok);
    CHECK(R.diameter_delta == doctest::Approx(0.0));
    CHECK(R.circumradius_delta == doctest::Approx(0.0));
    CHECK(R.width_delta == doctest::Approx(0.0));

    std::vector<Vec> Y = {vec2(0, 0), vec2(0.9, 0.4)};  // expansion
    CHECK_THROWS_AS(kp_experiments(X, Y), InvalidPair);
}

TEST_CASE("inradius monotonicity on random contraction pairs") {
    std::mt19937_64 rng(33);
    std::uniform_real_distribution<double> un(-0.4, 0.4), us(0.3, 1.0), ut(0.0, 2 * kPi);
    for (int t = 0; t < 1000; ++t) {
        std::vector<Vec> X, Y;
        const int N = 2 + static_cast<int>(rng() % 4);
        const double s = us(rng);
        const double a = ut(rng);
        Mat R(2, 2);
        R << std::cos(a), -std::sin(a), std::sin(a), std::cos(a);
        for (int i = 0; i < N; ++i) {
            X.push_back(vec2(un(rng), un(rng)));
            Y.push_back(s * (R * X.back()));
        }
        auto rep = kp_experiments(X, Y);
        CHECK(rep.inradius_ok);
    }
}

TEST_CASE("the r + R = 1 identity against the direct inscribed disk") {
    std::mt19937_64 rng(55);
    std::uniform_real_distribution<double> un(-0.4, 0.4);
    for (int t = 0; t < 25; ++t) {
        std::vector<Vec> X;
        const int N = 2 + static_cast<int>(rng() % 4);
        for (int i = 0; i < N; ++i) X.push_back(vec2(un(rng), un(rng)));
        auto cb = core::circumball(X);
        if (cb.radius > 0.98) continue;
        const double direct = inscribed_disk_radius(X);
        CHECK(std::abs(direct - (1.0 - cb.radius)) <= 1e-8);
    }
}
