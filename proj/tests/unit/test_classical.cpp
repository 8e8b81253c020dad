#include <cmath>
#include <limits>
#include <stdexcept>

#include "doctest.h"
#include "lmg/classical.hpp"
#include "lmg/quadrature.hpp"

using namespace lmg;

TEST_SUITE("classical") {

TEST_CASE("energy at the origin is zero") {
    for (double kappa : {0.0, 0.2, 1.0 / 3.0, 0.7, 1.0})
        CHECK(classical_energy({0.0, 0.0}, kappa) == 0.0);
}

TEST_CASE("energy at the broken-phase minima") {
    const double kappa = 2.0 / 3.0;
    const double q0 = std::sqrt((3.0 * kappa - 1.0) / kappa);
    CHECK(classical_energy({0.0, q0}, kappa) == doctest::Approx(-0.1875).epsilon(1e-13));
    CHECK(classical_energy({0.0, -q0}, kappa) == doctest::Approx(-0.1875).epsilon(1e-13));
}

TEST_CASE("analytic gradient matches finite differences") {
    const double kappa = 0.5;
    const double h = 1e-5;
    for (int ip = 0; ip <= 10; ++ip)
        for (int iq = 0; iq <= 10; ++iq) {
            const double p = -1.4 + 2.8 * ip / 10.0;
            const double q = -1.4 + 2.8 * iq / 10.0;
            const PhasePoint grad = classical_energy_gradient({p, q}, kappa);
            const double fd_p = (classical_energy({p + h, q}, kappa) -
                                 classical_energy({p - h, q}, kappa)) /
                                (2.0 * h);
            const double fd_q = (classical_energy({p, q + h}, kappa) -
                                 classical_energy({p, q - h}, kappa)) /
                                (2.0 * h);
            CHECK(std::abs(grad.p - fd_p) <= 1e-6);
            CHECK(std::abs(grad.q - fd_q) <= 1e-6);
        }
}

TEST_CASE("points off the disk are rejected") {
    CHECK_THROWS_AS(classical_energy({2.0, 2.0}, 0.5), std::invalid_argument);
    CHECK_NOTHROW(classical_energy({2.0, 0.0}, 0.5));
}

TEST_CASE("fixed points in the symmetric phase") {
    for (double kappa : {0.2, 1.0 / 3.0}) {
        const ClassicalCriticalData data = fixed_points(kappa);
        CHECK(data.kappa_c == 1.0 / 3.0);
        CHECK(data.critical_energy == 0.0);
        REQUIRE(data.fixed_points.size() == 1);
        CHECK(data.fixed_points[0].p == 0.0);
        CHECK(data.fixed_points[0].q == 0.0);
        CHECK(data.fixed_point_energy == 0.0);
    }
}

TEST_CASE("fixed points in the broken phase") {
    const ClassicalCriticalData data = fixed_points(2.0 / 3.0);
    REQUIRE(data.fixed_points.size() == 3);
    CHECK(data.fixed_points[0].q == doctest::Approx(1.224744871391589).epsilon(1e-14));
    CHECK(data.fixed_points[1].q == doctest::Approx(-1.224744871391589).epsilon(1e-14));
    CHECK(data.fixed_points[2].q == 0.0);
    CHECK(data.fixed_point_energy == doctest::Approx(-0.1875).epsilon(1e-14));

    for (const PhasePoint& pt : data.fixed_points) {
        const PhasePoint g = classical_energy_gradient(pt, 2.0 / 3.0);
        CHECK(std::hypot(g.p, g.q) <= 1e-12);
    }
}

TEST_CASE("critical quench strength") {
    CHECK(critical_quench_strength(0.5) == doctest::Approx(-1.0 / 6.0).epsilon(1e-14));
    CHECK(critical_quench_strength(0.8) == doctest::Approx(-0.6222222222222222).epsilon(1e-12));
    CHECK(std::abs(critical_quench_strength(1.0 / 3.0 + 1e-9)) <= 1e-8);
    CHECK_THROWS_AS(critical_quench_strength(1.0 / 3.0), std::invalid_argument);
    CHECK_THROWS_AS(critical_quench_strength(1.0), std::invalid_argument);
    CHECK_THROWS_AS(critical_quench_strength(0.2), std::invalid_argument);
}

TEST_CASE("energy surface grid extrema") {
    const int res = 41;
    SUBCASE("symmetric phase: global minimum at the origin") {
        const SurfaceGrid grid = energy_surface_grid(0.3 / 3.0, res);
        double best = std::numeric_limits<double>::infinity();
        double bp = 0, bq = 0;
        for (const auto& pt : grid.points)
            if (pt.inside && pt.energy < best) {
                best = pt.energy;
                bp = pt.p;
                bq = pt.q;
            }
        CHECK(bp == 0.0);
        CHECK(bq == 0.0);
    }
    SUBCASE("broken phase: minima near the classical wells") {
        const SurfaceGrid grid = energy_surface_grid(2.0 / 3.0, res);
        const double q0 = std::sqrt(1.5);
        const double step = 4.0 / (res - 1);
        double best = std::numeric_limits<double>::infinity();
        for (const auto& pt : grid.points)
            if (pt.inside && pt.energy < best) best = pt.energy;
        // every grid minimum is adjacent to one of (0, +-q0)
        for (const auto& pt : grid.points)
            if (pt.inside && pt.energy == best) {
                CHECK(std::abs(pt.p) <= step + 1e-12);
                CHECK(std::min(std::abs(pt.q - q0), std::abs(pt.q + q0)) <= step + 1e-12);
            }
    }
}

TEST_CASE("energy surface symmetry is exact") {
    const SurfaceGrid grid = energy_surface_grid(0.61, 21);
    const int res = grid.resolution;
    auto at = [&](int ip, int iq) -> const SurfacePoint& {
        return grid.points[static_cast<std::size_t>(ip) * res + iq];
    };
    for (int ip = 0; ip < res; ++ip)
        for (int iq = 0; iq < res; ++iq) {
            const auto& a = at(ip, iq);
            const auto& b = at(res - 1 - ip, iq);  // p -> -p
            const auto& c = at(ip, res - 1 - iq);  // q -> -q
            if (a.inside) {
                CHECK(a.energy == b.energy);
                CHECK(a.energy == c.energy);
            }
        }
    CHECK_THROWS_AS(energy_surface_grid(0.5, 1), std::invalid_argument);
}

TEST_CASE("free-limit density of states is flat") {
    for (double eps : {0.1, 0.5, 0.9})
        CHECK(classical_dos(eps, 0.0) == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("logarithmic growth near the separatrix") {
    const double kappa = 2.0 / 3.0;
    const double r1 = classical_dos(1e-2, kappa);
    const double r2 = classical_dos(1e-3, kappa);
    const double r3 = classical_dos(1e-4, kappa);
    CHECK(r2 > r1);
    CHECK(r3 > r2);
    // log divergence: equal decade steps add a constant amount
    const double d1 = r2 - r1;
    const double d2 = r3 - r2;
    CHECK(std::abs(d2 - d1) <= 0.1 * d1);
    // same behaviour approaching from below
    CHECK(classical_dos(-1e-4, kappa) > classical_dos(-1e-3, kappa));
}

TEST_CASE("divergence marker and out-of-range zeros") {
    const double kappa = 2.0 / 3.0;
    CHECK(std::isinf(classical_dos(0.0, kappa)));
    const auto [lo, hi] = classical_energy_range(kappa);
    CHECK(lo == doctest::Approx(-0.1875));
    CHECK(hi == doctest::Approx(1.0 / 3.0));
    CHECK(classical_dos(lo - 0.01, kappa) == 0.0);
    CHECK(classical_dos(hi + 0.01, kappa) == 0.0);
    CHECK(classical_dos(-1e-3, 0.2) == 0.0);
    CHECK(classical_dos(lo + 1e-3, kappa) > 0.0);
}

TEST_CASE("grid-count oracle for the level-set area derivative") {
    const double kappa = 0.5;
    const double eps = -0.05;
    const int cells = 2000;
    const double cell = 4.0 / cells;
    const double d_eps = 2e-3;

    auto sublevel_area = [&](double e) {
        long count = 0;
        for (int ip = 0; ip < cells; ++ip) {
            const double p = -2.0 + (ip + 0.5) * cell;
            for (int iq = 0; iq < cells; ++iq) {
                const double q = -2.0 + (iq + 0.5) * cell;
                if (p * p + q * q > 4.0) continue;
                if (classical_energy({p, q}, kappa) <= e) ++count;
            }
        }
        return count * cell * cell;
    };

    const double dA = (sublevel_area(eps + d_eps) - sublevel_area(eps - d_eps)) / (2.0 * d_eps);
    const double expected = dA / (2.0 * std::acos(-1.0));
    const double rho = classical_dos(eps, kappa);
    CHECK(std::abs(rho - expected) <= 0.02 * expected);
}

TEST_CASE("density of states integrates to the disk area over 2 pi") {
    QuadOptions opt;
    opt.abs_tol = 1e-6;
    opt.rel_tol = 1e-6;

    SUBCASE("symmetric phase") {
        const double kappa = 0.2;
        const auto [lo, hi] = classical_energy_range(kappa);
        const double total =
            integrate([&](double e) { return classical_dos(e, kappa); }, lo + 1e-10, hi, opt);
        CHECK(total == doctest::Approx(2.0).epsilon(1e-3));
    }
    SUBCASE("broken phase, skipping the log point") {
        const double kappa = 0.5;
        const auto [lo, hi] = classical_energy_range(kappa);
        const double hole = 1e-6;
        const double total =
            integrate([&](double e) { return classical_dos(e, kappa); }, lo, -hole, opt) +
            integrate([&](double e) { return classical_dos(e, kappa); }, hole, hi, opt);
        CHECK(total == doctest::Approx(2.0).epsilon(1e-3));
    }
}

TEST_CASE("broken-phase histogram peak sits at the critical energy") {
    // max over a uniform grid straddling 0 lands in the bin containing 0
    const double kappa = 2.0 / 3.0;
    const auto [lo, hi] = classical_energy_range(kappa);
    const int n = 101;
    double best = -1.0;
    int best_i = -1;
    for (int i = 0; i < n; ++i) {
        const double e = lo + (hi - lo) * (i + 0.5) / n;
        const double r = classical_dos(e, kappa);
        if (std::isfinite(r) && r > best) {
            best = r;
            best_i = i;
        }
    }
    const double width = (hi - lo) / n;
    const double center = lo + (best_i + 0.5) * width;
    CHECK(std::abs(center) <= width);
}

TEST_CASE("kappa validation") {
    CHECK_THROWS_AS(classical_dos(0.1, -0.2), std::invalid_argument);
    CHECK_THROWS_AS(classical_dos(0.1, 1.2), std::invalid_argument);
    CHECK_THROWS_AS(fixed_points(2.0), std::invalid_argument);
}

}  // TEST_SUITE
