#include "lmg/classical.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "lmg/quadrature.hpp"

namespace lmg {
namespace {

void check_kappa(double kappa) {
    if (!(kappa >= 0.0 && kappa <= 1.0))
        throw std::invalid_argument("classical: kappa must lie in [0, 1], got " +
                                    std::to_string(kappa));
}

// H_c(p, q) = A(q) p^2 + B(q): linear in p^2, which is what makes the
// density-of-states integral reducible to one dimension.
double coeff_a(double q, double kappa) { return kappa * q * q / 8.0 + (1.0 - kappa) / 4.0; }

double coeff_b(double q, double kappa) {
    const double q2 = q * q;
    return kappa * q2 * q2 / 8.0 - kappa * q2 / 2.0 + (1.0 - kappa) * q2 / 4.0;
}

// Root of B(q) - energy on a bracket where B is monotone.
double turning_point(double energy, double kappa, double lo, double hi) {
    double flo = coeff_b(lo, kappa) - energy;
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        const double fmid = coeff_b(mid, kappa) - energy;
        if ((fmid > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Integrand 1/sqrt(A (eps - B)); zero outside the allowed region, which
// only triggers within roundoff of a turning point.
double dos_integrand(double q, double energy, double kappa) {
    const double v = (energy - coeff_b(q, kappa)) * coeff_a(q, kappa);
    if (v <= 0.0) return 0.0;
    return 1.0 / std::sqrt(v);
}

// Integrate the DOS integrand over [qa, qb]; turning-point endpoints are
// regularized with q = q_t -/+ u^2 so the 1/sqrt(...) edge disappears.
double integrate_branch(double energy, double kappa, double qa, double qb, bool singular_left,
                        bool singular_right) {
    if (!(qa < qb)) return 0.0;
    const QuadOptions opt{};
    const double qm = 0.5 * (qa + qb);
    double total = 0.0;

    if (singular_left) {
        const double span = std::sqrt(qm - qa);
        total += integrate(
            [&](double u) { return 2.0 * u * dos_integrand(qa + u * u, energy, kappa); }, 0.0,
            span, opt);
    } else {
        total += integrate([&](double q) { return dos_integrand(q, energy, kappa); }, qa, qm,
                           opt);
    }

    if (singular_right) {
        const double span = std::sqrt(qb - qm);
        total += integrate(
            [&](double u) { return 2.0 * u * dos_integrand(qb - u * u, energy, kappa); }, 0.0,
            span, opt);
    } else {
        total += integrate([&](double q) { return dos_integrand(q, energy, kappa); }, qm, qb,
                           opt);
    }
    return total;
}

}  // namespace

double classical_energy(const PhasePoint& point, double kappa) {
    check_kappa(kappa);
    const double r2 = point.p * point.p + point.q * point.q;
    if (r2 > 4.0)
        throw std::invalid_argument("classical_energy: point outside the disk p^2+q^2 <= 4");
    return -(kappa * point.q * point.q / 8.0) * (4.0 - r2) + (1.0 - kappa) / 4.0 * r2;
}

PhasePoint classical_energy_gradient(const PhasePoint& point, double kappa) {
    check_kappa(kappa);
    const double p = point.p, q = point.q;
    PhasePoint grad;
    grad.p = p * (kappa * q * q / 4.0 + (1.0 - kappa) / 2.0);
    grad.q = q * (-kappa + kappa * p * p / 4.0 + kappa * q * q / 2.0 + (1.0 - kappa) / 2.0);
    return grad;
}

ClassicalCriticalData fixed_points(double kappa) {
    check_kappa(kappa);
    ClassicalCriticalData data;
    if (kappa <= kKappaCritical) {
        data.fixed_points = {PhasePoint{0.0, 0.0}};
        data.fixed_point_energy = 0.0;
    } else {
        const double q0 = std::sqrt((3.0 * kappa - 1.0) / kappa);
        data.fixed_points = {PhasePoint{0.0, q0}, PhasePoint{0.0, -q0}, PhasePoint{0.0, 0.0}};
        data.fixed_point_energy = -(3.0 * kappa - 1.0) * (3.0 * kappa - 1.0) / (8.0 * kappa);
    }
    return data;
}

double critical_quench_strength(double kappa) {
    if (!(kappa > kKappaCritical && kappa < 1.0))
        throw std::invalid_argument(
            "critical_quench_strength: kappa must lie in (1/3, 1), got " +
            std::to_string(kappa));
    return -kappa * (3.0 * kappa - 1.0) / (kappa + 1.0);
}

SurfaceGrid energy_surface_grid(double kappa, int resolution) {
    check_kappa(kappa);
    if (resolution < 2) throw std::invalid_argument("energy_surface_grid: resolution < 2");

    // Mirror the coordinate axis so the grid is exactly symmetric under
    // sign flips (the energy itself is exactly even in p and q).
    std::vector<double> axis(resolution);
    for (int i = 0; i <= (resolution - 1) / 2; ++i) {
        axis[i] = -2.0 + 4.0 * i / (resolution - 1);
        axis[resolution - 1 - i] = -axis[i];
    }

    SurfaceGrid grid;
    grid.resolution = resolution;
    grid.points.reserve(static_cast<std::size_t>(resolution) * resolution);
    for (int ip = 0; ip < resolution; ++ip) {
        const double p = axis[ip];
        for (int iq = 0; iq < resolution; ++iq) {
            const double q = axis[iq];
            SurfacePoint pt{p, q, p * p + q * q <= 4.0, 0.0};
            if (pt.inside) pt.energy = classical_energy({p, q}, kappa);
            grid.points.push_back(pt);
        }
    }
    return grid;
}

std::pair<double, double> classical_energy_range(double kappa) {
    check_kappa(kappa);
    const double e_min =
        kappa > kKappaCritical
            ? -(3.0 * kappa - 1.0) * (3.0 * kappa - 1.0) / (8.0 * kappa)
            : 0.0;
    return {e_min, 1.0 - kappa};
}

double classical_dos(double energy, double kappa) {
    check_kappa(kappa);
    const auto [e_min, e_max] = classical_energy_range(kappa);
    if (energy < e_min || energy > e_max) return 0.0;

    const double inv_pi = 1.0 / std::acos(-1.0);

    if (kappa > kKappaCritical) {
        if (energy == 0.0) return std::numeric_limits<double>::infinity();
        const double q0 = std::sqrt((3.0 * kappa - 1.0) / kappa);
        if (energy < 0.0) {
            if (energy <= e_min) return 0.0;
            // B dips below 0 between two turning points around its minimum.
            const double q1 = turning_point(energy, kappa, 0.0, q0);
            const double q2 = turning_point(energy, kappa, q0, 2.0);
            return inv_pi * integrate_branch(energy, kappa, q1, q2, true, true);
        }
        const double qt = turning_point(energy, kappa, q0, 2.0);
        return inv_pi * integrate_branch(energy, kappa, 0.0, qt, false, true);
    }

    if (energy <= 0.0) return 0.0;
    const double qt = turning_point(energy, kappa, 0.0, 2.0);
    return inv_pi * integrate_branch(energy, kappa, 0.0, qt, false, true);
}

}  // namespace lmg
