#pragma once

#include <vector>

namespace lmg {

inline constexpr double kKappaCritical = 1.0 / 3.0;
inline constexpr double kCriticalEnergy = 0.0;

/// Canonical phase-space point of the classical (j -> infinity) limit.
/// The parameterization lives on the disk p^2 + q^2 <= 4.
struct PhasePoint {
    double p = 0.0;
    double q = 0.0;
};

struct ClassicalCriticalData {
    double kappa_c = kKappaCritical;
    double critical_energy = kCriticalEnergy;
    std::vector<PhasePoint> fixed_points;  // minima first (+q before -q), saddle last
    double fixed_point_energy = 0.0;       // energy of the minima
};

struct SurfacePoint {
    double p = 0.0;
    double q = 0.0;
    bool inside = false;   // p^2 + q^2 <= 4
    double energy = 0.0;   // valid only when inside
};

struct SurfaceGrid {
    int resolution = 0;
    std::vector<SurfacePoint> points;  // row-major, p slow / q fast
};

/// Energy per spin: -(kappa q^2 / 8)(4 - p^2 - q^2) + (1-kappa)(p^2 + q^2)/4.
double classical_energy(const PhasePoint& point, double kappa);

/// Analytic gradient (dH/dp, dH/dq) of the energy surface.
PhasePoint classical_energy_gradient(const PhasePoint& point, double kappa);

/// Stationary points of the energy surface and their energy.
ClassicalCriticalData fixed_points(double kappa);

/// Quench strength that parks the post-quench mean energy at the
/// critical energy 0: -kappa (3 kappa - 1) / (kappa + 1), for
/// 1/3 < kappa < 1.
double critical_quench_strength(double kappa);

/// Regular resolution x resolution grid over [-2, 2]^2 with energies on
/// the physical disk; points outside it are flagged invalid.
SurfaceGrid energy_surface_grid(double kappa, int resolution);

/// Classical density of states (1/2pi) Int delta(eps - H_c) dp dq.
/// Returns 0 outside the classical energy range and +infinity exactly
/// at the separatrix energy 0 when kappa > 1/3 (logarithmic divergence).
double classical_dos(double energy, double kappa);

/// [min, max] of the energy surface over the disk.
std::pair<double, double> classical_energy_range(double kappa);

}  // namespace lmg
