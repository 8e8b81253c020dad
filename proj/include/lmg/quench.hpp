#pragma once

#include <complex>
#include <span>
#include <vector>

#include "lmg/coherence.hpp"
#include "lmg/spin_sector.hpp"
#include "lmg/tridiag_eig.hpp"

namespace lmg {

/// Everything needed to evolve the pre-quench ground state under the
/// post-quench Hamiltonian: both matrices, the full eigendecomposition
/// of h1, the initial state and its overlaps c_k with the h1 eigenbasis.
struct QuenchSetup {
    ModelParams params;
    SpinSector sector;
    SymTridiagonal h0;
    SymTridiagonal h1;
    EigenDecomposition eig1;
    std::vector<double> psi0;      // ground state of h0, Dicke basis
    std::vector<double> overlaps;  // c_k = <k|psi0>

    /// <psi0|H1|psi0> = sum_k c_k^2 E_k, conserved along the evolution.
    double initial_energy() const;
};

struct EvolvedAmplitudes {
    double time = 0.0;
    std::vector<std::complex<double>> zeta;  // <m|psi(t)>
};

struct MqcTrajectory {
    std::vector<double> times;
    std::vector<MqcSpectrum> spectra;
    std::vector<std::vector<double>> probabilities;  // |zeta_m(t)|^2 per time
};

struct WidthSeries {
    std::vector<double> times;
    std::vector<double> w;
    double w_bar = 0.0;  // filled by long-time averaging, else 0
};

struct PowerLawFit {
    double coefficient = 0.0;  // C in y = C * N^(-beta)
    double exponent = 0.0;     // beta
};

struct PeakScalingPoint {
    int n_spins = 0;
    double chi_max_ratio = 0.0;  // chi at the w_bar peak over chi_c
};

struct PeakScaling {
    std::vector<PeakScalingPoint> points;
    PowerLawFit fit;  // of |chi_max_ratio - 1| against N
};

/// Ground state of H0 plus the spectral data of H1. Requires
/// 1/3 < kappa < 1 (the phase whose quench can cross the transition).
QuenchSetup prepare(const ModelParams& params);

/// zeta_m(t) = sum_k V_mk c_k exp(-i E_k t): exact spectral evolution.
EvolvedAmplitudes evolve(const QuenchSetup& setup, double t);

/// Evaluate |zeta(t)|^2 directly into `probs` (size dim); the workhorse
/// behind every trajectory quantity.
void evolved_probabilities(const QuenchSetup& setup, double t, std::span<double> probs);

/// MQC spectrum and basis occupations for each sample time (ascending).
MqcTrajectory mqc_trajectory(const QuenchSetup& setup, std::span<const double> times);

/// I_0[rho(t)] = sum_m |zeta_m(t)|^4 for each sample time.
std::vector<double> i0_trajectory(const QuenchSetup& setup, std::span<const double> times);

/// max of I_0[rho(t)] over [0, tau] sampled with step dt, for one setup...
double i0_max_on_window(const QuenchSetup& setup, double tau, double dt);

/// ...and swept over a chi grid at fixed kappa and N.
std::vector<double> i0_max_scan(double kappa, int n_spins, std::span<const double> chi_values,
                                double tau, double dt);

/// w(t) = sqrt(sum_ell ell^2 I_ell[rho(t)]) for each sample time.
WidthSeries width_trajectory(const QuenchSetup& setup, std::span<const double> times);

/// Mean of w(t) over n_samples uniformly spaced times in [t0, t0 + T].
double long_time_avg_width(const QuenchSetup& setup, double t0 = 1e4, double t_window = 1e3,
                           int n_samples = 1000);

/// Least-squares fit of y = C * N^(-beta) through (n, y) pairs in
/// log-log space. Needs >= 3 points with positive y.
PowerLawFit fit_power_law(std::span<const double> n_values, std::span<const double> y_values);

/// Abscissa of the maximum of sampled data, refined by the parabola
/// through the three points around the discrete argmax; falls back to
/// the grid point at a boundary or when the points do not cap.
double parabolic_peak(std::span<const double> xs, std::span<const double> ys);

/// Location chi_max of the w_bar(chi) peak per system size (parabolic
/// refinement through the three points around the discrete maximum),
/// plus the power-law fit of |chi_max/chi_c - 1| against N.
/// chi_ratios are in units of the critical quench strength.
PeakScaling peak_location_scaling(double kappa, std::span<const int> n_values,
                                  std::span<const double> chi_ratios, double t0 = 1e4,
                                  double t_window = 1e3, int n_samples = 1000);

/// Uniform sample times: t_i = t0 + i * (t1 - t0) / (count - 1).
std::vector<double> linspace(double t0, double t1, int count);

}  // namespace lmg
