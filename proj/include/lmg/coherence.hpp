#pragma once

#include <complex>
#include <span>
#include <vector>

#include "lmg/matrix.hpp"

namespace lmg {

/// Multiple-quantum-coherence spectrum of a state with respect to a
/// reference eigenbasis whose eigenvalues are the integer labels
/// supplied alongside the state. Labels must be uniformly spaced;
/// intensities live on multiples of that spacing (label_step), all
/// other coherence orders are exactly zero. In the even-parity sector
/// the labels are the J_z eigenvalues m, spaced by 2.
struct MqcSpectrum {
    int label_step = 1;
    std::vector<double> intensities;  // order ell = label_step * (index - max_offset)
    double zero_mode = 0.0;           // I_0
    double width = 0.0;               // sqrt(sum_ell ell^2 I_ell)

    int max_offset() const { return (static_cast<int>(intensities.size()) - 1) / 2; }

    /// I_ell for a physical coherence order ell; exact 0 off the support.
    double intensity(int ell) const;

    /// sum_ell I_ell (= Tr[rho^2] for consistent input).
    double total() const;
};

/// MQC spectrum of a pure state given its amplitudes zeta over the
/// reference basis: I_ell = sum_m |zeta_m|^2 |zeta_{m+ell}|^2.
/// Requires a normalized state (|1 - sum |zeta|^2| <= 1e-8).
MqcSpectrum mqc_from_amplitudes(std::span<const std::complex<double>> zeta,
                                std::span<const int> labels);

/// Same, for a state already described by basis probabilities.
MqcSpectrum mqc_from_probabilities(std::span<const double> probabilities,
                                   std::span<const int> labels);

/// MQC spectrum of a density matrix: I_ell is the squared Frobenius
/// norm of the ell-coherence band. Requires Hermiticity within 1e-10
/// and unit trace within 1e-8.
MqcSpectrum mqc_from_matrix(const CMatrix& rho, std::span<const int> labels);
MqcSpectrum mqc_from_matrix(const Matrix& rho, std::span<const int> labels);

/// Maximum of a sampled I_0 series (non-empty).
double i0_max(std::span<const double> i0_series);

}  // namespace lmg
