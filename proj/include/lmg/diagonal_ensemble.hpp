#pragma once

#include <vector>

#include "lmg/coherence.hpp"
#include "lmg/matrix.hpp"
#include "lmg/quench.hpp"

namespace lmg {

/// Long-time averaged state in the Dicke basis:
/// D_{m+l,m} = sum_k <m+l|k><k|m> |<psi0|k>|^2. Real symmetric, unit
/// trace, positive semidefinite.
struct DiagonalEnsemble {
    Matrix d_matrix;
    ModelParams params;  // provenance: kappa, chi, n_spins
};

struct DMapEntry {
    double m_over_n = 0.0;
    double l_over_n = 0.0;
    double value = 0.0;
};

/// Build the averaged state from a quench setup. Fails loudly when the
/// post-quench spectrum has a (near-)degenerate pair, because dropping
/// the cross terms is only valid without degeneracies.
DiagonalEnsemble build_diagonal_ensemble(const QuenchSetup& setup);

/// MQC spectrum of the averaged state (labels are the sector's m values).
MqcSpectrum mqc_of_ensemble(const DiagonalEnsemble& ensemble);

/// Rescaled width w(rho_bar) / N.
double rescaled_width(const DiagonalEnsemble& ensemble);

/// Matrix entries reindexed to (m/N, l/N) for plotting.
std::vector<DMapEntry> d_matrix_map(const DiagonalEnsemble& ensemble);

}  // namespace lmg
