#include "lmg/diagonal_ensemble.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "lmg/errors.hpp"

namespace lmg {

DiagonalEnsemble build_diagonal_ensemble(const QuenchSetup& setup) {
    const std::size_t dim = setup.psi0.size();
    const auto& values = setup.eig1.values;

    const double gap_tol = 1e-10 * setup.h1.max_abs();
    for (std::size_t k = 0; k + 1 < dim; ++k) {
        const double gap = values[k + 1] - values[k];
        if (gap <= gap_tol)
            throw numerical_error(
                "build_diagonal_ensemble: levels " + std::to_string(k) + " and " +
                std::to_string(k + 1) + " are degenerate (gap " + std::to_string(gap) +
                "); the time average does not reduce to populations");
    }

    DiagonalEnsemble ens;
    ens.params = setup.params;
    ens.d_matrix = Matrix(dim, dim, 0.0);
    for (std::size_t k = 0; k < dim; ++k) {
        const double weight = setup.overlaps[k] * setup.overlaps[k];
        if (weight == 0.0) continue;
        const double* vk = setup.eig1.eigenvector(k).data();
        for (std::size_t a = 0; a < dim; ++a) {
            const double wa = weight * vk[a];
            double* row = ens.d_matrix.row(a).data();
            for (std::size_t b = 0; b < dim; ++b) row[b] += wa * vk[b];
        }
    }
    return ens;
}

MqcSpectrum mqc_of_ensemble(const DiagonalEnsemble& ensemble) {
    const SpinSector sector = build_sector(ensemble.params.n_spins);
    return mqc_from_matrix(ensemble.d_matrix, sector.m_values);
}

double rescaled_width(const DiagonalEnsemble& ensemble) {
    return mqc_of_ensemble(ensemble).width / ensemble.params.n_spins;
}

std::vector<DMapEntry> d_matrix_map(const DiagonalEnsemble& ensemble) {
    const SpinSector sector = build_sector(ensemble.params.n_spins);
    const std::size_t dim = ensemble.d_matrix.rows();
    const double n = ensemble.params.n_spins;

    std::vector<DMapEntry> entries;
    entries.reserve(dim * dim);
    for (std::size_t row = 0; row < dim; ++row)
        for (std::size_t col = 0; col < dim; ++col) {
            DMapEntry e;
            e.m_over_n = sector.m_values[col] / n;
            e.l_over_n = (sector.m_values[row] - sector.m_values[col]) / n;
            e.value = ensemble.d_matrix(row, col);
            entries.push_back(e);
        }
    return entries;
}

}  // namespace lmg
