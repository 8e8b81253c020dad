#pragma once

#include <span>
#include <vector>

namespace lmg {

/// Histogram of eigenvalues per spin. counts keeps raw occupancies;
/// normalized_density is scaled so the histogram integrates to one.
struct DosHistogram {
    std::vector<double> bin_edges;           // bins + 1 ascending edges
    std::vector<double> counts;              // one entry per bin
    std::vector<double> normalized_density;  // counts / (total * bin width)

    std::size_t bins() const { return counts.size(); }
    double bin_center(std::size_t i) const {
        return 0.5 * (bin_edges[i] + bin_edges[i + 1]);
    }
    double bin_width() const { return bin_edges[1] - bin_edges[0]; }
};

struct DosComparison {
    double l1_distance = 0.0;
    std::vector<int> excluded_bins;         // bins dropped from the L1 sum
    std::vector<double> classical_density;  // at bin centers, unit integral
};

/// Bin eigenvalues / n_spins into `bins` uniform bins on [min, max].
/// Values landing exactly on an interior edge count toward the lower bin.
DosHistogram quantum_dos(std::span<const double> values, int n_spins, int bins);

/// L1 distance between the unit-normalized histogram and the classical
/// density sampled at bin centers (renormalized to unit integral over
/// the same support). For kappa above the critical coupling the bin(s)
/// containing the divergent energy 0 are excluded from the distance.
DosComparison compare_to_classical(const DosHistogram& hist, double kappa);

}  // namespace lmg
