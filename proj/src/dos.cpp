#include "lmg/dos.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lmg/classical.hpp"

namespace lmg {

DosHistogram quantum_dos(std::span<const double> values, int n_spins, int bins) {
    if (values.empty()) throw std::invalid_argument("quantum_dos: no eigenvalues");
    if (bins < 1) throw std::invalid_argument("quantum_dos: bins must be >= 1");
    if (n_spins < 1) throw std::invalid_argument("quantum_dos: n_spins must be >= 1");

    const double lo = values.front() / n_spins;
    const double hi = values.back() / n_spins;
    if (!(hi > lo)) throw std::invalid_argument("quantum_dos: zero spectral span");

    DosHistogram hist;
    hist.bin_edges.resize(bins + 1);
    for (int i = 0; i <= bins; ++i) hist.bin_edges[i] = lo + (hi - lo) * i / bins;
    hist.counts.assign(bins, 0.0);

    const double width = (hi - lo) / bins;
    for (double v : values) {
        const double eps = v / n_spins;
        // ceil(...) - 1 puts edge values into the lower bin.
        int idx = static_cast<int>(std::ceil((eps - lo) / width)) - 1;
        idx = std::clamp(idx, 0, bins - 1);
        hist.counts[idx] += 1.0;
    }

    const double total = static_cast<double>(values.size());
    hist.normalized_density.resize(bins);
    for (int i = 0; i < bins; ++i) hist.normalized_density[i] = hist.counts[i] / (total * width);
    return hist;
}

DosComparison compare_to_classical(const DosHistogram& hist, double kappa) {
    const std::size_t bins = hist.bins();
    if (bins == 0) throw std::invalid_argument("compare_to_classical: empty histogram");
    const double width = hist.bin_width();

    DosComparison cmp;
    if (kappa > kKappaCritical) {
        for (std::size_t i = 0; i < bins; ++i)
            if (hist.bin_edges[i] <= 0.0 && 0.0 <= hist.bin_edges[i + 1])
                cmp.excluded_bins.push_back(static_cast<int>(i));
    }

    std::vector<double> classical(bins);
    double integral = 0.0;
    for (std::size_t i = 0; i < bins; ++i) {
        classical[i] = classical_dos(hist.bin_center(i), kappa);
        if (!std::isfinite(classical[i])) {
            // A bin center sitting exactly on the divergence; drop it.
            classical[i] = 0.0;
            if (std::find(cmp.excluded_bins.begin(), cmp.excluded_bins.end(),
                          static_cast<int>(i)) == cmp.excluded_bins.end())
                cmp.excluded_bins.push_back(static_cast<int>(i));
        }
        integral += classical[i] * width;
    }
    if (integral <= 0.0)
        throw std::invalid_argument("compare_to_classical: classical density vanishes on support");
    for (double& c : classical) c /= integral;

    std::sort(cmp.excluded_bins.begin(), cmp.excluded_bins.end());
    cmp.excluded_bins.erase(std::unique(cmp.excluded_bins.begin(), cmp.excluded_bins.end()),
                            cmp.excluded_bins.end());

    double l1 = 0.0;
    for (std::size_t i = 0; i < bins; ++i) {
        if (std::binary_search(cmp.excluded_bins.begin(), cmp.excluded_bins.end(),
                               static_cast<int>(i)))
            continue;
        l1 += std::abs(hist.normalized_density[i] - classical[i]) * width;
    }
    cmp.l1_distance = l1;
    cmp.classical_density = std::move(classical);
    return cmp;
}

}  // namespace lmg
