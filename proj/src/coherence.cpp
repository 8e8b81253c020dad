#include "lmg/coherence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lmg {
namespace {

int checked_label_step(std::span<const int> labels, std::size_t dim) {
    if (labels.size() != dim)
        throw std::invalid_argument("mqc: labels and state dimension disagree");
    if (dim == 0) throw std::invalid_argument("mqc: empty state");
    if (dim == 1) return 1;
    const int step = labels[1] - labels[0];
    if (step <= 0) throw std::invalid_argument("mqc: labels must be strictly increasing");
    for (std::size_t i = 1; i + 1 < dim; ++i)
        if (labels[i + 1] - labels[i] != step)
            throw std::invalid_argument("mqc: labels must be uniformly spaced");
    return step;
}

void finalize(MqcSpectrum& spec) {
    const int b_max = spec.max_offset();
    double w2 = 0.0;
    for (int b = -b_max; b <= b_max; ++b) {
        const double ell = static_cast<double>(spec.label_step) * b;
        w2 += ell * ell * spec.intensities[static_cast<std::size_t>(b + b_max)];
    }
    spec.zero_mode = spec.intensities[static_cast<std::size_t>(b_max)];
    spec.width = std::sqrt(w2);
}

}  // namespace

double MqcSpectrum::intensity(int ell) const {
    if (label_step == 0 || ell % label_step != 0) return 0.0;
    const int b = ell / label_step;
    const int b_max = max_offset();
    if (b < -b_max || b > b_max) return 0.0;
    return intensities[static_cast<std::size_t>(b + b_max)];
}

double MqcSpectrum::total() const {
    double s = 0.0;
    for (double v : intensities) s += v;
    return s;
}

MqcSpectrum mqc_from_probabilities(std::span<const double> probabilities,
                                   std::span<const int> labels) {
    const std::size_t dim = probabilities.size();
    const int step = checked_label_step(labels, dim);

    double norm = 0.0;
    for (double p : probabilities) norm += p;
    if (std::abs(norm - 1.0) > 1e-8)
        throw std::invalid_argument("mqc: state not normalized");

    MqcSpectrum spec;
    spec.label_step = step;
    spec.intensities.assign(2 * dim - 1, 0.0);
    const int b_max = static_cast<int>(dim) - 1;

    for (int b = 0; b <= b_max; ++b) {
        double s = 0.0;
        for (std::size_t m = 0; m + b < dim; ++m) s += probabilities[m] * probabilities[m + b];
        spec.intensities[static_cast<std::size_t>(b_max + b)] = s;
        spec.intensities[static_cast<std::size_t>(b_max - b)] = s;
    }
    finalize(spec);
    return spec;
}

MqcSpectrum mqc_from_amplitudes(std::span<const std::complex<double>> zeta,
                                std::span<const int> labels) {
    std::vector<double> probs(zeta.size());
    for (std::size_t i = 0; i < zeta.size(); ++i) probs[i] = std::norm(zeta[i]);
    return mqc_from_probabilities(probs, labels);
}

namespace {

template <class T>
MqcSpectrum mqc_from_matrix_impl(const DenseMatrix<T>& rho, std::span<const int> labels) {
    const std::size_t dim = rho.rows();
    if (rho.cols() != dim) throw std::invalid_argument("mqc_from_matrix: matrix not square");
    const int step = checked_label_step(labels, dim);

    double herm_dev = 0.0;
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = a; b < dim; ++b) {
            using std::conj;
            const auto diff = rho(a, b) - conj(rho(b, a));
            herm_dev = std::max(herm_dev, std::abs(diff));
        }
    if (herm_dev > 1e-10)
        throw std::invalid_argument("mqc_from_matrix: input not Hermitian (deviation " +
                                    std::to_string(herm_dev) + ")");

    double trace = 0.0;
    for (std::size_t a = 0; a < dim; ++a) trace += std::real(std::complex<double>(rho(a, a)));
    if (std::abs(trace - 1.0) > 1e-8)
        throw std::invalid_argument("mqc_from_matrix: trace differs from 1 by " +
                                    std::to_string(trace - 1.0));

    MqcSpectrum spec;
    spec.label_step = step;
    spec.intensities.assign(2 * dim - 1, 0.0);
    const int b_max = static_cast<int>(dim) - 1;

    // Band b >= 0 collects rho_{m+b, m}; band -b its adjoint partner.
    for (int b = 0; b <= b_max; ++b) {
        double upper = 0.0, lower = 0.0;
        for (std::size_t m = 0; m + b < dim; ++m) {
            upper += std::norm(std::complex<double>(rho(m + b, m)));
            lower += std::norm(std::complex<double>(rho(m, m + b)));
        }
        spec.intensities[static_cast<std::size_t>(b_max + b)] = upper;
        spec.intensities[static_cast<std::size_t>(b_max - b)] = lower;
    }
    finalize(spec);
    return spec;
}

}  // namespace

MqcSpectrum mqc_from_matrix(const CMatrix& rho, std::span<const int> labels) {
    return mqc_from_matrix_impl(rho, labels);
}

MqcSpectrum mqc_from_matrix(const Matrix& rho, std::span<const int> labels) {
    return mqc_from_matrix_impl(rho, labels);
}

double i0_max(std::span<const double> i0_series) {
    if (i0_series.empty()) throw std::invalid_argument("i0_max: empty series");
    return *std::max_element(i0_series.begin(), i0_series.end());
}

}  // namespace lmg
