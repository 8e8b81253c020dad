#include "lmg/quench.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "lmg/classical.hpp"

namespace lmg {

double QuenchSetup::initial_energy() const {
    double e = 0.0;
    for (std::size_t k = 0; k < overlaps.size(); ++k)
        e += overlaps[k] * overlaps[k] * eig1.values[k];
    return e;
}

std::vector<double> linspace(double t0, double t1, int count) {
    if (count < 1) throw std::invalid_argument("linspace: count < 1");
    std::vector<double> ts(count);
    if (count == 1) {
        ts[0] = t0;
        return ts;
    }
    for (int i = 0; i < count; ++i) ts[i] = t0 + (t1 - t0) * i / (count - 1);
    return ts;
}

QuenchSetup prepare(const ModelParams& params) {
    validate_params(params);
    if (!(params.kappa > kKappaCritical && params.kappa < 1.0))
        throw std::invalid_argument("prepare: quench protocol needs 1/3 < kappa < 1, got " +
                                    std::to_string(params.kappa));

    QuenchSetup setup;
    setup.params = params;
    setup.sector = build_sector(params.n_spins);
    setup.h0 = build_h0(params);
    setup.h1 = build_h1(params);

    const EigenDecomposition eig0 = eigh(setup.h0);
    auto ground = eig0.eigenvector(0);
    setup.psi0.assign(ground.begin(), ground.end());

    setup.eig1 = eigh(setup.h1);

    const std::size_t dim = setup.psi0.size();
    setup.overlaps.resize(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        auto vk = setup.eig1.eigenvector(k);
        double c = 0.0;
        for (std::size_t m = 0; m < dim; ++m) c += vk[m] * setup.psi0[m];
        setup.overlaps[k] = c;
    }
    return setup;
}

EvolvedAmplitudes evolve(const QuenchSetup& setup, double t) {
    if (t < 0.0) throw std::invalid_argument("evolve: t must be >= 0");
    const std::size_t dim = setup.psi0.size();

    EvolvedAmplitudes out;
    out.time = t;
    out.zeta.assign(dim, {0.0, 0.0});
    for (std::size_t k = 0; k < dim; ++k) {
        const double phase = -setup.eig1.values[k] * t;
        const std::complex<double> w =
            setup.overlaps[k] * std::complex<double>(std::cos(phase), std::sin(phase));
        auto vk = setup.eig1.eigenvector(k);
        for (std::size_t m = 0; m < dim; ++m) out.zeta[m] += w * vk[m];
    }
    return out;
}

void evolved_probabilities(const QuenchSetup& setup, double t, std::span<double> probs) {
    const std::size_t dim = setup.psi0.size();
    if (probs.size() != dim)
        throw std::invalid_argument("evolved_probabilities: output size mismatch");

    // Accumulate Re and Im parts of zeta in two flat passes; this is the
    // innermost loop of every scan, keep it branch-free.
    static thread_local std::vector<double> re, im;
    re.assign(dim, 0.0);
    im.assign(dim, 0.0);
    for (std::size_t k = 0; k < dim; ++k) {
        const double phase = -setup.eig1.values[k] * t;
        const double wr = setup.overlaps[k] * std::cos(phase);
        const double wi = setup.overlaps[k] * std::sin(phase);
        const double* vk = setup.eig1.eigenvector(k).data();
        for (std::size_t m = 0; m < dim; ++m) {
            re[m] += wr * vk[m];
            im[m] += wi * vk[m];
        }
    }
    for (std::size_t m = 0; m < dim; ++m) probs[m] = re[m] * re[m] + im[m] * im[m];
}

MqcTrajectory mqc_trajectory(const QuenchSetup& setup, std::span<const double> times) {
    if (!std::is_sorted(times.begin(), times.end()))
        throw std::invalid_argument("mqc_trajectory: times must be ascending");
    const std::size_t dim = setup.psi0.size();

    MqcTrajectory traj;
    traj.times.assign(times.begin(), times.end());
    traj.spectra.reserve(times.size());
    traj.probabilities.reserve(times.size());
    std::vector<double> probs(dim);
    for (double t : times) {
        evolved_probabilities(setup, t, probs);
        traj.spectra.push_back(mqc_from_probabilities(probs, setup.sector.m_values));
        traj.probabilities.push_back(probs);
    }
    return traj;
}

std::vector<double> i0_trajectory(const QuenchSetup& setup, std::span<const double> times) {
    const std::size_t dim = setup.psi0.size();
    std::vector<double> probs(dim);
    std::vector<double> series;
    series.reserve(times.size());
    for (double t : times) {
        evolved_probabilities(setup, t, probs);
        double i0 = 0.0;
        for (double p : probs) i0 += p * p;
        series.push_back(i0);
    }
    return series;
}

double i0_max_on_window(const QuenchSetup& setup, double tau, double dt) {
    if (!(tau > 0.0) || !(dt > 0.0))
        throw std::invalid_argument("i0_max_on_window: tau and dt must be positive");
    const int steps = static_cast<int>(std::floor(tau / dt + 1e-9)) + 1;
    const std::size_t dim = setup.psi0.size();
    std::vector<double> probs(dim);
    double best = 0.0;
    for (int i = 0; i < steps; ++i) {
        evolved_probabilities(setup, i * dt, probs);
        double i0 = 0.0;
        for (double p : probs) i0 += p * p;
        best = std::max(best, i0);
    }
    return best;
}

std::vector<double> i0_max_scan(double kappa, int n_spins, std::span<const double> chi_values,
                                double tau, double dt) {
    std::vector<double> out;
    out.reserve(chi_values.size());
    for (double chi : chi_values) {
        const QuenchSetup setup = prepare({kappa, chi, n_spins});
        out.push_back(i0_max_on_window(setup, tau, dt));
    }
    return out;
}

WidthSeries width_trajectory(const QuenchSetup& setup, std::span<const double> times) {
    const std::size_t dim = setup.psi0.size();
    WidthSeries series;
    series.times.assign(times.begin(), times.end());
    series.w.reserve(times.size());
    std::vector<double> probs(dim);
    for (double t : times) {
        evolved_probabilities(setup, t, probs);
        series.w.push_back(mqc_from_probabilities(probs, setup.sector.m_values).width);
    }
    return series;
}

double long_time_avg_width(const QuenchSetup& setup, double t0, double t_window,
                           int n_samples) {
    if (!(t0 > 0.0) || !(t_window > 0.0))
        throw std::invalid_argument("long_time_avg_width: t0 and window must be positive");
    if (n_samples < 1) throw std::invalid_argument("long_time_avg_width: n_samples < 1");

    const std::vector<double> times = linspace(t0, t0 + t_window, n_samples);
    const std::size_t dim = setup.psi0.size();
    std::vector<double> probs(dim);
    double sum = 0.0;
    for (double t : times) {
        evolved_probabilities(setup, t, probs);
        sum += mqc_from_probabilities(probs, setup.sector.m_values).width;
    }
    return sum / n_samples;
}

PowerLawFit fit_power_law(std::span<const double> n_values, std::span<const double> y_values) {
    if (n_values.size() != y_values.size())
        throw std::invalid_argument("fit_power_law: size mismatch");
    if (n_values.size() < 3)
        throw std::invalid_argument("fit_power_law: need at least 3 points");
    for (double y : y_values)
        if (!(y > 0.0))
            throw std::invalid_argument("fit_power_law: y values must be positive");

    const std::size_t n = n_values.size();
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = std::log(n_values[i]);
        const double y = std::log(y_values[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double det = n * sxx - sx * sx;
    if (std::abs(det) < 1e-12 * n * sxx)
        throw std::invalid_argument("fit_power_law: degenerate abscissas");
    const double slope = (n * sxy - sx * sy) / det;
    const double intercept = (sy * sxx - sx * sxy) / det;

    PowerLawFit fit;
    fit.exponent = -slope;
    fit.coefficient = std::exp(intercept);
    return fit;
}

double parabolic_peak(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size() || xs.empty())
        throw std::invalid_argument("parabolic_peak: bad input sizes");
    const std::size_t imax =
        static_cast<std::size_t>(std::max_element(ys.begin(), ys.end()) - ys.begin());
    if (imax == 0 || imax + 1 >= xs.size()) return xs[imax];
    const double fm = ys[imax - 1], f0 = ys[imax], fp = ys[imax + 1];
    const double denom = fm - 2.0 * f0 + fp;
    if (denom >= 0.0) return xs[imax];  // not a proper cap
    const double step = 0.5 * (xs[imax + 1] - xs[imax - 1]);
    return xs[imax] + 0.5 * step * (fm - fp) / denom;
}

PeakScaling peak_location_scaling(double kappa, std::span<const int> n_values,
                                  std::span<const double> chi_ratios, double t0,
                                  double t_window, int n_samples) {
    if (n_values.size() < 3)
        throw std::invalid_argument("peak_location_scaling: need at least 3 system sizes");
    if (chi_ratios.size() < 3)
        throw std::invalid_argument("peak_location_scaling: need at least 3 chi points");

    const double chi_c = critical_quench_strength(kappa);

    PeakScaling scaling;
    std::vector<double> fit_n, fit_y;
    for (int n_spins : n_values) {
        std::vector<double> w_bar(chi_ratios.size());
        for (std::size_t i = 0; i < chi_ratios.size(); ++i) {
            const QuenchSetup setup = prepare({kappa, chi_ratios[i] * chi_c, n_spins});
            w_bar[i] = long_time_avg_width(setup, t0, t_window, n_samples);
        }
        const double ratio = parabolic_peak(chi_ratios, w_bar);
        scaling.points.push_back({n_spins, ratio});
        fit_n.push_back(static_cast<double>(n_spins));
        fit_y.push_back(std::abs(ratio - 1.0));
    }
    scaling.fit = fit_power_law(fit_n, fit_y);
    return scaling;
}

}  // namespace lmg
