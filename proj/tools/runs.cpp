#include "runs.hpp"

#include <algorithm>
#include <cmath>
#include <span>

#include "lmg/classical.hpp"
#include "lmg/coherence.hpp"
#include "lmg/csv.hpp"
#include "lmg/diagonal_ensemble.hpp"
#include "lmg/dos.hpp"
#include "lmg/parallel.hpp"
#include "lmg/quench.hpp"
#include "lmg/spin_sector.hpp"
#include "lmg/tridiag_eig.hpp"

namespace lmgmqc {

using namespace lmg;

void run_spectrum(const SpectrumArgs& args) {
    RunContext ctx("spectrum", args.out_dir);
    if (args.kappa_steps < 1) throw std::invalid_argument("spectrum: kappa-steps < 1");

    std::vector<double> kappas(args.kappa_steps);
    for (int i = 0; i < args.kappa_steps; ++i)
        kappas[i] = args.kappa_steps == 1
                        ? args.kappa_min
                        : args.kappa_min + (args.kappa_max - args.kappa_min) * i /
                                               (args.kappa_steps - 1);

    const auto levels = parallel_map<std::vector<double>>(
        kappas.size(), args.workers, [&](std::size_t i) {
            return eigvals(build_h0({kappas[i], 0.0, args.n_spins}));
        });

    CsvWriter csv(ctx.path("spectrum.csv"), {"kappa", "level", "energy_per_spin"});
    for (std::size_t i = 0; i < kappas.size(); ++i)
        for (std::size_t k = 0; k < levels[i].size(); ++k)
            csv.row(kappas[i], k, levels[i][k] / args.n_spins);

    ctx.write_manifest({{"n_spins", args.n_spins},
                        {"kappa_min", args.kappa_min},
                        {"kappa_max", args.kappa_max},
                        {"kappa_steps", args.kappa_steps},
                        {"workers", args.workers}});
}

void run_dos(const DosArgs& args) {
    RunContext ctx("dos", args.out_dir);
    const double kappa = args.coupling.resolve_kappa();

    const std::vector<double> values = eigvals(build_h0({kappa, 0.0, args.n_spins}));
    const DosHistogram hist = quantum_dos(values, args.n_spins, args.bins);
    const DosComparison cmp = compare_to_classical(hist, kappa);

    CsvWriter csv(ctx.path("dos.csv"), {"bin_center", "quantum_density", "classical_density"});
    for (std::size_t i = 0; i < hist.bins(); ++i)
        csv.row(hist.bin_center(i), hist.normalized_density[i], cmp.classical_density[i]);

    ctx.write_manifest({{"n_spins", args.n_spins},
                        {"kappa", kappa},
                        {"bins", args.bins},
                        {"l1_distance", cmp.l1_distance},
                        {"excluded_bins", cmp.excluded_bins}});
}

void run_surface(const SurfaceArgs& args) {
    RunContext ctx("surface", args.out_dir);
    const double kappa = args.coupling.resolve_kappa();
    const SurfaceGrid grid = energy_surface_grid(kappa, args.resolution);

    CsvWriter csv(ctx.path("surface.csv"), {"p", "q", "valid", "energy_per_spin"});
    for (const SurfacePoint& pt : grid.points) {
        if (pt.inside)
            csv.row(pt.p, pt.q, 1, pt.energy);
        else
            csv.row(pt.p, pt.q, 0, "nan");
    }

    ctx.write_manifest({{"kappa", kappa}, {"resolution", args.resolution}});
}

void run_quench_mqc(const QuenchMqcArgs& args) {
    RunContext ctx("quench-mqc", args.out_dir);
    const double kappa = args.coupling.resolve_kappa();
    const double chi = args.quench.resolve_chi(kappa);

    const QuenchSetup setup = prepare({kappa, chi, args.n_spins});
    const int steps = static_cast<int>(std::floor(args.t_max / args.dt + 1e-9)) + 1;
    std::vector<double> times(steps);
    for (int i = 0; i < steps; ++i) times[i] = i * args.dt;

    const MqcTrajectory traj = mqc_trajectory(setup, times);

    CsvWriter spec_csv(ctx.path("mqc_spectrum.csv"), {"t", "l", "intensity"});
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        const MqcSpectrum& spec = traj.spectra[i];
        const int b_max = spec.max_offset();
        for (int b = -b_max; b <= b_max; ++b)
            spec_csv.row(traj.times[i], spec.label_step * b,
                         spec.intensities[static_cast<std::size_t>(b + b_max)]);
    }

    CsvWriter map_csv(ctx.path("zeta_map.csv"), {"t", "m", "probability"});
    for (std::size_t i = 0; i < traj.times.size(); ++i)
        for (std::size_t m = 0; m < traj.probabilities[i].size(); ++m)
            map_csv.row(traj.times[i], setup.sector.m_values[m], traj.probabilities[i][m]);

    ctx.write_manifest({{"n_spins", args.n_spins},
                        {"kappa", kappa},
                        {"chi", chi},
                        {"chi_ratio", args.quench.as_ratio(kappa)},
                        {"t_max", args.t_max},
                        {"dt", args.dt}});
}

namespace {

void write_trajectory(const RunContext& ctx, const QuenchSetup& setup,
                      const std::vector<double>& times) {
    const MqcTrajectory traj = mqc_trajectory(setup, times);
    CsvWriter csv(ctx.path("trajectory.csv"), {"t", "i0", "w"});
    for (std::size_t i = 0; i < traj.times.size(); ++i)
        csv.row(traj.times[i], traj.spectra[i].zero_mode, traj.spectra[i].width);
}

}  // namespace

void run_i0(const I0Args& args) {
    RunContext ctx("i0", args.out_dir);
    const double kappa = args.coupling.resolve_kappa();

    if (!args.chi_grid.empty()) {
        const std::vector<double> ratios = parse_grid(args.chi_grid);
        const double chi_c = critical_quench_strength(kappa);
        const auto i0max = parallel_map<double>(ratios.size(), args.workers, [&](std::size_t i) {
            const QuenchSetup setup = prepare({kappa, ratios[i] * chi_c, args.n_spins});
            return i0_max_on_window(setup, args.tau, args.dt);
        });

        CsvWriter csv(ctx.path("i0_scan.csv"), {"chi_ratio", "i0_max"});
        for (std::size_t i = 0; i < ratios.size(); ++i) csv.row(ratios[i], i0max[i]);

        ctx.write_manifest({{"n_spins", args.n_spins},
                            {"kappa", kappa},
                            {"chi_grid", args.chi_grid},
                            {"tau", args.tau},
                            {"dt", args.dt},
                            {"workers", args.workers}});
        return;
    }

    const double chi = args.quench.resolve_chi(kappa);
    const QuenchSetup setup = prepare({kappa, chi, args.n_spins});
    write_trajectory(ctx, setup, linspace(0.0, args.t_max, args.samples));
    ctx.write_manifest({{"n_spins", args.n_spins},
                        {"kappa", kappa},
                        {"chi", chi},
                        {"chi_ratio", args.quench.as_ratio(kappa)},
                        {"t_max", args.t_max},
                        {"samples", args.samples}});
}

void run_width(const WidthArgs& args) {
    RunContext ctx("width", args.out_dir);
    const double kappa = args.coupling.resolve_kappa();

    if (!args.chi_grid.empty()) {
        const std::vector<double> ratios = parse_grid(args.chi_grid);
        const double chi_c = critical_quench_strength(kappa);
        const auto w_bar = parallel_map<double>(ratios.size(), args.workers, [&](std::size_t i) {
            const QuenchSetup setup = prepare({kappa, ratios[i] * chi_c, args.n_spins});
            return long_time_avg_width(setup, args.t0, args.t_avg, args.avg_samples);
        });

        CsvWriter csv(ctx.path("wbar_scan.csv"), {"chi_ratio", "w_bar"});
        for (std::size_t i = 0; i < ratios.size(); ++i) csv.row(ratios[i], w_bar[i]);

        ctx.write_manifest({{"n_spins", args.n_spins},
                            {"kappa", kappa},
                            {"chi_grid", args.chi_grid},
                            {"t0", args.t0},
                            {"t_avg", args.t_avg},
                            {"avg_samples", args.avg_samples},
                            {"workers", args.workers}});
        return;
    }

    const double chi = args.quench.resolve_chi(kappa);
    const QuenchSetup setup = prepare({kappa, chi, args.n_spins});
    write_trajectory(ctx, setup, linspace(0.0, args.t_max, args.samples));
    ctx.write_manifest({{"n_spins", args.n_spins},
                        {"kappa", kappa},
                        {"chi", chi},
                        {"chi_ratio", args.quench.as_ratio(kappa)},
                        {"t_max", args.t_max},
                        {"samples", args.samples}});
}

void run_scaling(const ScalingArgs& args) {
    RunContext ctx("scaling", args.out_dir);
    const double kappa = args.coupling.resolve_kappa();
    const std::vector<int> n_values = parse_int_list(args.n_list);
    const std::vector<double> ratios = parse_grid(args.chi_grid);
    const double chi_c = critical_quench_strength(kappa);

    // flatten (N, chi) into one deterministic work queue
    struct Item {
        int n_spins;
        double ratio;
    };
    std::vector<Item> items;
    for (int n : n_values)
        for (double r : ratios) items.push_back({n, r});

    const auto w_bar = parallel_map<double>(items.size(), args.workers, [&](std::size_t i) {
        const QuenchSetup setup =
            prepare({kappa, items[i].ratio * chi_c, items[i].n_spins});
        return long_time_avg_width(setup, args.t0, args.t_avg, args.avg_samples);
    });

    std::vector<double> fit_n, fit_y;
    std::vector<double> peaks;
    for (std::size_t block = 0; block < n_values.size(); ++block) {
        std::span<const double> w(w_bar.data() + block * ratios.size(), ratios.size());
        const double peak = parabolic_peak(ratios, w);
        peaks.push_back(peak);
        fit_n.push_back(static_cast<double>(n_values[block]));
        fit_y.push_back(std::abs(peak - 1.0));
    }

    const PowerLawFit fit = fit_power_law(fit_n, fit_y);

    CsvWriter csv(ctx.path("scaling.csv"), {"n_spins", "chi_max_ratio", "fit_c", "fit_beta"});
    for (std::size_t i = 0; i < n_values.size(); ++i)
        csv.row(n_values[i], peaks[i], fit.coefficient, fit.exponent);

    ctx.write_manifest({{"kappa", kappa},
                        {"n_list", args.n_list},
                        {"chi_grid", args.chi_grid},
                        {"t0", args.t0},
                        {"t_avg", args.t_avg},
                        {"avg_samples", args.avg_samples},
                        {"fit_c", fit.coefficient},
                        {"fit_beta", fit.exponent},
                        {"workers", args.workers}});
}

void run_ensemble(const EnsembleArgs& args) {
    RunContext ctx("ensemble", args.out_dir);
    const double kappa = args.coupling.resolve_kappa();

    if (!args.chi_grid.empty()) {
        const std::vector<double> ratios = parse_grid(args.chi_grid);
        const double chi_c = critical_quench_strength(kappa);

        const auto spectra =
            parallel_map<MqcSpectrum>(ratios.size(), args.workers, [&](std::size_t i) {
                const QuenchSetup setup = prepare({kappa, ratios[i] * chi_c, args.n_spins});
                return mqc_of_ensemble(build_diagonal_ensemble(setup));
            });

        CsvWriter csv(ctx.path("ensemble_scan.csv"), {"chi_ratio", "i0_bar", "w_tilde"});
        for (std::size_t i = 0; i < ratios.size(); ++i)
            csv.row(ratios[i], spectra[i].zero_mode, spectra[i].width / args.n_spins);

        CsvWriter spec_csv(ctx.path("ensemble_spectrum.csv"), {"chi_ratio", "l", "intensity"});
        for (std::size_t i = 0; i < ratios.size(); ++i) {
            const int b_max = spectra[i].max_offset();
            for (int b = -b_max; b <= b_max; ++b)
                spec_csv.row(ratios[i], spectra[i].label_step * b,
                             spectra[i].intensities[static_cast<std::size_t>(b + b_max)]);
        }

        ctx.write_manifest({{"n_spins", args.n_spins},
                            {"kappa", kappa},
                            {"chi_grid", args.chi_grid},
                            {"workers", args.workers}});
        return;
    }

    const double chi = args.quench.resolve_chi(kappa);
    const QuenchSetup setup = prepare({kappa, chi, args.n_spins});
    const DiagonalEnsemble ens = build_diagonal_ensemble(setup);

    CsvWriter csv(ctx.path("dmap.csv"), {"m_over_n", "l_over_n", "d_value"});
    for (const DMapEntry& e : d_matrix_map(ens)) csv.row(e.m_over_n, e.l_over_n, e.value);

    ctx.write_manifest({{"n_spins", args.n_spins},
                        {"kappa", kappa},
                        {"chi", chi},
                        {"chi_ratio", args.quench.as_ratio(kappa)}});
}

}  // namespace lmgmqc
