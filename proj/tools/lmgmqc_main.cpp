#include <exception>
#include <iostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "cli_common.hpp"
#include "json.hpp"
#include "lmg/errors.hpp"
#include "runs.hpp"
#include "validate.hpp"

namespace {

void emit_error(const std::string& type, const std::string& message) {
    nlohmann::json err;
    err["error"] = type;
    err["message"] = message;
    std::cerr << err.dump() << std::endl;
}

void add_common(CLI::App* cmd, std::string& out_dir, int* workers = nullptr) {
    out_dir = lmgmqc::default_output_dir();
    cmd->add_option("--out-dir", out_dir, "output directory");
    if (workers) cmd->add_option("--workers", *workers, "worker thread count");
}

void add_kappa(CLI::App* cmd, lmgmqc::CouplingChoice& coupling) {
    cmd->add_option("--kappa", coupling.kappa, "static coupling in [0,1]");
    cmd->add_option("--kappa-ratio", coupling.kappa_ratio, "kappa / kappa_c");
}

void add_chi(CLI::App* cmd, lmgmqc::QuenchChoice& quench, CLI::Option* grid = nullptr) {
    auto* chi = cmd->add_option("--chi", quench.chi, "quench strength");
    auto* ratio = cmd->add_option("--chi-ratio", quench.chi_ratio, "chi / chi_c");
    if (grid) {
        grid->excludes(chi);
        grid->excludes(ratio);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"LMG quench and multiple-quantum-coherence toolkit"};
    app.require_subcommand(1);
    // config keys live in a [subcommand] section; command-line flags win
    app.set_config("--config", "", "declarative config file (flags override it)");

    lmgmqc::SpectrumArgs spectrum;
    auto* spectrum_cmd = app.add_subcommand("spectrum", "eigenvalues across a kappa sweep");
    spectrum_cmd->add_option("--n", spectrum.n_spins, "spin count (even)");
    spectrum_cmd->add_option("--kappa-min", spectrum.kappa_min);
    spectrum_cmd->add_option("--kappa-max", spectrum.kappa_max);
    spectrum_cmd->add_option("--kappa-steps", spectrum.kappa_steps);
    add_common(spectrum_cmd, spectrum.out_dir, &spectrum.workers);

    lmgmqc::DosArgs dos;
    auto* dos_cmd = app.add_subcommand("dos", "density of states vs the classical curve");
    dos_cmd->add_option("--n", dos.n_spins);
    dos_cmd->add_option("--bins", dos.bins);
    add_kappa(dos_cmd, dos.coupling);
    add_common(dos_cmd, dos.out_dir);

    lmgmqc::SurfaceArgs surface;
    auto* surface_cmd = app.add_subcommand("surface", "classical energy surface grid");
    surface_cmd->add_option("--resolution", surface.resolution);
    add_kappa(surface_cmd, surface.coupling);
    add_common(surface_cmd, surface.out_dir);

    lmgmqc::QuenchMqcArgs quench_mqc;
    auto* qm_cmd = app.add_subcommand("quench-mqc", "evolved MQC spectra and occupations");
    qm_cmd->add_option("--n", quench_mqc.n_spins);
    qm_cmd->add_option("--t-max", quench_mqc.t_max);
    qm_cmd->add_option("--dt", quench_mqc.dt);
    add_kappa(qm_cmd, quench_mqc.coupling);
    add_chi(qm_cmd, quench_mqc.quench);
    add_common(qm_cmd, quench_mqc.out_dir);

    lmgmqc::I0Args i0;
    auto* i0_cmd = app.add_subcommand("i0", "zero-mode trajectory or I0max scan");
    i0_cmd->add_option("--n", i0.n_spins);
    auto* i0_grid = i0_cmd->add_option("--chi-grid", i0.chi_grid,
                                       "chi-ratio grid start:stop:step (scan mode)");
    i0_cmd->add_option("--t-max", i0.t_max);
    i0_cmd->add_option("--samples", i0.samples);
    i0_cmd->add_option("--tau", i0.tau);
    i0_cmd->add_option("--dt", i0.dt);
    add_kappa(i0_cmd, i0.coupling);
    add_chi(i0_cmd, i0.quench, i0_grid);
    add_common(i0_cmd, i0.out_dir, &i0.workers);

    lmgmqc::WidthArgs width;
    auto* width_cmd = app.add_subcommand("width", "width trajectory or long-time-average scan");
    width_cmd->add_option("--n", width.n_spins);
    auto* width_grid = width_cmd->add_option("--chi-grid", width.chi_grid,
                                             "chi-ratio grid start:stop:step (scan mode)");
    width_cmd->add_option("--t-max", width.t_max);
    width_cmd->add_option("--samples", width.samples);
    width_cmd->add_option("--t0", width.t0);
    width_cmd->add_option("--t-avg", width.t_avg);
    width_cmd->add_option("--avg-samples", width.avg_samples);
    add_kappa(width_cmd, width.coupling);
    add_chi(width_cmd, width.quench, width_grid);
    add_common(width_cmd, width.out_dir, &width.workers);

    lmgmqc::ScalingArgs scaling;
    auto* scaling_cmd =
        app.add_subcommand("scaling", "peak location of the averaged width vs system size");
    scaling_cmd->add_option("--n-list", scaling.n_list, "comma-separated system sizes");
    scaling_cmd->add_option("--chi-grid", scaling.chi_grid);
    scaling_cmd->add_option("--t0", scaling.t0);
    scaling_cmd->add_option("--t-avg", scaling.t_avg);
    scaling_cmd->add_option("--avg-samples", scaling.avg_samples);
    add_kappa(scaling_cmd, scaling.coupling);
    add_common(scaling_cmd, scaling.out_dir, &scaling.workers);

    lmgmqc::EnsembleArgs ensemble;
    auto* ens_cmd =
        app.add_subcommand("ensemble", "long-time averaged state: map or MQC scan");
    ens_cmd->add_option("--n", ensemble.n_spins);
    auto* ens_grid = ens_cmd->add_option("--chi-grid", ensemble.chi_grid);
    add_kappa(ens_cmd, ensemble.coupling);
    add_chi(ens_cmd, ensemble.quench, ens_grid);
    add_common(ens_cmd, ensemble.out_dir, &ensemble.workers);

    lmgmqc::ValidateArgs validate;
    auto* validate_cmd = app.add_subcommand("validate", "run the oracle/invariant battery");
    validate_cmd->add_option("--max-n", validate.max_n, "largest oracle size (even, <= 12)");
    add_common(validate_cmd, validate.out_dir, &validate.workers);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        emit_error("config", e.what());
        return 2;
    }

    try {
        if (*spectrum_cmd) lmgmqc::run_spectrum(spectrum);
        if (*dos_cmd) lmgmqc::run_dos(dos);
        if (*surface_cmd) lmgmqc::run_surface(surface);
        if (*qm_cmd) lmgmqc::run_quench_mqc(quench_mqc);
        if (*i0_cmd) lmgmqc::run_i0(i0);
        if (*width_cmd) lmgmqc::run_width(width);
        if (*scaling_cmd) lmgmqc::run_scaling(scaling);
        if (*ens_cmd) lmgmqc::run_ensemble(ensemble);
        if (*validate_cmd) {
            const int failures = lmgmqc::run_validate(validate);
            if (failures > 0) {
                emit_error("validation", std::to_string(failures) + " checks failed");
                return 5;
            }
        }
    } catch (const std::invalid_argument& e) {
        emit_error("domain", e.what());
        return 3;
    } catch (const lmg::numerical_error& e) {
        emit_error("numerical", e.what());
        return 4;
    } catch (const std::exception& e) {
        emit_error("internal", e.what());
        return 1;
    }
    return 0;
}
