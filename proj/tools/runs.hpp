#pragma once

#include <string>
#include <vector>

#include "cli_common.hpp"

namespace lmgmqc {

struct SpectrumArgs {
    int n_spins = 50;
    double kappa_min = 0.0;
    double kappa_max = 1.0;
    int kappa_steps = 101;
    int workers = 1;
    std::string out_dir;
};

struct DosArgs {
    int n_spins = 5000;
    CouplingChoice coupling;
    int bins = 100;
    std::string out_dir;
};

struct SurfaceArgs {
    CouplingChoice coupling;
    int resolution = 201;
    std::string out_dir;
};

struct QuenchMqcArgs {
    int n_spins = 400;
    CouplingChoice coupling;
    QuenchChoice quench;
    double t_max = 400.0;
    double dt = 20.0;
    std::string out_dir;
};

struct I0Args {
    int n_spins = 400;
    CouplingChoice coupling;
    QuenchChoice quench;
    std::string chi_grid;  // scan mode when non-empty
    double t_max = 30.0;
    int samples = 601;
    double tau = 30.0;
    double dt = 0.05;
    int workers = 1;
    std::string out_dir;
};

struct WidthArgs {
    int n_spins = 400;
    CouplingChoice coupling;
    QuenchChoice quench;
    std::string chi_grid;  // scan mode when non-empty
    double t_max = 100.0;
    int samples = 501;
    double t0 = 1e4;
    double t_avg = 1e3;
    int avg_samples = 1000;
    int workers = 1;
    std::string out_dir;
};

struct ScalingArgs {
    CouplingChoice coupling;
    std::string n_list = "200,400,800,1600";
    std::string chi_grid = "0.2:2:0.05";
    double t0 = 1e4;
    double t_avg = 1e3;
    int avg_samples = 1000;
    int workers = 1;
    std::string out_dir;
};

struct EnsembleArgs {
    int n_spins = 800;
    CouplingChoice coupling;
    QuenchChoice quench;
    std::string chi_grid;  // scan mode when non-empty
    int workers = 1;
    std::string out_dir;
};

void run_spectrum(const SpectrumArgs& args);
void run_dos(const DosArgs& args);
void run_surface(const SurfaceArgs& args);
void run_quench_mqc(const QuenchMqcArgs& args);
void run_i0(const I0Args& args);
void run_width(const WidthArgs& args);
void run_scaling(const ScalingArgs& args);
void run_ensemble(const EnsembleArgs& args);

}  // namespace lmgmqc
