#include "validate.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include "cli_common.hpp"
#include "lmg/classical.hpp"
#include "lmg/coherence.hpp"
#include "lmg/csv.hpp"
#include "lmg/dense_oracle.hpp"
#include "lmg/diagonal_ensemble.hpp"
#include "lmg/parallel.hpp"
#include "lmg/quadrature.hpp"
#include "lmg/quench.hpp"
#include "lmg/spin_sector.hpp"
#include "lmg/tridiag_eig.hpp"

namespace lmgmqc {

using namespace lmg;

namespace {

struct Check {
    std::string name;
    double observed = 0.0;
    double bound = 0.0;
    bool pass = false;
};

Check make_check(std::string name, double observed, double bound) {
    Check c;
    c.name = std::move(name);
    c.observed = observed;
    c.bound = bound;
    c.pass = observed <= bound;
    return c;
}

double chi_formula(double kappa) { return -kappa * (3.0 * kappa - 1.0) / (kappa + 1.0); }

std::vector<int> even_sizes(int max_n) {
    std::vector<int> sizes;
    for (int n = 2; n <= max_n; n += 2) sizes.push_back(n);
    return sizes;
}

Check check_hamiltonian_vs_oracle(int max_n) {
    double worst = 0.0;
    for (int n : even_sizes(max_n)) {
        for (double kappa : {0.0, 1.0 / 3.0, 0.5, 1.0}) {
            for (double chi : {0.0, chi_formula(kappa)}) {
                const double g = kappa + chi;
                const SymTridiagonal h = build_hamiltonian({kappa, chi, n}, g);
                const DenseOracle oracle = build_dense_oracle({kappa, chi, n}, g);
                const int dim = static_cast<int>(h.dim());
                for (int a = 0; a < dim; ++a)
                    for (int b = 0; b < dim; ++b) {
                        double expected = 0.0;
                        if (a == b) expected = h.diag[a];
                        else if (std::abs(a - b) == 1) expected = h.offdiag[std::min(a, b)];
                        worst = std::max(worst, std::abs(oracle.h_even(a, b) - expected));
                    }
            }
        }
    }
    return make_check("hamiltonian_entrywise_vs_oracle", worst, 1e-12);
}

Check check_eigenvalues_vs_oracle(int max_n) {
    double worst = 0.0;
    for (double kappa : {1.0 / 3.0, 0.5, 1.0}) {
        const SymTridiagonal h = build_h0({kappa, 0.0, max_n});
        const DenseOracle oracle = build_dense_oracle({kappa, 0.0, max_n});
        const std::vector<double> values = eigvals(h);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> dense(oracle.h_even);
        for (std::size_t k = 0; k < values.size(); ++k)
            worst = std::max(worst,
                             std::abs(values[k] - dense.eigenvalues()[static_cast<int>(k)]));
    }
    return make_check("eigenvalues_vs_oracle", worst, 1e-10);
}

Check check_parity_commutator(int max_n) {
    double worst = 0.0;
    for (int n : even_sizes(std::min(max_n, 8))) {
        const DenseOracle oracle = build_dense_oracle({0.4, 0.0, n});
        const Eigen::MatrixXd pi = oracle_parity_operator(n);
        worst = std::max(worst,
                         (oracle.h_full * pi - pi * oracle.h_full).cwiseAbs().maxCoeff());
    }
    return make_check("parity_commutator", worst, 1e-12);
}

Check check_ground_state_parity(int max_n) {
    double worst = -1e300;
    for (int n : even_sizes(std::min(max_n, 10))) {
        for (double kappa : {0.0, 0.3, 0.6, 0.9}) {
            const DenseOracle oracle = build_dense_oracle({kappa, 0.0, n});
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> even(oracle.h_even);
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> odd(oracle.h_odd);
            worst = std::max(worst,
                             even.eigenvalues().minCoeff() - odd.eigenvalues().minCoeff());
        }
    }
    return make_check("ground_state_in_even_sector", worst, 1e-12);
}

Check check_evolution_vs_expm(int max_n) {
    const double kappa = 0.5;
    double worst = 0.0;
    for (double ratio : {0.2, 1.0, 2.0}) {
        const double chi = ratio * chi_formula(kappa);
        const ModelParams params{kappa, chi, std::min(max_n, 8)};
        const QuenchSetup setup = prepare(params);
        const DenseOracle oracle = build_dense_oracle(params, kappa + chi);
        Eigen::VectorXd psi0(static_cast<int>(setup.psi0.size()));
        for (std::size_t m = 0; m < setup.psi0.size(); ++m)
            psi0(static_cast<int>(m)) = setup.psi0[m];
        for (double t : {0.1, 3.7, 50.0}) {
            const EvolvedAmplitudes amps = evolve(setup, t);
            const Eigen::VectorXcd expected = oracle_evolve(oracle.h_even, psi0, t);
            for (std::size_t m = 0; m < amps.zeta.size(); ++m)
                worst = std::max(worst,
                                 std::abs(amps.zeta[m] - expected(static_cast<int>(m))));
        }
    }
    return make_check("evolution_vs_expm_oracle", worst, 1e-8);
}

Check check_ensemble_vs_time_average(int max_n) {
    const double kappa = 0.5;
    const double chi = 2.0 * chi_formula(kappa);
    const ModelParams params{kappa, chi, std::min(max_n, 8)};
    const QuenchSetup setup = prepare(params);
    const DiagonalEnsemble ens = build_diagonal_ensemble(setup);

    const DenseOracle oracle = build_dense_oracle(params, kappa + chi);
    Eigen::VectorXd psi0(static_cast<int>(setup.psi0.size()));
    for (std::size_t m = 0; m < setup.psi0.size(); ++m)
        psi0(static_cast<int>(m)) = setup.psi0[m];
    const Eigen::MatrixXd averaged = oracle_time_averaged_rho(oracle.h_even, psi0, 10000, 1e5);

    double worst = 0.0;
    const std::size_t dim = setup.psi0.size();
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b)
            worst = std::max(worst, std::abs(ens.d_matrix(a, b) -
                                             averaged(static_cast<int>(a),
                                                      static_cast<int>(b))));
    return make_check("ensemble_vs_time_average_oracle", worst, 5e-3);
}

Check check_mqc_sum_rules() {
    std::mt19937_64 rng(2024);
    std::normal_distribution<double> gauss;
    double worst = 0.0;
    for (std::size_t dim : {4u, 16u, 32u}) {
        std::vector<std::complex<double>> psi(dim);
        double norm2 = 0.0;
        for (auto& z : psi) {
            z = {gauss(rng), gauss(rng)};
            norm2 += std::norm(z);
        }
        for (auto& z : psi) z /= std::sqrt(norm2);
        std::vector<int> labels(dim);
        for (std::size_t i = 0; i < dim; ++i) labels[i] = 2 * static_cast<int>(i);
        const MqcSpectrum spec = mqc_from_amplitudes(psi, labels);
        worst = std::max(worst, std::abs(spec.total() - 1.0));
        for (int ell = 1; ell <= spec.max_offset(); ++ell)
            worst = std::max(worst, std::abs(spec.intensity(2 * ell) - spec.intensity(-2 * ell)));
    }
    return make_check("mqc_sum_rule_and_symmetry", worst, 1e-10);
}

Check check_fixed_point_gradients() {
    double worst = 0.0;
    for (double kappa : {0.1, 1.0 / 3.0, 0.5, 0.8, 1.0}) {
        const ClassicalCriticalData data = fixed_points(kappa);
        for (const PhasePoint& pt : data.fixed_points) {
            const PhasePoint g = classical_energy_gradient(pt, kappa);
            worst = std::max(worst, std::hypot(g.p, g.q));
        }
    }
    return make_check("fixed_point_gradient", worst, 1e-12);
}

Check check_critical_quench_values() {
    double worst = std::abs(critical_quench_strength(0.5) - (-1.0 / 6.0));
    worst = std::max(worst, std::abs(critical_quench_strength(0.8) - (-0.62222222222222223)));
    return make_check("critical_quench_strength_values", worst, 1e-12);
}

Check check_classical_dos_flat() {
    double worst = 0.0;
    for (double eps : {0.1, 0.5, 0.9})
        worst = std::max(worst, std::abs(classical_dos(eps, 0.0) - 2.0));
    return make_check("classical_dos_free_limit", worst, 1e-6);
}

Check check_classical_dos_normalization() {
    QuadOptions opt;
    opt.abs_tol = 1e-6;
    double worst = 0.0;
    {
        const double kappa = 0.2;
        const auto [lo, hi] = classical_energy_range(kappa);
        const double total = integrate([&](double e) { return classical_dos(e, kappa); },
                                       lo + 1e-10, hi, opt);
        worst = std::max(worst, std::abs(total - 2.0));
    }
    {
        const double kappa = 0.5;
        const auto [lo, hi] = classical_energy_range(kappa);
        const double total =
            integrate([&](double e) { return classical_dos(e, kappa); }, lo, -1e-6, opt) +
            integrate([&](double e) { return classical_dos(e, kappa); }, 1e-6, hi, opt);
        worst = std::max(worst, std::abs(total - 2.0));
    }
    return make_check("classical_dos_normalization", worst, 1e-3);
}

std::vector<Check> check_conservation() {
    const double kappa = 0.5;
    const int n = 100;
    const QuenchSetup setup = prepare({kappa, chi_formula(kappa), n});
    const double e0 = setup.initial_energy();
    double worst_norm = 0.0, worst_energy = 0.0, worst_sum = 0.0;
    const std::vector<double> times = linspace(0.0, 200.0, 201);
    std::vector<double> probs(setup.psi0.size());
    for (double t : times) {
        const EvolvedAmplitudes amps = evolve(setup, t);
        double norm = 0.0;
        for (const auto& z : amps.zeta) norm += std::norm(z);
        worst_norm = std::max(worst_norm, std::abs(norm - 1.0));

        std::complex<double> h_exp = 0.0;
        const auto hv = setup.h1.apply_complex(amps.zeta);
        for (std::size_t m = 0; m < amps.zeta.size(); ++m)
            h_exp += std::conj(amps.zeta[m]) * hv[m];
        worst_energy = std::max(worst_energy, std::abs(h_exp.real() - e0));

        evolved_probabilities(setup, t, probs);
        const MqcSpectrum spec = mqc_from_probabilities(probs, setup.sector.m_values);
        worst_sum = std::max(worst_sum, std::abs(spec.total() - 1.0));
    }
    return {make_check("conservation_norm", worst_norm, 1e-10),
            make_check("conservation_energy", worst_energy, 1e-8 * n),
            make_check("conservation_mqc_sum_rule", worst_sum, 1e-10)};
}

}  // namespace

int run_validate(const ValidateArgs& args) {
    RunContext ctx("validate", args.out_dir);
    if (args.max_n < 2 || args.max_n % 2 != 0 || args.max_n > 12)
        throw std::invalid_argument("validate: max-n must be even, >= 2 and <= 12");

    using CheckFn = std::function<std::vector<Check>()>;
    const std::vector<CheckFn> checks = {
        [&] { return std::vector<Check>{check_hamiltonian_vs_oracle(args.max_n)}; },
        [&] { return std::vector<Check>{check_eigenvalues_vs_oracle(args.max_n)}; },
        [&] { return std::vector<Check>{check_parity_commutator(args.max_n)}; },
        [&] { return std::vector<Check>{check_ground_state_parity(args.max_n)}; },
        [&] { return std::vector<Check>{check_evolution_vs_expm(args.max_n)}; },
        [&] { return std::vector<Check>{check_ensemble_vs_time_average(args.max_n)}; },
        [&] { return std::vector<Check>{check_mqc_sum_rules()}; },
        [&] { return std::vector<Check>{check_fixed_point_gradients()}; },
        [&] { return std::vector<Check>{check_critical_quench_values()}; },
        [&] { return std::vector<Check>{check_classical_dos_flat()}; },
        [&] { return std::vector<Check>{check_classical_dos_normalization()}; },
        [&] { return check_conservation(); },
    };

    const auto results = parallel_map<std::vector<Check>>(
        checks.size(), args.workers, [&](std::size_t i) { return checks[i](); });

    CsvWriter csv(ctx.path("validate.csv"), {"check", "status", "observed", "bound"});
    int failures = 0;
    for (const auto& group : results)
        for (const Check& c : group) {
            csv.row(c.name, c.pass ? "pass" : "fail", c.observed, c.bound);
            if (!c.pass) ++failures;
        }

    ctx.write_manifest(
        {{"max_n", args.max_n}, {"workers", args.workers}, {"failures", failures}});
    return failures;
}

}  // namespace lmgmqc
