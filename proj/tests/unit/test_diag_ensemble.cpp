#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "lmg/classical.hpp"
#include "lmg/dense_oracle.hpp"
#include "lmg/diagonal_ensemble.hpp"
#include "lmg/errors.hpp"
#include "lmg/quench.hpp"

using namespace lmg;

TEST_SUITE("diag_ensemble") {

TEST_CASE("zero quench gives the pure projector") {
    const QuenchSetup setup = prepare({0.5, 0.0, 20});
    const DiagonalEnsemble ens = build_diagonal_ensemble(setup);
    const std::size_t dim = setup.psi0.size();
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b)
            CHECK(std::abs(ens.d_matrix(a, b) - setup.psi0[a] * setup.psi0[b]) <= 1e-12);

    SUBCASE("MQC spectrum equals the pure-state spectrum") {
        std::vector<double> p0(dim);
        for (std::size_t m = 0; m < dim; ++m) p0[m] = setup.psi0[m] * setup.psi0[m];
        const MqcSpectrum pure = mqc_from_probabilities(p0, setup.sector.m_values);
        const MqcSpectrum mixed = mqc_of_ensemble(ens);
        for (std::size_t i = 0; i < pure.intensities.size(); ++i)
            CHECK(std::abs(pure.intensities[i] - mixed.intensities[i]) <= 1e-12);
        CHECK(std::abs(mixed.total() - 1.0) <= 1e-10);
    }
}

TEST_CASE("matches the brute-force time average") {
    const double kappa = 0.5;
    const double chi = 2.0 * critical_quench_strength(kappa);
    const ModelParams params{kappa, chi, 8};
    const QuenchSetup setup = prepare(params);
    const DiagonalEnsemble ens = build_diagonal_ensemble(setup);

    const DenseOracle oracle = build_dense_oracle(params, kappa + chi);
    Eigen::VectorXd psi0(static_cast<int>(setup.psi0.size()));
    for (std::size_t m = 0; m < setup.psi0.size(); ++m) psi0(static_cast<int>(m)) = setup.psi0[m];
    const Eigen::MatrixXd averaged = oracle_time_averaged_rho(oracle.h_even, psi0, 10000, 1e5);

    const std::size_t dim = setup.psi0.size();
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b)
            CHECK(std::abs(ens.d_matrix(a, b) -
                           averaged(static_cast<int>(a), static_cast<int>(b))) <= 5e-3);
}

TEST_CASE("density matrix axioms") {
    for (int n : {8, 40}) {
        for (double chi_ratio : {0.4, 1.0, 1.7}) {
            const double chi = chi_ratio * critical_quench_strength(0.5);
            const QuenchSetup setup = prepare({0.5, chi, n});
            const DiagonalEnsemble ens = build_diagonal_ensemble(setup);
            const std::size_t dim = ens.d_matrix.rows();

            double trace = 0.0, asym = 0.0;
            Eigen::MatrixXd d(dim, dim);
            for (std::size_t a = 0; a < dim; ++a) {
                trace += ens.d_matrix(a, a);
                for (std::size_t b = 0; b < dim; ++b) {
                    asym = std::max(asym,
                                    std::abs(ens.d_matrix(a, b) - ens.d_matrix(b, a)));
                    d(static_cast<int>(a), static_cast<int>(b)) = ens.d_matrix(a, b);
                }
            }
            CAPTURE(n);
            CAPTURE(chi_ratio);
            CHECK(std::abs(trace - 1.0) <= 1e-10);
            CHECK(asym <= 1e-12);
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(d);
            CHECK(solver.eigenvalues().minCoeff() >= -1e-10);
        }
    }
}

TEST_CASE("degenerate post-quench spectrum is refused") {
    QuenchSetup setup;
    setup.params = ModelParams{0.5, 0.0, 4};
    setup.sector = build_sector(4);
    setup.h1 = SymTridiagonal{{1.0, 1.0, 2.0}, {0.0, 0.0}};
    setup.h0 = setup.h1;
    setup.eig1 = eigh(setup.h1);
    setup.psi0 = {1.0, 0.0, 0.0};
    setup.overlaps = {1.0, 0.0, 0.0};
    CHECK_THROWS_AS(build_diagonal_ensemble(setup), numerical_error);
}

TEST_CASE("sum rule gives the purity of the averaged state") {
    const QuenchSetup setup = prepare({0.5, 1.3 * critical_quench_strength(0.5), 30});
    const DiagonalEnsemble ens = build_diagonal_ensemble(setup);
    const std::size_t dim = ens.d_matrix.rows();

    double purity = 0.0;
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b)
            purity += ens.d_matrix(a, b) * ens.d_matrix(a, b);

    const MqcSpectrum spec = mqc_of_ensemble(ens);
    CHECK(std::abs(spec.total() - purity) <= 1e-10);
    CHECK(purity <= 1.0 + 1e-12);
    CHECK(spec.zero_mode <= 1.0 + 1e-12);
}

TEST_CASE("ensemble zero mode equals the averaged occupations") {
    // sum_m (time average of |zeta_m|^2)^2 -> I_0(rho_bar)
    const QuenchSetup setup = prepare({0.5, 1.3 * critical_quench_strength(0.5), 60});
    const DiagonalEnsemble ens = build_diagonal_ensemble(setup);

    const std::size_t dim = setup.psi0.size();
    std::vector<double> avg(dim, 0.0), probs(dim);
    const int samples = 2000;
    const std::vector<double> times = linspace(1e4, 1e4 + 1e3, samples);
    for (double t : times) {
        evolved_probabilities(setup, t, probs);
        for (std::size_t m = 0; m < dim; ++m) avg[m] += probs[m];
    }
    double i0_from_dynamics = 0.0;
    for (std::size_t m = 0; m < dim; ++m) {
        avg[m] /= samples;
        i0_from_dynamics += avg[m] * avg[m];
    }
    CHECK(std::abs(i0_from_dynamics - mqc_of_ensemble(ens).zero_mode) <= 1e-3);
}

TEST_CASE("matrix map layout") {
    const QuenchSetup setup = prepare({0.5, 0.4 * critical_quench_strength(0.5), 20});
    const DiagonalEnsemble ens = build_diagonal_ensemble(setup);
    const auto entries = d_matrix_map(ens);
    const std::size_t dim = ens.d_matrix.rows();
    REQUIRE(entries.size() == dim * dim);

    SUBCASE("diagonal sums to one") {
        double trace = 0.0;
        for (const auto& e : entries)
            if (e.l_over_n == 0.0) trace += e.value;
        CHECK(std::abs(trace - 1.0) <= 1e-10);
    }
    SUBCASE("symmetric under l -> -l") {
        for (const auto& e : entries) {
            bool found = false;
            for (const auto& f : entries) {
                if (std::abs(f.m_over_n - (e.m_over_n + e.l_over_n)) <= 1e-12 &&
                    std::abs(f.l_over_n + e.l_over_n) <= 1e-12) {
                    CHECK(std::abs(f.value - e.value) <= 1e-12);
                    found = true;
                    break;
                }
            }
            CHECK(found);
        }
    }
}

TEST_CASE("support along l shrinks across the transition") {
    // second moment of |D|^2 along l, below vs above the critical quench
    auto l_second_moment = [](const DiagonalEnsemble& ens) {
        double num = 0.0, den = 0.0;
        for (const auto& e : d_matrix_map(ens)) {
            const double w = e.value * e.value;
            num += w * e.l_over_n * e.l_over_n;
            den += w;
        }
        return num / den;
    };
    const double chi_c = critical_quench_strength(0.5);
    const QuenchSetup below = prepare({0.5, 0.2 * chi_c, 200});
    const QuenchSetup above = prepare({0.5, 2.0 * chi_c, 200});
    const double moment_below = l_second_moment(build_diagonal_ensemble(below));
    const double moment_above = l_second_moment(build_diagonal_ensemble(above));
    CHECK(moment_below > moment_above);
}

}  // TEST_SUITE
