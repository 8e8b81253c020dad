#pragma once

#include <Eigen/Dense>
#include <complex>

#include "lmg/spin_sector.hpp"

namespace lmg {

/// Brute-force construction of the model in the full 2^N product space,
/// used to validate the tridiagonal sector Hamiltonian and the spectral
/// evolution. Small N only (memory guard at N = 12).
struct DenseOracle {
    int n_spins = 0;
    Eigen::MatrixXd h_full;  // 2^N x 2^N, product basis
    Eigen::MatrixXd h_even;  // (N/2 + 1)^2, maximal-j even-parity block, ascending m
    Eigen::MatrixXd h_odd;   // (N/2)^2, maximal-j odd-parity block, ascending m
};

/// H(g) = -(2 g / N) Jx^2 + (1 - kappa)(Jz + N/2) assembled from
/// single-site spin-1/2 operators (bit flips), then projected onto the
/// j = N/2 parity blocks. Rejects N > 12.
DenseOracle build_dense_oracle(const ModelParams& params, double effective_coupling);

/// Same with g = kappa (the static Hamiltonian).
DenseOracle build_dense_oracle(const ModelParams& params);

/// Parity operator exp(i pi (j + Jz)) in the product basis; diagonal
/// with entries (-1)^popcount(s).
Eigen::MatrixXd oracle_parity_operator(int n_spins);

/// Columns are the j = N/2 Dicke states of the requested parity in the
/// product basis, ordered by ascending m.
Eigen::MatrixXd dicke_projector(int n_spins, bool even_parity);

/// exp(-i H t) psi, via scaling-and-squaring on the dense block.
Eigen::VectorXcd oracle_evolve(const Eigen::MatrixXd& h_block, const Eigen::VectorXd& psi0,
                               double t);

/// exp(A) for a dense complex matrix (scaling-and-squaring, Taylor core).
Eigen::MatrixXcd expm(const Eigen::MatrixXcd& a);

/// Long-time average of |psi(t)><psi(t)| sampled at n_samples points of
/// a golden-ratio (Weyl) sequence on [0, t_max], with expm evolution.
/// Returns the real part; the imaginary part averages out.
Eigen::MatrixXd oracle_time_averaged_rho(const Eigen::MatrixXd& h_block,
                                         const Eigen::VectorXd& psi0, int n_samples,
                                         double t_max, double seed_offset = 0.5);

}  // namespace lmg
