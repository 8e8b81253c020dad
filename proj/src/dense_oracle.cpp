#include "lmg/dense_oracle.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace lmg {
namespace {

constexpr int kMaxOracleSpins = 12;

void check_oracle_size(int n_spins) {
    if (n_spins < 2 || n_spins % 2 != 0)
        throw std::invalid_argument("dense oracle: n_spins must be even and >= 2");
    if (n_spins > kMaxOracleSpins)
        throw std::invalid_argument("dense oracle: n_spins > " +
                                    std::to_string(kMaxOracleSpins) +
                                    " exceeds the memory guard");
}

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

Eigen::MatrixXd oracle_parity_operator(int n_spins) {
    check_oracle_size(n_spins);
    const int size = 1 << n_spins;
    Eigen::MatrixXd pi = Eigen::MatrixXd::Zero(size, size);
    for (int s = 0; s < size; ++s)
        pi(s, s) = (std::popcount(static_cast<unsigned>(s)) % 2 == 0) ? 1.0 : -1.0;
    return pi;
}

Eigen::MatrixXd dicke_projector(int n_spins, bool even_parity) {
    check_oracle_size(n_spins);
    const int size = 1 << n_spins;
    const int j = n_spins / 2;

    // m = popcount - N/2; parity of |m> is (-1)^(j+m) = (-1)^popcount.
    std::vector<int> m_list;
    for (int m = -j; m <= j; ++m) {
        const bool even = ((j + m) % 2 == 0);
        if (even == even_parity) m_list.push_back(m);
    }

    Eigen::MatrixXd p = Eigen::MatrixXd::Zero(size, static_cast<int>(m_list.size()));
    for (std::size_t col = 0; col < m_list.size(); ++col) {
        const int n_up = m_list[col] + j;
        const double amp = 1.0 / std::sqrt(binomial(n_spins, n_up));
        for (int s = 0; s < size; ++s)
            if (std::popcount(static_cast<unsigned>(s)) == n_up)
                p(s, static_cast<int>(col)) = amp;
    }
    return p;
}

DenseOracle build_dense_oracle(const ModelParams& params, double effective_coupling) {
    validate_params(params);
    check_oracle_size(params.n_spins);

    const int n = params.n_spins;
    const int size = 1 << n;
    const double g = effective_coupling;
    const double jx2_coeff = -2.0 * g / n;

    DenseOracle oracle;
    oracle.n_spins = n;
    oracle.h_full = Eigen::MatrixXd::Zero(size, size);
    Eigen::MatrixXd& h = oracle.h_full;

    // Jz + N/2 is diagonal with entry popcount(s); Jx^2 carries N/4 on
    // the diagonal and 1/2 on every double spin flip.
    for (int s = 0; s < size; ++s) {
        const double n_up = std::popcount(static_cast<unsigned>(s));
        h(s, s) += (1.0 - params.kappa) * n_up + jx2_coeff * 0.25 * n;
        for (int i = 0; i < n; ++i)
            for (int k = i + 1; k < n; ++k) {
                const int t = s ^ (1 << i) ^ (1 << k);
                h(t, s) += jx2_coeff * 0.5;
            }
    }

    const Eigen::MatrixXd p_even = dicke_projector(n, true);
    const Eigen::MatrixXd p_odd = dicke_projector(n, false);
    oracle.h_even = p_even.transpose() * h * p_even;
    oracle.h_odd = p_odd.transpose() * h * p_odd;
    return oracle;
}

DenseOracle build_dense_oracle(const ModelParams& params) {
    return build_dense_oracle(params, params.kappa);
}

Eigen::MatrixXcd expm(const Eigen::MatrixXcd& a) {
    const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();  // inf-norm
    int squarings = 0;
    if (norm > 0.5) squarings = std::max(0, static_cast<int>(std::ceil(std::log2(norm / 0.5))));
    const Eigen::MatrixXcd scaled = a / std::pow(2.0, squarings);

    const Eigen::Index dim = a.rows();
    Eigen::MatrixXcd result = Eigen::MatrixXcd::Identity(dim, dim);
    Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(dim, dim);
    for (int k = 1; k <= 64; ++k) {
        term = (term * scaled) / static_cast<double>(k);
        result += term;
        if (term.cwiseAbs().maxCoeff() < 1e-18 * result.cwiseAbs().maxCoeff()) break;
    }
    for (int k = 0; k < squarings; ++k) result = result * result;
    return result;
}

Eigen::VectorXcd oracle_evolve(const Eigen::MatrixXd& h_block, const Eigen::VectorXd& psi0,
                               double t) {
    const std::complex<double> minus_i(0.0, -1.0);
    const Eigen::MatrixXcd u = expm(minus_i * t * h_block.cast<std::complex<double>>());
    return u * psi0.cast<std::complex<double>>();
}

Eigen::MatrixXd oracle_time_averaged_rho(const Eigen::MatrixXd& h_block,
                                         const Eigen::VectorXd& psi0, int n_samples,
                                         double t_max, double seed_offset) {
    if (n_samples < 1) throw std::invalid_argument("oracle_time_averaged_rho: n_samples < 1");
    const Eigen::Index dim = h_block.rows();
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(dim, dim);

    const double golden = 0.6180339887498948482;  // (sqrt(5)-1)/2
    for (int i = 0; i < n_samples; ++i) {
        double u = seed_offset + (i + 1) * golden;
        u -= std::floor(u);
        const Eigen::VectorXcd psi = oracle_evolve(h_block, psi0, u * t_max);
        acc += psi * psi.adjoint();
    }
    return (acc / static_cast<double>(n_samples)).real();
}

}  // namespace lmg
