#pragma once

#include <complex>
#include <vector>

namespace lmg {

/// Maximal-spin (j = N/2), even-parity sector of N collective spin-1/2s.
/// Basis states are the J_z eigenstates |m> with (-1)^(j+m) = +1, ordered
/// by ascending m, so consecutive basis states differ by m -> m+2.
struct SpinSector {
    int n_spins = 0;            // N, even, >= 2
    int dim = 0;                // N/2 + 1
    std::vector<int> m_values;  // (-j, -j+2, ..., j-2, j)

    int j() const { return n_spins / 2; }
};

/// Model parameters. kappa is the spin-spin coupling of the static
/// Hamiltonian, chi the extra coupling switched on at t = 0.
struct ModelParams {
    double kappa = 0.0;  // in [0, 1]
    double chi = 0.0;    // any real, often negative
    int n_spins = 0;     // even, >= 2
};

/// Real symmetric tridiagonal matrix: diag has dim entries, offdiag
/// couples neighbours (offdiag[i] sits at (i, i+1) and (i+1, i)).
struct SymTridiagonal {
    std::vector<double> diag;
    std::vector<double> offdiag;

    std::size_t dim() const { return diag.size(); }

    /// max |entry|
    double max_abs() const;

    /// y = A x.
    std::vector<double> apply(const std::vector<double>& x) const;
    std::vector<std::complex<double>> apply_complex(
        const std::vector<std::complex<double>>& x) const;

    /// <x|A|x> for a real unit vector x.
    double quadratic_form(const std::vector<double>& x) const;
};

SpinSector build_sector(int n_spins);

/// H(g) = -(2 g / N) Jx^2 + (1 - kappa) (Jz + N/2) restricted to the
/// even-parity Dicke basis. g = kappa gives the static Hamiltonian,
/// g = kappa + chi the post-quench one.
SymTridiagonal build_hamiltonian(const ModelParams& params, double effective_coupling);

SymTridiagonal build_h0(const ModelParams& params);
SymTridiagonal build_h1(const ModelParams& params);

void validate_params(const ModelParams& params);

}  // namespace lmg
