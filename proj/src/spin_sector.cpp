#include "lmg/spin_sector.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace lmg {

double SymTridiagonal::max_abs() const {
    double m = 0.0;
    for (double v : diag) m = std::max(m, std::abs(v));
    for (double v : offdiag) m = std::max(m, std::abs(v));
    return m;
}

std::vector<double> SymTridiagonal::apply(const std::vector<double>& x) const {
    const std::size_t n = dim();
    if (x.size() != n) throw std::invalid_argument("SymTridiagonal::apply: size mismatch");
    std::vector<double> y(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double v = diag[i] * x[i];
        if (i > 0) v += offdiag[i - 1] * x[i - 1];
        if (i + 1 < n) v += offdiag[i] * x[i + 1];
        y[i] = v;
    }
    return y;
}

std::vector<std::complex<double>> SymTridiagonal::apply_complex(
    const std::vector<std::complex<double>>& x) const {
    const std::size_t n = dim();
    if (x.size() != n) throw std::invalid_argument("SymTridiagonal::apply: size mismatch");
    std::vector<std::complex<double>> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::complex<double> v = diag[i] * x[i];
        if (i > 0) v += offdiag[i - 1] * x[i - 1];
        if (i + 1 < n) v += offdiag[i] * x[i + 1];
        y[i] = v;
    }
    return y;
}

double SymTridiagonal::quadratic_form(const std::vector<double>& x) const {
    const auto y = apply(x);
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

void validate_params(const ModelParams& params) {
    if (params.kappa < 0.0 || params.kappa > 1.0)
        throw std::invalid_argument("ModelParams: kappa must lie in [0, 1], got " +
                                    std::to_string(params.kappa));
    if (params.n_spins < 2 || params.n_spins % 2 != 0)
        throw std::invalid_argument("ModelParams: n_spins must be even and >= 2, got " +
                                    std::to_string(params.n_spins));
    if (!std::isfinite(params.chi))
        throw std::invalid_argument("ModelParams: chi must be finite");
}

SpinSector build_sector(int n_spins) {
    if (n_spins < 2 || n_spins % 2 != 0)
        throw std::invalid_argument("build_sector: n_spins must be even and >= 2, got " +
                                    std::to_string(n_spins));
    SpinSector sector;
    sector.n_spins = n_spins;
    sector.dim = n_spins / 2 + 1;
    sector.m_values.resize(sector.dim);
    const int j = n_spins / 2;
    for (int i = 0; i < sector.dim; ++i) sector.m_values[i] = -j + 2 * i;
    return sector;
}

SymTridiagonal build_hamiltonian(const ModelParams& params, double effective_coupling) {
    validate_params(params);
    const SpinSector sector = build_sector(params.n_spins);
    const double n = params.n_spins;
    const double j = 0.5 * n;
    const double jj1 = j * (j + 1.0);
    const double g = effective_coupling;

    SymTridiagonal h;
    h.diag.resize(sector.dim);
    h.offdiag.resize(sector.dim - 1);

    // <m|Jx^2|m> = (j(j+1) - m^2)/2
    // <m+2|Jx^2|m> = sqrt((j-m)(j+m+1)(j-m-1)(j+m+2))/4
    for (int i = 0; i < sector.dim; ++i) {
        const double m = sector.m_values[i];
        h.diag[i] = -(2.0 * g / n) * 0.5 * (jj1 - m * m) + (1.0 - params.kappa) * (m + 0.5 * n);
    }
    for (int i = 0; i + 1 < sector.dim; ++i) {
        const double m = sector.m_values[i];
        const double amp = std::sqrt((j - m) * (j + m + 1.0) * (j - m - 1.0) * (j + m + 2.0));
        h.offdiag[i] = -(2.0 * g / n) * 0.25 * amp;
    }
    return h;
}

SymTridiagonal build_h0(const ModelParams& params) {
    return build_hamiltonian(params, params.kappa);
}

SymTridiagonal build_h1(const ModelParams& params) {
    return build_hamiltonian(params, params.kappa + params.chi);
}

}  // namespace lmg
