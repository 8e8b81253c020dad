#pragma once

#include <span>
#include <vector>

#include "lmg/matrix.hpp"
#include "lmg/spin_sector.hpp"

namespace lmg {

/// Full spectrum of a real symmetric tridiagonal matrix.
/// values are ascending; vectors stores one orthonormal eigenvector per
/// *row* (row k pairs with values[k]), which keeps the hot loops of the
/// spectral evolution contiguous. Sign convention: the largest-magnitude
/// component of each eigenvector is positive (ties: lowest index wins).
struct EigenDecomposition {
    std::vector<double> values;
    Matrix vectors;

    std::span<const double> eigenvector(std::size_t k) const { return vectors.row(k); }
    std::size_t dim() const { return values.size(); }
};

/// Eigenvalues and eigenvectors via implicit-shift QL iteration.
/// Throws numerical_error if the iteration budget (50 * dim sweeps)
/// is exhausted before deflation completes.
EigenDecomposition eigh(const SymTridiagonal& matrix);

/// Eigenvalues only (same iteration, no vector updates); ascending.
std::vector<double> eigvals(const SymTridiagonal& matrix);

}  // namespace lmg
