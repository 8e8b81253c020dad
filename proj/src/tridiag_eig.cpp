#include "lmg/tridiag_eig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "lmg/errors.hpp"

namespace lmg {
namespace {

double pythag(double a, double b) { return std::hypot(a, b); }

void check_input(const SymTridiagonal& matrix) {
    const std::size_t n = matrix.dim();
    if (n < 1) throw std::invalid_argument("eigh: empty matrix");
    if (matrix.offdiag.size() + 1 != n)
        throw std::invalid_argument("eigh: offdiag must have dim-1 entries");
    for (double v : matrix.diag)
        if (!std::isfinite(v)) throw std::invalid_argument("eigh: non-finite diagonal entry");
    for (double v : matrix.offdiag)
        if (!std::isfinite(v)) throw std::invalid_argument("eigh: non-finite offdiagonal entry");
}

// Implicit-shift QL on (d, e), following the classic EISPACK tql2 scheme.
// When z is non-null the Givens rotations are accumulated into its rows,
// so on exit row k of *z is the eigenvector of d[k]. e is destroyed.
void ql_implicit(std::vector<double>& d, std::vector<double>& e, Matrix* z) {
    const std::size_t n = d.size();
    if (n == 1) return;
    e.push_back(0.0);  // sentinel e[n-1]

    const double eps = std::numeric_limits<double>::epsilon();
    const long max_sweeps = 50L * static_cast<long>(n);
    long sweeps = 0;

    for (std::size_t l = 0; l < n; ++l) {
        for (;;) {
            // Locate a negligible subdiagonal element to deflate at.
            std::size_t m = l;
            while (m + 1 < n) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eps * dd) break;
                ++m;
            }
            if (m == l) break;

            if (++sweeps > max_sweeps)
                throw numerical_error("eigh: QL iteration exceeded " +
                                      std::to_string(max_sweeps) + " sweeps");

            // Wilkinson-style implicit shift from the leading 2x2.
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = pythag(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0, c = 1.0, p = 0.0;
            bool underflow = false;

            for (std::size_t i = m; i-- > l;) {
                double f = s * e[i];
                const double b = c * e[i];
                r = pythag(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    // Rotation underflowed; split the matrix here and retry.
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;

                if (z) {
                    // Rotate eigenvector rows i and i+1 (contiguous).
                    double* lo = z->row(i).data();
                    double* hi = z->row(i + 1).data();
                    for (std::size_t k = 0; k < n; ++k) {
                        f = hi[k];
                        hi[k] = s * lo[k] + c * f;
                        lo[k] = c * lo[k] - s * f;
                    }
                }
            }
            if (underflow) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
}

void sort_ascending(std::vector<double>& d, Matrix* z) {
    const std::size_t n = d.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(),
                     [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });

    std::vector<double> ds(n);
    for (std::size_t k = 0; k < n; ++k) ds[k] = d[perm[k]];
    d = std::move(ds);

    if (z) {
        Matrix sorted(n, n);
        for (std::size_t k = 0; k < n; ++k) {
            auto src = z->row(perm[k]);
            std::copy(src.begin(), src.end(), sorted.row(k).begin());
        }
        *z = std::move(sorted);
    }
}

void fix_signs(Matrix& z) {
    for (std::size_t k = 0; k < z.rows(); ++k) {
        auto row = z.row(k);
        std::size_t imax = 0;
        double vmax = 0.0;
        for (std::size_t i = 0; i < row.size(); ++i) {
            const double a = std::abs(row[i]);
            if (a > vmax) {
                vmax = a;
                imax = i;
            }
        }
        if (row[imax] < 0.0)
            for (double& v : row) v = -v;
    }
}

}  // namespace

EigenDecomposition eigh(const SymTridiagonal& matrix) {
    check_input(matrix);
    const std::size_t n = matrix.dim();

    EigenDecomposition out;
    out.values = matrix.diag;
    out.vectors = Matrix(n, n, 0.0);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, i) = 1.0;

    std::vector<double> e = matrix.offdiag;
    ql_implicit(out.values, e, &out.vectors);
    sort_ascending(out.values, &out.vectors);
    fix_signs(out.vectors);
    return out;
}

std::vector<double> eigvals(const SymTridiagonal& matrix) {
    check_input(matrix);
    std::vector<double> d = matrix.diag;
    std::vector<double> e = matrix.offdiag;
    ql_implicit(d, e, nullptr);
    sort_ascending(d, nullptr);
    return d;
}

}  // namespace lmg
