#pragma once

#include <complex>
#include <vector>

namespace mdiqss {

// Dense Hermitian matrix in row-major order, n*n entries.
struct HermitianMatrix {
    int n = 0;
    std::vector<std::complex<double>> a;

    std::complex<double>& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    const std::complex<double>& at(int i, int j) const {
        return a[static_cast<std::size_t>(i) * n + j];
    }
};

// Eigenvalues of a Hermitian matrix by cyclic Jacobi rotations, ascending.
// Sweeps run until the off-diagonal Frobenius norm drops below off_tol.
std::vector<double> hermitian_eigenvalues(HermitianMatrix m, double off_tol = 1e-13);

} // namespace mdiqss
