#pragma once

#include <vector>

#include "qms/complex_matrix.hpp"
#include "qms/tolerances.hpp"

namespace qms {

struct EigenDecomposition {
    std::vector<double> eigenvalues;                   // descending
    std::vector<std::vector<cdouble>> eigenvectors;    // orthonormal, one per eigenvalue
};

// Eigendecomposition of a Hermitian matrix via cyclic Jacobi sweeps on the
// real symmetric embedding [[Re H, -Im H], [Im H, Re H]].  Rejects
// non-Hermitian input with the worst symmetry violation in the message.
EigenDecomposition eigendecompose_hermitian(const ComplexMatrix& m,
                                            double hermiticity_tol = kValidationTol);

// Eigenvalues only, descending.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m,
                                          double hermiticity_tol = kValidationTol);

double lambda_max(const ComplexMatrix& hermitian);
double lambda_min(const ComplexMatrix& hermitian);

// Cyclic Jacobi on a dense real symmetric matrix (row-major, n x n).
// Returns eigenvalues unsorted in `values` and the corresponding orthonormal
// column eigenvectors in `vectors` (vectors[k] is the k-th eigenvector).
void jacobi_real_symmetric(std::vector<double>& matrix, int n, std::vector<double>& values,
                           std::vector<std::vector<double>>* vectors);

}  // namespace qms
