#pragma once

#include <vector>

#include "monosys/symmetric_matrix.hpp"

namespace monosys {

/// All eigenvalues of a symmetric matrix, sorted ascending.
struct Spectrum {
  enum class Method { Analytic, Iterative };

  std::vector<double> eigenvalues;  // lambda_1 <= ... <= lambda_n
  Method method = Method::Iterative;
};

/// Full spectrum. n <= 2 uses closed forms; otherwise Sturm-sequence
/// bisection for tridiagonal storage and a cyclic Jacobi sweep for dense.
/// Converged to 1e-12 (bisection interval width; Jacobi off-diagonal
/// Frobenius norm relative to the matrix Frobenius norm).
Spectrum compute_spectrum(const SymmetricMatrix& A);

/// Operator 2-norm = max |lambda_i|. Tridiagonal storage only extracts the
/// two extreme eigenvalues instead of the full spectrum.
double spectral_norm(const SymmetricMatrix& A);

/// lambda_1, the smallest eigenvalue.
double smallest_eigenvalue(const SymmetricMatrix& A);

/// True iff the converged lambda_1 is strictly positive.
bool is_positive_definite(const SymmetricMatrix& A);

}  // namespace monosys
