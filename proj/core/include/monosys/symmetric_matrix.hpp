#pragma once

#include <cstddef>
#include <vector>

#include "monosys/vector.hpp"

namespace monosys {

/// Real symmetric n x n matrix. Two storage schemes:
///  - Dense: packed lower triangle, so symmetry is a representation
///    invariant rather than a runtime check.
///  - Tridiagonal: main diagonal plus one off-diagonal band.
class SymmetricMatrix {
 public:
  enum class Storage { Dense, Tridiagonal };

  /// Builds from full rows; throws ValidationError unless rows form an
  /// exactly symmetric square matrix with finite entries.
  static SymmetricMatrix from_rows(const std::vector<Vector>& rows);

  /// Dense from the packed lower triangle, row by row (row i holds i+1
  /// entries). Symmetry holds by construction.
  static SymmetricMatrix from_lower_triangle(std::size_t n, Vector packed_lower);

  static SymmetricMatrix tridiagonal(Vector diagonal, Vector off_diagonal);

  std::size_t dim() const { return n_; }
  Storage storage() const { return storage_; }
  bool is_tridiagonal() const { return storage_ == Storage::Tridiagonal; }

  double entry(std::size_t i, std::size_t j) const;

  Vector matvec(const Vector& x) const;

  /// Tridiagonal accessors (ValidationError on dense storage).
  const Vector& diagonal() const;
  const Vector& off_diagonal() const;

  /// Max absolute row sum bounds used to bracket the spectrum.
  double gershgorin_lower() const;
  double gershgorin_upper() const;

 private:
  SymmetricMatrix() = default;

  std::size_t n_ = 0;
  Storage storage_ = Storage::Dense;
  Vector lower_;  // dense packed lower triangle
  Vector diag_;   // tridiagonal
  Vector off_;
};

/// The classic second-difference Dirichlet matrix: 2 on the diagonal, -1 on
/// both off-diagonals, stored tridiagonally. Positive definite for every n.
SymmetricMatrix build_dirichlet_matrix(std::size_t n);

}  // namespace monosys
