#include "monosys/symmetric_matrix.hpp"

#include <algorithm>
#include <cmath>

#include "monosys/errors.hpp"

namespace monosys {

SymmetricMatrix SymmetricMatrix::from_rows(const std::vector<Vector>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) throw DimensionError("from_rows: empty matrix");
  for (const auto& row : rows) {
    if (row.size() != n) throw DimensionError("from_rows: matrix is not square");
    if (!all_finite(row)) throw ValidationError("from_rows: non-finite entry");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rows[i][j] != rows[j][i]) {
        throw ValidationError("from_rows: input is not symmetric");
      }
    }
  }
  Vector packed;
  packed.reserve(n * (n + 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) packed.push_back(rows[i][j]);
  }
  return from_lower_triangle(n, std::move(packed));
}

SymmetricMatrix SymmetricMatrix::from_lower_triangle(std::size_t n, Vector packed_lower) {
  if (n == 0) throw DimensionError("from_lower_triangle: dimension must be >= 1");
  if (packed_lower.size() != n * (n + 1) / 2) {
    throw DimensionError("from_lower_triangle: packed size does not match dimension");
  }
  if (!all_finite(packed_lower)) {
    throw ValidationError("from_lower_triangle: non-finite entry");
  }
  SymmetricMatrix A;
  A.n_ = n;
  A.storage_ = Storage::Dense;
  A.lower_ = std::move(packed_lower);
  return A;
}

SymmetricMatrix SymmetricMatrix::tridiagonal(Vector diagonal, Vector off_diagonal) {
  const std::size_t n = diagonal.size();
  if (n == 0) throw DimensionError("tridiagonal: dimension must be >= 1");
  if (off_diagonal.size() + 1 != n) {
    throw DimensionError("tridiagonal: off-diagonal must have n-1 entries");
  }
  if (!all_finite(diagonal) || !all_finite(off_diagonal)) {
    throw ValidationError("tridiagonal: non-finite entry");
  }
  SymmetricMatrix A;
  A.n_ = n;
  A.storage_ = Storage::Tridiagonal;
  A.diag_ = std::move(diagonal);
  A.off_ = std::move(off_diagonal);
  return A;
}

double SymmetricMatrix::entry(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) throw DimensionError("entry: index out of range");
  if (storage_ == Storage::Tridiagonal) {
    if (i == j) return diag_[i];
    const std::size_t lo = std::min(i, j), hi = std::max(i, j);
    return hi - lo == 1 ? off_[lo] : 0.0;
  }
  const std::size_t r = std::max(i, j), c = std::min(i, j);
  return lower_[r * (r + 1) / 2 + c];
}

Vector SymmetricMatrix::matvec(const Vector& x) const {
  if (x.size() != n_) throw DimensionError("matvec: dimension mismatch");
  Vector y(n_, 0.0);
  if (storage_ == Storage::Tridiagonal) {
    for (std::size_t i = 0; i < n_; ++i) {
      double s = diag_[i] * x[i];
      if (i > 0) s += off_[i - 1] * x[i - 1];
      if (i + 1 < n_) s += off_[i] * x[i + 1];
      y[i] = s;
    }
    return y;
  }
  for (std::size_t i = 0; i < n_; ++i) {
    const double xi = x[i];
    const std::size_t base = i * (i + 1) / 2;
    double s = lower_[base + i] * xi;
    for (std::size_t j = 0; j < i; ++j) {
      const double a = lower_[base + j];
      s += a * x[j];
      y[j] += a * xi;
    }
    y[i] += s;
  }
  return y;
}

const Vector& SymmetricMatrix::diagonal() const {
  if (storage_ != Storage::Tridiagonal) {
    throw ValidationError("diagonal: not tridiagonal storage");
  }
  return diag_;
}

const Vector& SymmetricMatrix::off_diagonal() const {
  if (storage_ != Storage::Tridiagonal) {
    throw ValidationError("off_diagonal: not tridiagonal storage");
  }
  return off_;
}

double SymmetricMatrix::gershgorin_lower() const {
  double lo = 0.0;
  for (std::size_t i = 0; i < n_; ++i) {
    double radius = 0.0;
    for (std::size_t j = 0; j < n_; ++j) {
      if (j != i) radius += std::abs(entry(i, j));
    }
    const double b = entry(i, i) - radius;
    lo = (i == 0) ? b : std::min(lo, b);
  }
  return lo;
}

double SymmetricMatrix::gershgorin_upper() const {
  double hi = 0.0;
  for (std::size_t i = 0; i < n_; ++i) {
    double radius = 0.0;
    for (std::size_t j = 0; j < n_; ++j) {
      if (j != i) radius += std::abs(entry(i, j));
    }
    const double b = entry(i, i) + radius;
    hi = (i == 0) ? b : std::max(hi, b);
  }
  return hi;
}

SymmetricMatrix build_dirichlet_matrix(std::size_t n) {
  if (n == 0) throw DimensionError("build_dirichlet_matrix: dimension must be >= 1");
  return SymmetricMatrix::tridiagonal(Vector(n, 2.0), Vector(n - 1, -1.0));
}

}  // namespace monosys
