#include "monosys/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include "monosys/errors.hpp"

namespace monosys {

namespace {

constexpr double kBisectionTol = 1e-12;
constexpr double kJacobiRelTol = 1e-12;
constexpr double kPivMin = 1e-290;

// Sturm count: number of eigenvalues of the tridiagonal matrix strictly
// below x, from the signs of the shifted LDL^T pivots (Barth, Martin,
// Wilkinson bisection).
std::size_t sturm_count(const Vector& d, const Vector& e, double x) {
  std::size_t count = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (q == 0.0) q = -kPivMin;
    const double esq = (i == 0) ? 0.0 : e[i - 1] * e[i - 1];
    q = (d[i] - x) - esq / q;
    if (q < 0.0) ++count;
  }
  return count;
}

// k-th smallest eigenvalue (0-based) by bisection on the Sturm count.
double tridiagonal_eigenvalue(const Vector& d, const Vector& e, std::size_t k,
                              double lo, double hi) {
  for (int iter = 0; iter < 200 && hi - lo > kBisectionTol; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // interval at floating-point resolution
    if (sturm_count(d, e, mid) <= k) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<double> tridiagonal_spectrum(const SymmetricMatrix& A) {
  const Vector& d = A.diagonal();
  const Vector& e = A.off_diagonal();
  const double lo = A.gershgorin_lower() - 1.0;
  const double hi = A.gershgorin_upper() + 1.0;
  std::vector<double> eig(A.dim());
  for (std::size_t k = 0; k < A.dim(); ++k) {
    eig[k] = tridiagonal_eigenvalue(d, e, k, lo, hi);
  }
  return eig;
}

double frobenius(const std::vector<double>& a) {
  double s = 0.0;
  for (double v : a) s += v * v;
  return std::sqrt(s);
}

// Cyclic Jacobi sweeps, eigenvalues only (no eigenvector accumulation).
std::vector<double> jacobi_spectrum(const SymmetricMatrix& A) {
  const std::size_t n = A.dim();
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = A.entry(i, j);
  }

  const double norm_f = frobenius(a);
  const double threshold = kJacobiRelTol * (norm_f > 0.0 ? norm_f : 1.0);

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) off += 2.0 * a[i * n + j] * a[i * n + j];
    }
    if (std::sqrt(off) <= threshold) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        a[p * n + p] -= t * apq;
        a[q * n + q] += t * apq;
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a[r * n + p];
          const double arq = a[r * n + q];
          a[r * n + p] = arp - s * (arq + tau * arp);
          a[p * n + r] = a[r * n + p];
          a[r * n + q] = arq + s * (arp - tau * arq);
          a[q * n + r] = a[r * n + q];
        }
      }
    }
  }

  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a[i * n + i];
  std::sort(eig.begin(), eig.end());
  return eig;
}

}  // namespace

Spectrum compute_spectrum(const SymmetricMatrix& A) {
  const std::size_t n = A.dim();
  if (n == 1) {
    return {{A.entry(0, 0)}, Spectrum::Method::Analytic};
  }
  if (n == 2) {
    // Roots of (a-t)(c-t) - b^2.
    const double a = A.entry(0, 0), b = A.entry(0, 1), c = A.entry(1, 1);
    const double mean = 0.5 * (a + c);
    const double disc = std::sqrt(0.25 * (a - c) * (a - c) + b * b);
    return {{mean - disc, mean + disc}, Spectrum::Method::Analytic};
  }
  std::vector<double> eig =
      A.is_tridiagonal() ? tridiagonal_spectrum(A) : jacobi_spectrum(A);
  return {std::move(eig), Spectrum::Method::Iterative};
}

double spectral_norm(const SymmetricMatrix& A) {
  if (A.is_tridiagonal() && A.dim() > 2) {
    const Vector& d = A.diagonal();
    const Vector& e = A.off_diagonal();
    const double lo = A.gershgorin_lower() - 1.0;
    const double hi = A.gershgorin_upper() + 1.0;
    const double smallest = tridiagonal_eigenvalue(d, e, 0, lo, hi);
    const double largest = tridiagonal_eigenvalue(d, e, A.dim() - 1, lo, hi);
    return std::max(std::abs(smallest), std::abs(largest));
  }
  const Spectrum s = compute_spectrum(A);
  return std::max(std::abs(s.eigenvalues.front()), std::abs(s.eigenvalues.back()));
}

double smallest_eigenvalue(const SymmetricMatrix& A) {
  if (A.is_tridiagonal() && A.dim() > 2) {
    const double lo = A.gershgorin_lower() - 1.0;
    const double hi = A.gershgorin_upper() + 1.0;
    return tridiagonal_eigenvalue(A.diagonal(), A.off_diagonal(), 0, lo, hi);
  }
  return compute_spectrum(A).eigenvalues.front();
}

bool is_positive_definite(const SymmetricMatrix& A) {
  return smallest_eigenvalue(A) > 0.0;
}

}  // namespace monosys
