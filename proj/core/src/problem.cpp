#include "monosys/problem.hpp"

#include <utility>

#include "monosys/errors.hpp"
#include "monosys/spectrum.hpp"

namespace monosys {

const char* to_string(Regime regime) {
  return regime == Regime::Superquadratic ? "superquadratic" : "subquadratic";
}

ProblemInstance::ProblemInstance(SymmetricMatrix A, double lambda, ComponentwiseNonlinearity h,
                                 Regime regime, MonotonicityConstants constants,
                                 std::optional<GrowthCertificate> growth, ParameterSpace space)
    : A_(std::move(A)),
      lambda_(lambda),
      h_(std::move(h)),
      regime_(regime),
      constants_(constants),
      growth_(growth),
      space_(std::move(space)),
      matrix_norm_(0.0),
      matrix_lambda1_(0.0) {
  if (A_.dim() != h_.dim()) {
    throw DimensionError("ProblemInstance: dim(A) != dim(h)");
  }
  if (!(lambda_ > 0.0)) {
    throw ValidationError("ProblemInstance: lambda must be > 0");
  }
  if (!constants_.a && !constants_.b) {
    throw ValidationError("ProblemInstance: at least one monotonicity constant required");
  }
  matrix_norm_ = spectral_norm(A_);
  matrix_lambda1_ = smallest_eigenvalue(A_);
  if (regime_ == Regime::Superquadratic) {
    constants_.require_a();
  } else {
    constants_.require_b();
    if (!(matrix_lambda1_ > 0.0)) {
      throw ValidationError("ProblemInstance: subquadratic regime requires positive definite A");
    }
  }
  if (growth_) {
    const bool matches =
        (regime_ == Regime::Superquadratic &&
         growth_->kind == GrowthCertificate::Kind::Superquadratic) ||
        (regime_ == Regime::Subquadratic &&
         growth_->kind == GrowthCertificate::Kind::Subquadratic);
    if (!matches) {
      throw ValidationError("ProblemInstance: growth certificate kind does not match regime");
    }
  }
}

double ProblemInstance::monotonicity_constant() const {
  if (regime_ == Regime::Superquadratic) {
    return lambda_ * constants_.require_a() - matrix_norm_;
  }
  return matrix_lambda1_ - lambda_ * constants_.require_b();
}

}  // namespace monosys
