#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "monosys/bvp.hpp"
#include "monosys/dependence.hpp"
#include "monosys/problem.hpp"
#include "monosys/solver.hpp"

namespace monosys::cli {

/// Configuration or input errors; the CLI maps these to exit code 2.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Family { Cubic, Arctan, EmdenFowler, Linear, Zero };

struct CheckSpec {
  std::vector<Assumption> assumptions;
  std::optional<double> a;  // claimed constants; family defaults otherwise
  std::optional<double> b;
  std::optional<GrowthCertificate> growth;
  std::optional<double> radius;
  std::size_t samples = 100000;
};

struct SequenceSpec {
  bool geometric = true;
  Vector limit;
  Vector direction;            // geometric
  std::vector<Vector> points;  // explicit
  std::size_t count = 0;
};

/// Parsed, validated run configuration. Field names in error messages
/// match the config document keys.
struct RunConfig {
  std::optional<SymmetricMatrix> matrix;
  std::optional<Family> family;
  double emden_fowler_exponent = 3.0;
  std::optional<Regime> regime;
  std::optional<double> lambda;
  std::optional<ParameterSpace> box;
  std::optional<ParameterPoint> parameter;
  std::optional<double> override_a;
  std::optional<double> override_b;
  SolveConfig solver;
  std::optional<SequenceSpec> sequence;
  std::optional<CheckSpec> check;

  std::string digest;  // FNV-1a of the raw config text, hex
};

/// Parses a config document (JSON). Throws ConfigError naming the violated
/// field on any problem.
RunConfig parse_config(const std::string& text);

RunConfig load_config_file(const std::string& path);

/// Builds the certified nonlinearity the config names.
CertifiedNonlinearity build_family(const RunConfig& config);

/// Assembles the full problem instance (matrix, lambda, family, regime,
/// constants with any overrides applied, growth certificate, box).
ProblemInstance build_problem(const RunConfig& config);

/// Builds the parameter sequence for a study.
ParameterSequence build_sequence(const RunConfig& config, const ParameterSpace& space);

std::uint64_t fnv1a64(const std::string& bytes);

}  // namespace monosys::cli
