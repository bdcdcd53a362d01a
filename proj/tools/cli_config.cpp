#include "cli_config.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "monosys/errors.hpp"

namespace monosys::cli {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& why) {
  throw ConfigError("config field '" + field + "': " + why);
}

const json& require(const json& j, const std::string& field) {
  if (!j.contains(field)) fail(field, "missing");
  return j.at(field);
}

double number(const json& j, const std::string& field) {
  if (!j.is_number()) fail(field, "expected a number");
  return j.get<double>();
}

std::size_t count(const json& j, const std::string& field) {
  if (!j.is_number_unsigned()) fail(field, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

Vector vector(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) fail(field, "expected a nonempty array of numbers");
  Vector v;
  v.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_number()) fail(field, "expected numbers");
    v.push_back(e.get<double>());
  }
  return v;
}

SymmetricMatrix parse_matrix(const json& j) {
  const std::string type = require(j, "type").get<std::string>();
  if (type == "dirichlet") {
    return build_dirichlet_matrix(count(require(j, "n"), "matrix.n"));
  }
  if (type == "dense") {
    const json& rows = require(j, "rows");
    if (!rows.is_array() || rows.empty()) fail("matrix.rows", "expected a nonempty array");
    std::vector<Vector> r;
    for (const auto& row : rows) r.push_back(vector(row, "matrix.rows"));
    return SymmetricMatrix::from_rows(r);
  }
  if (type == "tridiagonal") {
    return SymmetricMatrix::tridiagonal(
        vector(require(j, "diagonal"), "matrix.diagonal"),
        j.contains("off_diagonal") ? vector(j.at("off_diagonal"), "matrix.off_diagonal")
                                   : Vector{});
  }
  fail("matrix.type", "expected dirichlet | dense | tridiagonal");
}

Family parse_family(const std::string& name) {
  if (name == "cubic") return Family::Cubic;
  if (name == "arctan") return Family::Arctan;
  if (name == "emden_fowler") return Family::EmdenFowler;
  if (name == "linear") return Family::Linear;
  if (name == "zero") return Family::Zero;
  fail("nonlinearity.family", "expected cubic | arctan | emden_fowler | linear | zero");
}

Regime parse_regime(const std::string& name) {
  if (name == "superquadratic") return Regime::Superquadratic;
  if (name == "subquadratic") return Regime::Subquadratic;
  fail("regime", "expected superquadratic | subquadratic");
}

Assumption parse_assumption(const std::string& name) {
  if (name == "A1") return Assumption::A1;
  if (name == "A2") return Assumption::A2;
  if (name == "A3") return Assumption::A3;
  if (name == "A4") return Assumption::A4;
  fail("check.assumptions", "expected A1 | A2 | A3 | A4");
}

GrowthCertificate parse_growth(const json& j) {
  const std::string kind = require(j, "kind").get<std::string>();
  const double exponent = number(require(j, "exponent"), "growth.exponent");
  const double coefficient = number(require(j, "coefficient"), "growth.coefficient");
  const double radius = number(require(j, "radius"), "growth.radius");
  if (kind == "superquadratic") {
    return GrowthCertificate::superquadratic(exponent, coefficient, radius);
  }
  if (kind == "subquadratic") {
    return GrowthCertificate::subquadratic(exponent, coefficient, radius);
  }
  fail("growth.kind", "expected superquadratic | subquadratic");
}

}  // namespace

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

RunConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config root must be an object");

  RunConfig config;
  {
    std::ostringstream hex;
    hex << std::hex << fnv1a64(text);
    config.digest = hex.str();
  }

  try {
    if (j.contains("matrix")) config.matrix = parse_matrix(j.at("matrix"));
    if (j.contains("nonlinearity")) {
      const json& nl = j.at("nonlinearity");
      config.family = parse_family(require(nl, "family").get<std::string>());
      if (nl.contains("exponent")) {
        config.emden_fowler_exponent = number(nl.at("exponent"), "nonlinearity.exponent");
      }
    }
    if (j.contains("regime")) config.regime = parse_regime(j.at("regime").get<std::string>());
    if (j.contains("lambda")) config.lambda = number(j.at("lambda"), "lambda");
    if (j.contains("box")) {
      const json& box = j.at("box");
      config.box = ParameterSpace(vector(require(box, "lo"), "box.lo"),
                                  vector(require(box, "hi"), "box.hi"));
    }
    if (j.contains("parameter")) {
      config.parameter = ParameterPoint(vector(j.at("parameter"), "parameter"));
    }
    if (j.contains("constants")) {
      const json& c = j.at("constants");
      if (c.contains("a")) config.override_a = number(c.at("a"), "constants.a");
      if (c.contains("b")) config.override_b = number(c.at("b"), "constants.b");
    }
    if (j.contains("solver")) {
      const json& s = j.at("solver");
      if (s.contains("tolerance")) {
        config.solver.tolerance = number(s.at("tolerance"), "solver.tolerance");
      }
      if (s.contains("max_iterations")) {
        config.solver.max_iterations = count(s.at("max_iterations"), "solver.max_iterations");
      }
      if (s.contains("initial")) {
        config.solver.initial = vector(s.at("initial"), "solver.initial");
      }
      if (s.contains("step")) {
        config.solver.step_override = number(s.at("step"), "solver.step");
      }
    }
    if (j.contains("sequence")) {
      const json& s = j.at("sequence");
      SequenceSpec spec;
      const std::string type =
          s.contains("type") ? s.at("type").get<std::string>() : "geometric";
      spec.limit = vector(require(s, "limit"), "sequence.limit");
      if (type == "geometric") {
        spec.geometric = true;
        spec.direction = vector(require(s, "direction"), "sequence.direction");
        spec.count = count(require(s, "count"), "sequence.count");
        if (spec.count == 0) fail("sequence.count", "must be >= 1");
      } else if (type == "explicit") {
        spec.geometric = false;
        const json& pts = require(s, "points");
        if (!pts.is_array() || pts.empty()) fail("sequence.points", "expected points");
        for (const auto& p : pts) spec.points.push_back(vector(p, "sequence.points"));
      } else {
        fail("sequence.type", "expected geometric | explicit");
      }
      config.sequence = std::move(spec);
    }
    if (j.contains("check")) {
      const json& c = j.at("check");
      CheckSpec spec;
      const json& list = require(c, "assumptions");
      if (!list.is_array() || list.empty()) fail("check.assumptions", "expected a list");
      for (const auto& a : list) spec.assumptions.push_back(parse_assumption(a.get<std::string>()));
      if (c.contains("a")) spec.a = number(c.at("a"), "check.a");
      if (c.contains("b")) spec.b = number(c.at("b"), "check.b");
      if (c.contains("growth")) spec.growth = parse_growth(c.at("growth"));
      if (c.contains("radius")) spec.radius = number(c.at("radius"), "check.radius");
      if (c.contains("samples")) spec.samples = count(c.at("samples"), "check.samples");
      config.check = std::move(spec);
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  } catch (const std::invalid_argument& e) {
    // DimensionError / ValidationError from the core types
    throw ConfigError(e.what());
  }
  return config;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

CertifiedNonlinearity build_family(const RunConfig& config) {
  if (!config.family) throw ConfigError("config field 'nonlinearity': missing");
  if (!config.box) throw ConfigError("config field 'box': missing");
  if (!config.matrix) throw ConfigError("config field 'matrix': missing");
  const std::size_t n = config.matrix->dim();
  try {
    switch (*config.family) {
      case Family::Cubic: return make_cubic_family(n, *config.box);
      case Family::Arctan: return make_arctan_family(n, *config.box);
      case Family::EmdenFowler:
        return make_emden_fowler_family(n, config.emden_fowler_exponent, *config.box);
      case Family::Linear: return make_linear_family(n, *config.box);
      case Family::Zero: return make_zero_family(n, *config.box);
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  throw ConfigError("config field 'nonlinearity.family': unknown family");
}

ProblemInstance build_problem(const RunConfig& config) {
  if (!config.regime) throw ConfigError("config field 'regime': missing");
  if (!config.lambda) throw ConfigError("config field 'lambda': missing");
  CertifiedNonlinearity family = build_family(config);
  MonotonicityConstants constants = family.constants;
  if (config.override_a) constants.a = *config.override_a;
  if (config.override_b) constants.b = *config.override_b;
  try {
    return ProblemInstance(*config.matrix, *config.lambda, std::move(family.h),
                           *config.regime, constants, family.growth, *config.box);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

ParameterSequence build_sequence(const RunConfig& config, const ParameterSpace& space) {
  if (!config.sequence) throw ConfigError("config field 'sequence': missing");
  const SequenceSpec& spec = *config.sequence;
  try {
    const ParameterPoint limit(spec.limit);
    if (spec.geometric) {
      return make_geometric_sequence(space, limit, spec.direction, spec.count);
    }
    ParameterSequence seq{{}, limit};
    for (const Vector& p : spec.points) {
      ParameterPoint u(p);
      space.require_contains(u);
      seq.points.push_back(std::move(u));
    }
    return seq;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

}  // namespace monosys::cli
