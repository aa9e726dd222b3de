#include "commands.hpp"

#include <cmath>
#include <sstream>

#include "moment_gibbs/duality.hpp"
#include "moment_gibbs/gibbs.hpp"
#include "moment_gibbs/microstates.hpp"
#include "moment_gibbs/polytope.hpp"
#include "moment_gibbs/toric.hpp"

namespace mgibbs::cli {

namespace {

Error malformed(const std::string& message) { return Error(ErrorKind::MalformedInput, message); }

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (Index i = 0; i < m.rows(); ++i) out.push_back(to_json(Vector(m.row(i).transpose())));
  return out;
}

Json to_json(const std::vector<Index>& indices) {
  Json out = Json::array();
  for (Index i : indices) out.push_back(static_cast<std::int64_t>(i));
  return out;
}

Json header(const char* command) {
  Json out;
  out["schema"] = kSchema;
  out["command"] = command;
  return out;
}

CommandResult success(const Json& body) { return {kSuccess, dump_json(body), {}}; }

Vector to_vector(const std::vector<double>& values) {
  return Eigen::Map<const Vector>(values.data(), static_cast<Index>(values.size()));
}

CoVector to_covector(const StateSet& states, const std::vector<double>& values) {
  CoVector beta(to_vector(values));
  require_dim(states, beta);
  return beta;
}

}  // namespace

StateSet parse_state_set(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw malformed(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw malformed("state set must be a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "dim" && key != "points" && key != "labels") {
      throw malformed("unknown key \"" + key + "\"");
    }
  }
  if (!doc.contains("dim") || !doc["dim"].is_number_integer()) {
    throw malformed("\"dim\" must be an integer");
  }
  if (!doc.contains("points") || !doc["points"].is_array()) {
    throw malformed("\"points\" must be an array");
  }
  const auto dim = doc["dim"].get<std::int64_t>();
  if (dim < 1 || dim > 1 << 20) throw malformed("\"dim\" must be a positive integer");

  std::vector<std::vector<double>> rows;
  for (const auto& point : doc["points"]) {
    if (!point.is_array()) throw malformed("each point must be an array of numbers");
    std::vector<double> row;
    for (const auto& x : point) {
      if (!x.is_number()) throw malformed("point coordinates must be numbers");
      row.push_back(x.get<double>());
    }
    rows.push_back(std::move(row));
  }
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    if (!doc["labels"].is_array()) throw malformed("\"labels\" must be an array of strings");
    for (const auto& label : doc["labels"]) {
      if (!label.is_string()) throw malformed("\"labels\" must be an array of strings");
      labels.push_back(label.get<std::string>());
    }
  }
  return StateSet::from_rows(static_cast<int>(dim), rows, std::move(labels));
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(item, &used);
    } catch (const std::exception&) {
      throw malformed("cannot parse number \"" + item + "\"");
    }
    if (used != item.size() || !std::isfinite(x)) {
      throw malformed("cannot parse number \"" + item + "\"");
    }
    values.push_back(x);
  }
  if (values.empty() || (!text.empty() && text.back() == ',')) {
    throw malformed("expected a comma-separated list of numbers, got \"" + text + "\"");
  }
  return values;
}

CommandResult error_result(const std::exception& error) {
  Json body;
  body["schema"] = kSchema;
  int code = kInvalidInput;
  if (const auto* e = dynamic_cast<const Error*>(&error)) {
    body["error"] = std::string(to_string(e->kind()));
    if (e->kind() == ErrorKind::TargetOutsideHull || e->kind() == ErrorKind::TargetOnBoundary) {
      code = kInfeasible;
    } else if (e->kind() == ErrorKind::NoConvergence) {
      code = kNoConvergence;
    }
  } else {
    body["error"] = "InvalidInput";
  }
  body["message"] = error.what();
  if (const auto* e = dynamic_cast<const InfeasibleTarget*>(&error)) {
    body["margin"] = e->margin();
  }
  if (const auto* e = dynamic_cast<const NoConvergence*>(&error)) {
    body["beta"] = to_json(e->report().beta.components());
    body["iterations"] = e->report().iterations;
    body["grad_norm"] = e->report().grad_norm;
  }
  return {code, dump_json(body), {error.what()}};
}

CommandResult cmd_forward(const StateSet& states, const std::vector<double>& beta_values) {
  const CoVector beta = to_covector(states, beta_values);
  const GibbsSummary g = gibbs_summary(states, beta);
  Json out = header("forward");
  out["beta"] = to_json(beta.components());
  out["log_z"] = g.log_z;
  out["probs"] = to_json(g.distribution.probs());
  out["mean"] = to_json(g.mean_energy);
  out["covariance"] = to_json(g.covariance);
  out["entropy"] = g.entropy;
  return success(out);
}

CommandResult cmd_invert(const StateSet& states, const std::vector<double>& mean,
                         const SolveOptions& opts) {
  const Vector target = to_vector(mean);
  const SolveReport report = invert_mean_energy(states, target, opts);
  Json out = header("invert");
  out["target"] = to_json(target);
  out["beta"] = to_json(report.beta.components());
  out["iterations"] = report.iterations;
  out["grad_norm"] = report.grad_norm;
  out["entropy"] = report.entropy;
  out["converged"] = report.converged;
  out["reduced"] = report.reduced;
  CommandResult result = success(out);
  if (report.reduced) {
    result.diagnostics.push_back(
        "state set spans a proper affine subspace; beta is unique only modulo its annihilator");
  }
  return result;
}

CommandResult cmd_sweep(const StateSet& states, const SweepRequest& request) {
  const int dim = states.dim();
  if (request.axis < 0 || request.axis >= dim) {
    throw malformed("axis must lie in [0, " + std::to_string(dim - 1) + "]");
  }
  if (request.steps < 2) throw malformed("steps must be at least 2");
  if (!(request.to > request.from)) throw malformed("sweep range must satisfy from < to");

  Vector base = Vector::Zero(dim);
  if (static_cast<int>(request.fixed.size()) == dim) {
    base = to_vector(request.fixed);
  } else if (static_cast<int>(request.fixed.size()) == dim - 1) {
    for (int j = 0, k = 0; j < dim; ++j) {
      if (j != request.axis) base[j] = request.fixed[static_cast<std::size_t>(k++)];
    }
  } else if (!request.fixed.empty()) {
    throw Error(ErrorKind::DimensionMismatch,
                "fixed must list the other " + std::to_string(dim - 1) + " components or all " +
                    std::to_string(dim));
  }

  std::string csv = "beta_axis";
  for (int j = 1; j <= dim; ++j) csv += ",mean_" + std::to_string(j);
  csv += ",entropy,log_z\n";
  for (int k = 0; k < request.steps; ++k) {
    const double t = request.from + (request.to - request.from) * k / (request.steps - 1);
    Vector beta = base;
    beta[request.axis] = t;
    const GibbsSummary g = gibbs_summary(states, CoVector(beta));
    csv += format_double(t);
    for (int j = 0; j < dim; ++j) csv += "," + format_double(g.mean_energy[j]);
    csv += "," + format_double(g.entropy) + "," + format_double(g.log_z) + "\n";
  }
  return {kSuccess, csv, {}};
}

CommandResult cmd_hull(const StateSet& states) {
  const Polytope hull = convex_hull(states);
  Json out = header("hull");
  out["affine_dim"] = hull.affine_dim;
  out["diameter"] = hull.diameter;
  out["vertices"] = to_json(hull.vertices);
  Json points = Json::array();
  for (Index v : hull.vertices) points.push_back(to_json(states.point(v)));
  out["vertex_points"] = points;
  Json facets = Json::array();
  for (const Facet& f : hull.facets) {
    Json facet;
    facet["normal"] = to_json(f.normal);
    facet["offset"] = f.offset;
    facet["vertices"] = to_json(f.vertices);
    facets.push_back(facet);
  }
  out["facets"] = facets;
  Json equations = Json::array();
  for (const SpanEquation& eq : hull.span_equations) {
    Json e;
    e["normal"] = to_json(eq.normal);
    e["value"] = eq.value;
    equations.push_back(e);
  }
  out["span_equations"] = equations;
  return success(out);
}

CommandResult cmd_limit(const StateSet& states, const std::vector<double>& direction_values) {
  const CoVector direction = to_covector(states, direction_values);
  const Vector limit = tropical_limit(states, direction);
  const FaceResult face = min_face(states, direction);
  Json out = header("limit");
  out["direction"] = to_json(direction.components());
  out["face"] = to_json(face.indices);
  out["value"] = face.value;
  out["limit"] = to_json(limit);
  return success(out);
}

CommandResult cmd_microstates(const StateSet& states, const std::vector<double>& beta_values,
                              std::int64_t total, std::uint64_t seed) {
  const CoVector beta = to_covector(states, beta_values);
  const Distribution p = gibbs_distribution(states, beta);
  const MicrostateCounts counts = sample_counts(p, total, seed);
  const double log_count = log_equilibrium_count(p, total);
  Json out = header("microstates");
  out["generator"] = "splitmix64";
  out["seed"] = seed;
  out["total"] = total;
  out["beta"] = to_json(beta.components());
  out["probs"] = to_json(p.probs());
  out["counts"] = counts.counts;
  out["empirical"] = to_json(empirical_distribution(counts).probs());
  out["log_measure"] = log_multinomial_measure(p, counts);
  out["log_equilibrium_count"] = log_count;
  out["log_count_per_particle"] = log_count / static_cast<double>(total);
  out["entropy"] = entropy(p);
  return success(out);
}

CommandResult cmd_toric(const StateSet& states, const std::vector<double>& beta_values) {
  const CoVector beta = to_covector(states, beta_values);
  Json out = header("toric");
  out["beta"] = to_json(beta.components());
  out["lattice"] = states.is_lattice();
  out["positive_point"] = to_json(positive_point(states, beta).weights());
  out["moment"] = to_json(moment_of_beta(states, beta));
  out["mean_energy_2beta"] = to_json(mean_energy(states, beta.scaled(2.0)));
  return success(out);
}

CommandResult cmd_check(const StateSet& states, const CheckRequest& request) {
  if (request.points < 2) throw malformed("points must be at least 2");
  if (!(request.radius > 0.0)) throw malformed("radius must be positive");
  const int dim = states.dim();
  const Polytope hull = convex_hull(states);

  // Deterministic beta grid: evenly spaced for one dimension, SplitMix64
  // points in the cube of half-width radius / sqrt(dim) otherwise.
  SplitMix64 rng(0);
  const double half_width = request.radius / std::sqrt(static_cast<double>(dim));
  double worst_residual = 0.0;
  double worst_roundtrip = 0.0;
  for (int k = 0; k < request.points; ++k) {
    Vector beta(dim);
    if (dim == 1) {
      beta[0] = -request.radius + 2.0 * request.radius * k / (request.points - 1);
    } else {
      for (int j = 0; j < dim; ++j) beta[j] = half_width * (2.0 * rng.next_double() - 1.0);
    }
    worst_residual = std::max(worst_residual, std::abs(legendre_residual(states, CoVector(beta))));
    // Round-trip targets come from a shrunken beta so they stay well inside Q.
    const Vector target = mean_energy(states, CoVector(Vector(beta / 5.0)));
    const SolveReport report = invert_mean_energy(states, hull, target);
    worst_roundtrip = std::max(worst_roundtrip, (mean_energy(states, report.beta) - target).norm());
  }
  const bool passed = worst_residual <= request.legendre_tolerance &&
                      worst_roundtrip <= request.roundtrip_tolerance;
  Json out = header("check");
  out["points"] = request.points;
  out["radius"] = request.radius;
  out["max_legendre_residual"] = worst_residual;
  out["legendre_tolerance"] = request.legendre_tolerance;
  out["max_roundtrip_error"] = worst_roundtrip;
  out["roundtrip_tolerance"] = request.roundtrip_tolerance;
  out["passed"] = passed;
  return {passed ? kSuccess : kCheckFailed, dump_json(out), {}};
}

}  // namespace mgibbs::cli
