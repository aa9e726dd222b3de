#include "moment_gibbs/moment_solver.hpp"

#include <Eigen/Cholesky>

#include <cmath>
#include <sstream>

#include "moment_gibbs/gibbs.hpp"

namespace mgibbs {

void SolveOptions::validate() const {
  if (!(grad_tol > 0.0 && grad_tol < 1.0)) {
    throw Error(ErrorKind::InvalidOptions, "grad_tol must lie in (0, 1)");
  }
  if (max_iter <= 0) {
    throw Error(ErrorKind::InvalidOptions, "max_iter must be positive");
  }
  if (!(line_search_shrink > 0.0 && line_search_shrink < 1.0)) {
    throw Error(ErrorKind::InvalidOptions, "line_search_shrink must lie in (0, 1)");
  }
  if (!(regularization_floor > 0.0)) {
    throw Error(ErrorKind::InvalidOptions, "regularization_floor must be positive");
  }
}

namespace {

constexpr double kArmijo = 1e-4;
constexpr int kMaxBacktracks = 60;
// Below this squared decrement F changes are at the rounding level, so the
// line search is skipped and full Newton steps are taken.
constexpr double kFullStepDecrement = 1e-8;

// Dual objective and its derivatives at one point, in span coordinates.
struct DualState {
  Vector beta;
  double value;     // F(beta) = log Z(beta) + (beta, target)
  Vector probs;
  Vector gradient;  // target - <E>(beta)
};

class Dual {
 public:
  Dual(Matrix local_points, Vector local_target)
      : points_(std::move(local_points)), target_(std::move(local_target)) {}

  DualState evaluate(Vector beta) const {
    const Vector exponents = -(points_ * beta);
    const double shift = exponents.maxCoeff();
    Vector weights = (exponents.array() - shift).exp();
    const double sum = weights.sum();
    const double log_z = shift + std::log(sum);
    weights /= sum;
    Vector gradient = target_ - points_.transpose() * weights;
    const double value = log_z + beta.dot(target_);
    return {std::move(beta), value, std::move(weights), std::move(gradient)};
  }

  Matrix hessian(const DualState& state) const {
    const Vector mean = target_ - state.gradient;
    const Matrix centered = points_.rowwise() - mean.transpose();
    Matrix h = centered.transpose() * state.probs.asDiagonal() * centered;
    return 0.5 * (h + h.transpose());
  }

 private:
  Matrix points_;
  Vector target_;
};

// Solves H x = rhs, adding a growing multiple of trace/d to the diagonal
// until Cholesky succeeds.
Vector regularized_solve(const Matrix& h, const Vector& rhs, double floor) {
  Eigen::LLT<Matrix> llt(h);
  if (llt.info() == Eigen::Success) return llt.solve(rhs);
  const Index d = h.rows();
  const double base = std::max(h.trace() / static_cast<double>(d), 1e-300);
  for (double shift = floor * base; shift < 1e300; shift *= 10.0) {
    llt.compute(h + shift * Matrix::Identity(d, d));
    if (llt.info() == Eigen::Success) return llt.solve(rhs);
  }
  return rhs;  // unreachable for finite h; falls back to gradient descent
}

}  // namespace

SolveReport invert_mean_energy(const StateSet& states, const Vector& target,
                               const SolveOptions& opts) {
  return invert_mean_energy(states, convex_hull(states), target, opts);
}

SolveReport invert_mean_energy(const StateSet& states, const Polytope& hull,
                               const Vector& target, const SolveOptions& opts) {
  opts.validate();
  require_dim(states, target);
  if (!target.allFinite()) {
    throw Error(ErrorKind::NonFinite, "target has non-finite coordinates");
  }

  const double off_span = span_violation(hull, target);
  if (off_span > kHullTolerance * hull.scale) {
    std::ostringstream msg;
    msg << "target lies " << off_span << " off the affine span of the states (margin "
        << -off_span << ")";
    throw InfeasibleTarget(ErrorKind::TargetOutsideHull, msg.str(), -off_span);
  }
  const double margin = interior_margin(hull, target);
  const double boundary_band = kBoundaryMargin * hull.diameter;
  if (margin < -boundary_band) {
    std::ostringstream msg;
    msg << "target is outside the convex hull (margin " << margin << ")";
    throw InfeasibleTarget(ErrorKind::TargetOutsideHull, msg.str(), margin);
  }
  if (margin < boundary_band) {
    std::ostringstream msg;
    msg << "target is on the boundary of the convex hull (margin " << margin
        << "); beta diverges there, use tropical_limit for the boundary behavior";
    throw InfeasibleTarget(ErrorKind::TargetOnBoundary, msg.str(), margin);
  }

  const AffineFrame& frame = states.frame();
  const Index d = frame.basis.cols();
  SolveReport report;
  report.reduced = d < states.dim();
  if (d == 0) {
    report.beta = CoVector::zero(states.dim());
    report.converged = true;
    return report;
  }

  const Dual dual((states.points().rowwise() - frame.origin.transpose()) * frame.basis,
                  frame.basis.transpose() * (target - frame.origin));
  const double diameter = hull.diameter;
  auto scaled_norm = [&](const DualState& s) {
    return s.gradient.cwiseAbs().maxCoeff() / diameter;
  };

  DualState state = dual.evaluate(Vector::Zero(d));
  report.grad_norm = scaled_norm(state);
  while (report.grad_norm > opts.grad_tol && report.iterations < opts.max_iter) {
    const Vector step = -regularized_solve(dual.hessian(state), state.gradient,
                                           opts.regularization_floor);
    const double slope = state.gradient.dot(step);  // = -decrement^2
    report.decrements.push_back(-slope);

    double alpha = 1.0;
    DualState trial = dual.evaluate(state.beta + step);
    if (-slope > kFullStepDecrement) {
      int backtracks = 0;
      while (!(trial.value <= state.value + kArmijo * alpha * slope) &&
             backtracks < kMaxBacktracks) {
        alpha *= opts.line_search_shrink;
        trial = dual.evaluate(state.beta + alpha * step);
        ++backtracks;
      }
      if (backtracks == kMaxBacktracks) break;  // stalled at rounding level
    }
    state = std::move(trial);
    report.grad_norm = scaled_norm(state);
    ++report.iterations;
  }
  report.converged = report.grad_norm <= opts.grad_tol;

  if (report.converged) {
    // One polishing step pushes the gradient to the rounding floor so beta is
    // accurate even where the covariance is poorly conditioned.
    const Vector step = -regularized_solve(dual.hessian(state), state.gradient,
                                           opts.regularization_floor);
    DualState polished = dual.evaluate(state.beta + step);
    if (scaled_norm(polished) <= report.grad_norm) {
      state = std::move(polished);
      report.grad_norm = scaled_norm(state);
    }
  }

  report.beta = CoVector(Vector(frame.basis * state.beta));
  report.entropy = entropy(Distribution(state.probs));
  if (!report.converged) {
    std::ostringstream msg;
    msg << "Newton iteration stopped after " << report.iterations
        << " iterations with scaled gradient norm " << report.grad_norm;
    throw NoConvergence(msg.str(), std::move(report));
  }
  return report;
}

double entropy_of_mean(const StateSet& states, const Vector& target, const SolveOptions& opts) {
  return invert_mean_energy(states, target, opts).entropy;
}

CoVector solve_gradient(const StateSet& states, const Vector& target, const SolveOptions& opts) {
  return invert_mean_energy(states, target, opts).beta;
}

}  // namespace mgibbs
