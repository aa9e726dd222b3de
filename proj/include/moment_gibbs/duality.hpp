#pragma once

#include "moment_gibbs/moment_solver.hpp"
#include "moment_gibbs/state_space.hpp"

namespace mgibbs {

/// Negative definite quadratic form f(x) = -x^T M x, stored through the
/// positive definite matrix M.
class QuadraticForm {
 public:
  /// Throws NotNegativeDefinite unless M is symmetric (within 1e-12) and
  /// positive definite.
  explicit QuadraticForm(Matrix m);

  const Matrix& matrix() const noexcept { return m_; }
  Index dim() const noexcept { return m_.rows(); }
  double operator()(const Vector& x) const { return -x.dot(m_ * x); }

 private:
  Matrix m_;
};

/// S(p(beta)) - (beta, <E>(beta)) - log Z(beta). Zero up to rounding: the
/// entropy and -log Z are Legendre transforms of each other.
double legendre_residual(const StateSet& states, const CoVector& beta);

/// ||<E>(beta(target)) - target||: composes the two gradient maps, which
/// are mutually inverse.
double legendre_roundtrip(const StateSet& states, const Vector& target,
                          const SolveOptions& opts = {});

/// Direct image of f under the projection onto the first `kept`
/// coordinates: x'' -> max over the fiber of f. For M = [[P, B], [B^T, R]]
/// this is the form with matrix P - B R^{-1} B^T.
///
/// A general linear surjection j reduces to this case: pick an orthonormal
/// basis whose first `kept` vectors span the orthogonal complement of ker j,
/// conjugate M into that basis, then project.
QuadraticForm quadratic_direct_image(const QuadraticForm& f, int kept);

}  // namespace mgibbs
