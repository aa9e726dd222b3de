#include "moment_gibbs/duality.hpp"

#include <Eigen/Cholesky>

#include "moment_gibbs/gibbs.hpp"

namespace mgibbs {

QuadraticForm::QuadraticForm(Matrix m) : m_(std::move(m)) {
  if (m_.rows() == 0 || m_.rows() != m_.cols()) {
    throw Error(ErrorKind::NotNegativeDefinite, "quadratic form needs a non-empty square matrix");
  }
  if (!m_.allFinite()) {
    throw Error(ErrorKind::NotNegativeDefinite, "matrix has non-finite entries");
  }
  if ((m_ - m_.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw Error(ErrorKind::NotNegativeDefinite, "matrix is not symmetric");
  }
  Eigen::LLT<Matrix> llt(m_);
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorKind::NotNegativeDefinite, "-x^T M x is not negative definite");
  }
}

double legendre_residual(const StateSet& states, const CoVector& beta) {
  const GibbsSummary g = gibbs_summary(states, beta);
  return g.entropy - beta.pair(g.mean_energy) - g.log_z;
}

double legendre_roundtrip(const StateSet& states, const Vector& target, const SolveOptions& opts) {
  const SolveReport report = invert_mean_energy(states, target, opts);
  return (mean_energy(states, report.beta) - target).norm();
}

QuadraticForm quadratic_direct_image(const QuadraticForm& f, int kept) {
  const Index n = f.dim();
  if (kept < 1 || kept >= n) {
    throw Error(ErrorKind::BadSplit, "kept must lie in [1, " + std::to_string(n - 1) + "], got " +
                                         std::to_string(kept));
  }
  const Index drop = n - kept;
  const Matrix& m = f.matrix();
  const Matrix b = m.topRightCorner(kept, drop);
  Eigen::LLT<Matrix> r(m.bottomRightCorner(drop, drop));
  Matrix schur = m.topLeftCorner(kept, kept) - b * r.solve(b.transpose());
  return QuadraticForm(Matrix(0.5 * (schur + schur.transpose())));
}

}  // namespace mgibbs
