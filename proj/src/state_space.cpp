#include "moment_gibbs/state_space.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace mgibbs {

CoVector::CoVector(Vector components) : components_(std::move(components)) {
  if (!components_.allFinite()) {
    throw Error(ErrorKind::NonFinite, "beta has non-finite components");
  }
}

CoVector::CoVector(std::initializer_list<double> components)
    : CoVector(Vector(Eigen::Map<const Vector>(components.begin(),
                                               static_cast<Index>(components.size())))) {}

double CoVector::pair(const Eigen::Ref<const Vector>& x) const {
  if (x.size() != components_.size()) {
    throw Error(ErrorKind::DimensionMismatch, "covector has length " +
                                                  std::to_string(components_.size()) +
                                                  ", point has length " + std::to_string(x.size()));
  }
  return components_.dot(x);
}

Observable::Observable(Vector values) : values_(std::move(values)) {
  if (!values_.allFinite()) {
    throw Error(ErrorKind::NonFinite, "observable has non-finite values");
  }
}

namespace {

struct Svd {
  Vector singular;
  Matrix v;
  int rank;
};

Svd centered_svd(const Matrix& rows) {
  Matrix centered = rows.rowwise() - rows.row(0);
  Eigen::JacobiSVD<Matrix> svd(centered, Eigen::ComputeFullV);
  const Vector& s = svd.singularValues();
  const double cutoff = kRankTolerance * std::max(s.size() > 0 ? s[0] : 0.0, 1.0);
  int rank = 0;
  for (Index i = 0; i < s.size(); ++i) {
    if (s[i] > cutoff) ++rank;
  }
  return {s, svd.matrixV(), rank};
}

}  // namespace

int affine_rank(const Matrix& rows) {
  if (rows.rows() <= 1) return 0;
  return centered_svd(rows).rank;
}

AffineFrame compute_affine_frame(const Matrix& points) {
  const Index n = points.cols();
  AffineFrame frame;
  frame.origin = points.colwise().mean().transpose();
  if (points.rows() <= 1) {
    frame.basis = Matrix(n, 0);
    frame.complement = Matrix::Identity(n, n);
    return frame;
  }
  Svd svd = centered_svd(points);
  frame.basis = svd.v.leftCols(svd.rank);
  frame.complement = svd.v.rightCols(n - svd.rank);
  return frame;
}

StateSet::StateSet(int dim, Matrix points, std::vector<std::string> labels)
    : dim_(dim), points_(std::move(points)), labels_(std::move(labels)) {
  if (dim_ < 1) {
    throw Error(ErrorKind::DimensionMismatch, "dim must be positive");
  }
  if (points_.rows() == 0) {
    throw Error(ErrorKind::EmptyStateSet, "state set has no points");
  }
  if (points_.cols() != dim_) {
    throw Error(ErrorKind::DimensionMismatch, "points have " + std::to_string(points_.cols()) +
                                                  " coordinates, expected " + std::to_string(dim_));
  }
  if (!points_.allFinite()) {
    throw Error(ErrorKind::NonFinite, "points have non-finite coordinates");
  }
  if (!labels_.empty()) {
    if (static_cast<Index>(labels_.size()) != points_.rows()) {
      throw Error(ErrorKind::InvalidLabels, "expected " + std::to_string(points_.rows()) +
                                                " labels, got " + std::to_string(labels_.size()));
    }
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size()) {
      throw Error(ErrorKind::InvalidLabels, "labels are not distinct");
    }
  }

  const Index count = points_.rows();
  std::vector<Index> order(static_cast<std::size_t>(count));
  std::iota(order.begin(), order.end(), Index{0});
  auto row_less = [&](Index a, Index b) {
    for (Index j = 0; j < dim_; ++j) {
      if (points_(a, j) != points_(b, j)) return points_(a, j) < points_(b, j);
    }
    return a < b;
  };
  std::sort(order.begin(), order.end(), row_less);
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (points_.row(order[k - 1]) == points_.row(order[k])) {
      const Index a = std::min(order[k - 1], order[k]);
      const Index b = std::max(order[k - 1], order[k]);
      throw Error(ErrorKind::DuplicatePoint,
                  "points " + std::to_string(a) + " and " + std::to_string(b) + " coincide");
    }
  }

  is_lattice_ = (points_.array() == points_.array().round()).all();
  scale_ = std::max(1.0, points_.cwiseAbs().maxCoeff());
  frame_ = compute_affine_frame(points_);
  affine_dim_ = static_cast<int>(frame_.basis.cols());
}

StateSet StateSet::from_rows(int dim, const std::vector<std::vector<double>>& rows,
                             std::vector<std::string> labels) {
  if (dim < 1) {
    throw Error(ErrorKind::DimensionMismatch, "dim must be positive");
  }
  Matrix points(static_cast<Index>(rows.size()), dim);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != static_cast<std::size_t>(dim)) {
      throw Error(ErrorKind::DimensionMismatch, "point " + std::to_string(i) + " has " +
                                                    std::to_string(rows[i].size()) +
                                                    " coordinates, expected " + std::to_string(dim));
    }
    for (int j = 0; j < dim; ++j) points(static_cast<Index>(i), j) = rows[i][static_cast<std::size_t>(j)];
  }
  return StateSet(dim, std::move(points), std::move(labels));
}

void require_dim(const StateSet& states, const CoVector& beta) {
  if (beta.size() != states.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "beta has " + std::to_string(beta.size()) +
                                                  " components, state set has dim " +
                                                  std::to_string(states.dim()));
  }
}

void require_dim(const StateSet& states, const Vector& point) {
  if (point.size() != states.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "point has " + std::to_string(point.size()) +
                                                  " coordinates, state set has dim " +
                                                  std::to_string(states.dim()));
  }
}

}  // namespace mgibbs
