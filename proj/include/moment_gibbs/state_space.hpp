#pragma once

#include <Eigen/Core>

#include <string>
#include <vector>

#include "moment_gibbs/errors.hpp"

namespace mgibbs {

using Index = Eigen::Index;
using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Inverse-temperature covector. Pairs with points of the energy space.
class CoVector {
 public:
  CoVector() = default;
  explicit CoVector(Vector components);
  CoVector(std::initializer_list<double> components);

  static CoVector zero(Index dim) { return CoVector(Vector::Zero(dim)); }

  const Vector& components() const noexcept { return components_; }
  Index size() const noexcept { return components_.size(); }
  double operator[](Index i) const { return components_[i]; }

  /// (beta, x) = sum_i beta_i x_i.
  double pair(const Eigen::Ref<const Vector>& x) const;

  CoVector scaled(double factor) const { return CoVector(Vector(factor * components_)); }

 private:
  Vector components_;
};

/// A real function on the states, one value per state.
class Observable {
 public:
  explicit Observable(Vector values);

  const Vector& values() const noexcept { return values_; }
  Index size() const noexcept { return values_.size(); }

 private:
  Vector values_;
};

/// Orthonormal frame of the affine span of a point set.
struct AffineFrame {
  Vector origin;      ///< barycenter of the points
  Matrix basis;       ///< n x d, orthonormal columns spanning the directions
  Matrix complement;  ///< n x (n - d), orthonormal complement of `basis`
};

/// Finite set of distinct points in R^n: the vector-valued energy spectrum.
/// Immutable once built; the affine dimension is computed at construction.
class StateSet {
 public:
  /// `points` is N x dim, one state per row.
  StateSet(int dim, Matrix points, std::vector<std::string> labels = {});

  static StateSet from_rows(int dim, const std::vector<std::vector<double>>& rows,
                            std::vector<std::string> labels = {});

  int dim() const noexcept { return dim_; }
  Index size() const noexcept { return points_.rows(); }
  const Matrix& points() const noexcept { return points_; }
  Vector point(Index i) const { return points_.row(i).transpose(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  int affine_dim() const noexcept { return affine_dim_; }
  /// True when every input coordinate was an integer.
  bool is_lattice() const noexcept { return is_lattice_; }
  Vector barycenter() const { return points_.colwise().mean().transpose(); }
  const AffineFrame& frame() const noexcept { return frame_; }

  /// Largest coordinate magnitude, floored at 1. Used to scale tolerances.
  double scale() const noexcept { return scale_; }

 private:
  int dim_;
  Matrix points_;
  std::vector<std::string> labels_;
  int affine_dim_ = 0;
  bool is_lattice_ = false;
  double scale_ = 1.0;
  AffineFrame frame_;
};

/// Dimension of the affine span of A.
inline int affine_dim(const StateSet& states) { return states.affine_dim(); }

/// Rank of a point cloud translated so that its first row is the origin.
/// Singular values below 1e-9 * max(largest singular value, 1) count as zero.
int affine_rank(const Matrix& rows);

/// Orthonormal frame of the affine span of the rows of `points`.
AffineFrame compute_affine_frame(const Matrix& points);

inline constexpr double kRankTolerance = 1e-9;

void require_dim(const StateSet& states, const CoVector& beta);
void require_dim(const StateSet& states, const Vector& point);

}  // namespace mgibbs
