#pragma once

#include <vector>

#include "moment_gibbs/state_space.hpp"

namespace mgibbs {

/// Supporting inequality (normal, x) >= offset. The normal has unit length
/// and lies in the direction space of the affine span.
struct Facet {
  Vector normal;
  double offset;
  std::vector<Index> vertices;  ///< indices of the hull vertices on this facet
};

/// Equation (normal, x) = value satisfied by every point of the affine span.
struct SpanEquation {
  Vector normal;
  double value;
};

/// Convex hull Q = Conv(A), described relative to its affine span.
struct Polytope {
  std::vector<Index> vertices;  ///< sorted indices into the state set
  std::vector<Facet> facets;    ///< sorted by their vertex index lists
  std::vector<SpanEquation> span_equations;
  int affine_dim = 0;
  double diameter = 0.0;
  double scale = 1.0;  ///< coordinate scale used for tolerances
};

struct FaceResult {
  std::vector<Index> indices;
  double value;
  Vector barycenter;
};

inline constexpr int kMaxHullDimension = 6;
inline constexpr double kHullTolerance = 1e-9;

/// Vertices and facets of Conv(A). Throws UnsupportedDimension when the
/// affine span has dimension above kMaxHullDimension.
Polytope convex_hull(const StateSet& states);

/// Signed distance from x to the relative boundary: min over facets of
/// (normal, x) - offset. Positive in the relative interior, zero on the
/// boundary, negative outside. Throws OffAffineSpan when x violates a span
/// equation by more than 1e-9 (scaled). A zero-dimensional hull has no
/// boundary and reports +infinity for its single point.
double interior_margin(const Polytope& hull, const Vector& x);

/// Distance from x to the affine span of the hull (largest span-equation violation).
double span_violation(const Polytope& hull, const Vector& x);

/// States minimizing (direction, w), with ties resolved at 1e-9 times the
/// spread of the pairing values.
FaceResult min_face(const StateSet& states, const CoVector& direction);

/// lim_{t -> +inf} mean_energy(A, t * direction): the barycenter of the
/// minimizing face.
Vector tropical_limit(const StateSet& states, const CoVector& direction);

}  // namespace mgibbs
