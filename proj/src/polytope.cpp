#include "moment_gibbs/polytope.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

namespace mgibbs {

namespace {

// Facet of a hull computed in span coordinates: (normal, y) >= offset.
struct LocalFacet {
  Vector normal;
  double offset;
  std::vector<Index> on_plane;  // every point lying on the plane
};

// Hull of a point set in its own d-dimensional coordinates.
struct LocalHull {
  std::vector<Index> vertices;
  std::vector<LocalFacet> facets;
};

std::vector<Index> points_on_plane(const Matrix& y, const Vector& normal, double offset,
                                   double eps) {
  std::vector<Index> on;
  for (Index i = 0; i < y.rows(); ++i) {
    if (std::abs(y.row(i).dot(normal) - offset) <= eps) on.push_back(i);
  }
  return on;
}

LocalHull interval_hull(const Matrix& y) {
  Index lo = 0;
  Index hi = 0;
  for (Index i = 1; i < y.rows(); ++i) {
    if (y(i, 0) < y(lo, 0)) lo = i;
    if (y(i, 0) > y(hi, 0)) hi = i;
  }
  LocalHull hull;
  hull.vertices = {std::min(lo, hi), std::max(lo, hi)};
  hull.facets.push_back({Vector::Constant(1, 1.0), y(lo, 0), {lo}});
  hull.facets.push_back({Vector::Constant(1, -1.0), -y(hi, 0), {hi}});
  return hull;
}

// Andrew's monotone chain; collinear boundary points are dropped from the
// vertex list but still reported as lying on their edge.
LocalHull polygon_hull(const Matrix& y, double eps) {
  std::vector<Index> order(static_cast<std::size_t>(y.rows()));
  std::iota(order.begin(), order.end(), Index{0});
  std::sort(order.begin(), order.end(), [&](Index a, Index b) {
    if (y(a, 0) != y(b, 0)) return y(a, 0) < y(b, 0);
    return y(a, 1) < y(b, 1);
  });
  auto cross = [&](Index o, Index a, Index b) {
    return (y(a, 0) - y(o, 0)) * (y(b, 1) - y(o, 1)) - (y(a, 1) - y(o, 1)) * (y(b, 0) - y(o, 0));
  };
  // Cross products carry squared length units.
  const double area_eps = eps * std::max(1.0, (y.colwise().maxCoeff() - y.colwise().minCoeff()).maxCoeff());

  std::vector<Index> chain(2 * order.size());
  std::size_t k = 0;
  for (Index idx : order) {
    while (k >= 2 && cross(chain[k - 2], chain[k - 1], idx) <= area_eps) --k;
    chain[k++] = idx;
  }
  for (std::size_t i = order.size() - 1, lower = k + 1; i-- > 0;) {
    const Index idx = order[i];
    while (k >= lower && cross(chain[k - 2], chain[k - 1], idx) <= area_eps) --k;
    chain[k++] = idx;
  }
  chain.resize(k - 1);  // last point repeats the first

  LocalHull hull;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const Index a = chain[i];
    const Index b = chain[(i + 1) % chain.size()];
    Vector normal(2);
    normal << -(y(b, 1) - y(a, 1)), y(b, 0) - y(a, 0);  // left of a->b is inside (ccw)
    normal.normalize();
    const double offset = normal.dot(y.row(a).transpose());
    hull.facets.push_back({normal, offset, points_on_plane(y, normal, offset, eps)});
  }
  hull.vertices = chain;
  std::sort(hull.vertices.begin(), hull.vertices.end());
  return hull;
}

// Simplicial facet used during incremental construction.
struct SimplexFacet {
  std::vector<Index> corners;  // sorted, size d
  Vector normal;               // unit, pointing into the hull
  double offset;
};

SimplexFacet make_facet(const Matrix& y, std::vector<Index> corners, const Vector& inside) {
  std::sort(corners.begin(), corners.end());
  const Index d = y.cols();
  Matrix diffs(d - 1, d);
  for (Index k = 1; k < d; ++k) {
    diffs.row(k - 1) = y.row(corners[static_cast<std::size_t>(k)]) - y.row(corners[0]);
  }
  Eigen::JacobiSVD<Matrix> svd(diffs, Eigen::ComputeFullV);
  Vector normal = svd.matrixV().col(d - 1);
  normal.normalize();
  double offset = normal.dot(y.row(corners[0]).transpose());
  if (normal.dot(inside) - offset < 0.0) {
    normal = -normal;
    offset = -offset;
  }
  return {std::move(corners), std::move(normal), offset};
}

// Greedy choice of d+1 affinely independent points, each new point being the
// farthest from the span of the previous ones.
std::vector<Index> initial_simplex(const Matrix& y) {
  const Index d = y.cols();
  Index first = 0;
  for (Index i = 1; i < y.rows(); ++i) {
    if (y(i, 0) < y(first, 0)) first = i;
  }
  std::vector<Index> chosen{first};
  std::vector<Vector> basis;
  while (static_cast<Index>(chosen.size()) < d + 1) {
    Index best = -1;
    double best_dist = -1.0;
    Vector best_residual;
    for (Index i = 0; i < y.rows(); ++i) {
      Vector r = (y.row(i) - y.row(first)).transpose();
      for (const Vector& b : basis) r -= b.dot(r) * b;
      const double dist = r.norm();
      if (dist > best_dist) {
        best_dist = dist;
        best = i;
        best_residual = std::move(r);
      }
    }
    basis.push_back(best_residual / best_dist);
    chosen.push_back(best);
  }
  return chosen;
}

Matrix stack_normals(const std::vector<const Vector*>& normals, Index d) {
  Matrix m(static_cast<Index>(normals.size()), d);
  for (std::size_t i = 0; i < normals.size(); ++i) m.row(static_cast<Index>(i)) = normals[i]->transpose();
  return m;
}

// Beneath-beyond construction for 3 <= d <= kMaxHullDimension. Facets are kept
// simplicial while building and merged into true facets afterwards.
LocalHull incremental_hull(const Matrix& y, double eps) {
  const Index d = y.cols();
  const std::vector<Index> simplex = initial_simplex(y);
  Vector inside = Vector::Zero(d);
  for (Index idx : simplex) inside += y.row(idx).transpose();
  inside /= static_cast<double>(simplex.size());

  std::vector<SimplexFacet> facets;
  for (std::size_t skip = 0; skip < simplex.size(); ++skip) {
    std::vector<Index> corners;
    for (std::size_t k = 0; k < simplex.size(); ++k) {
      if (k != skip) corners.push_back(simplex[k]);
    }
    facets.push_back(make_facet(y, std::move(corners), inside));
  }

  std::vector<bool> in_simplex(static_cast<std::size_t>(y.rows()), false);
  for (Index idx : simplex) in_simplex[static_cast<std::size_t>(idx)] = true;

  for (Index p = 0; p < y.rows(); ++p) {
    if (in_simplex[static_cast<std::size_t>(p)]) continue;
    const Vector point = y.row(p).transpose();
    std::vector<bool> visible(facets.size(), false);
    bool any_visible = false;
    for (std::size_t f = 0; f < facets.size(); ++f) {
      if (facets[f].normal.dot(point) - facets[f].offset < -eps) {
        visible[f] = true;
        any_visible = true;
      }
    }
    if (!any_visible) continue;

    // Ridges seen once among the visible facets form the horizon.
    std::map<std::vector<Index>, int> ridge_count;
    for (std::size_t f = 0; f < facets.size(); ++f) {
      if (!visible[f]) continue;
      for (std::size_t drop = 0; drop < facets[f].corners.size(); ++drop) {
        std::vector<Index> ridge;
        for (std::size_t k = 0; k < facets[f].corners.size(); ++k) {
          if (k != drop) ridge.push_back(facets[f].corners[k]);
        }
        ++ridge_count[ridge];
      }
    }
    std::vector<SimplexFacet> next;
    next.reserve(facets.size());
    for (std::size_t f = 0; f < facets.size(); ++f) {
      if (!visible[f]) next.push_back(std::move(facets[f]));
    }
    for (const auto& [ridge, count] : ridge_count) {
      if (count != 1) continue;
      std::vector<Index> corners = ridge;
      corners.push_back(p);
      next.push_back(make_facet(y, std::move(corners), inside));
    }
    facets = std::move(next);
  }

  // Merge coplanar simplicial pieces.
  LocalHull hull;
  for (const SimplexFacet& f : facets) {
    bool merged = false;
    for (const LocalFacet& g : hull.facets) {
      if ((f.normal - g.normal).cwiseAbs().maxCoeff() <= kHullTolerance &&
          std::abs(f.offset - g.offset) <= eps) {
        merged = true;
        break;
      }
    }
    if (!merged) hull.facets.push_back({f.normal, f.offset, points_on_plane(y, f.normal, f.offset, eps)});
  }

  // A point is a vertex when the facets through it pin it down completely.
  for (Index i = 0; i < y.rows(); ++i) {
    std::vector<const Vector*> normals;
    for (const LocalFacet& f : hull.facets) {
      if (std::binary_search(f.on_plane.begin(), f.on_plane.end(), i)) normals.push_back(&f.normal);
    }
    if (static_cast<Index>(normals.size()) < d) continue;
    Eigen::JacobiSVD<Matrix> svd(stack_normals(normals, d));
    const Vector& s = svd.singularValues();
    Index rank = 0;
    for (Index k = 0; k < s.size(); ++k) {
      if (s[k] > kRankTolerance * std::max(1.0, s[0])) ++rank;
    }
    if (rank == d) hull.vertices.push_back(i);
  }
  return hull;
}

double point_set_diameter(const Matrix& points) {
  double best = 0.0;
  for (Index i = 0; i < points.rows(); ++i) {
    for (Index j = i + 1; j < points.rows(); ++j) {
      best = std::max(best, (points.row(i) - points.row(j)).squaredNorm());
    }
  }
  return std::sqrt(best);
}

}  // namespace

Polytope convex_hull(const StateSet& states) {
  const int d = states.affine_dim();
  if (d > kMaxHullDimension) {
    throw Error(ErrorKind::UnsupportedDimension,
                "affine dimension " + std::to_string(d) + " exceeds the supported maximum of " +
                    std::to_string(kMaxHullDimension));
  }
  const AffineFrame& frame = states.frame();
  Polytope poly;
  poly.affine_dim = d;
  poly.scale = states.scale();
  poly.diameter = point_set_diameter(states.points());
  for (Index k = 0; k < frame.complement.cols(); ++k) {
    const Vector w = frame.complement.col(k);
    poly.span_equations.push_back({w, w.dot(frame.origin)});
  }
  if (d == 0) {
    poly.vertices = {0};
    return poly;
  }

  const Matrix local = (states.points().rowwise() - frame.origin.transpose()) * frame.basis;
  const double eps = kHullTolerance * states.scale();
  LocalHull hull;
  if (d == 1) {
    hull = interval_hull(local);
  } else if (d == 2) {
    hull = polygon_hull(local, eps);
  } else {
    hull = incremental_hull(local, eps);
  }

  poly.vertices = hull.vertices;
  for (const LocalFacet& f : hull.facets) {
    Facet facet;
    facet.normal = frame.basis * f.normal;
    facet.normal = facet.normal.unaryExpr([](double x) { return std::abs(x) <= 1e-14 ? 0.0 : x; });
    facet.normal.normalize();
    std::set_intersection(f.on_plane.begin(), f.on_plane.end(), poly.vertices.begin(),
                          poly.vertices.end(), std::back_inserter(facet.vertices));
    // Offset from the original coordinates of the facet's vertices.
    facet.offset = std::numeric_limits<double>::infinity();
    for (Index v : facet.vertices) {
      facet.offset = std::min(facet.offset, facet.normal.dot(states.point(v)));
    }
    poly.facets.push_back(std::move(facet));
  }
  std::sort(poly.facets.begin(), poly.facets.end(),
            [](const Facet& a, const Facet& b) { return a.vertices < b.vertices; });
  return poly;
}

double span_violation(const Polytope& hull, const Vector& x) {
  double worst = 0.0;
  for (const SpanEquation& eq : hull.span_equations) {
    if (eq.normal.size() != x.size()) {
      throw Error(ErrorKind::DimensionMismatch, "point dimension does not match the polytope");
    }
    worst = std::max(worst, std::abs(eq.normal.dot(x) - eq.value));
  }
  return worst;
}

double interior_margin(const Polytope& hull, const Vector& x) {
  const double off = span_violation(hull, x);
  if (off > kHullTolerance * hull.scale) {
    throw Error(ErrorKind::OffAffineSpan,
                "point is " + std::to_string(off) + " away from the affine span of the hull");
  }
  double margin = std::numeric_limits<double>::infinity();
  for (const Facet& f : hull.facets) {
    if (f.normal.size() != x.size()) {
      throw Error(ErrorKind::DimensionMismatch, "point dimension does not match the polytope");
    }
    margin = std::min(margin, f.normal.dot(x) - f.offset);
  }
  return margin;
}

FaceResult min_face(const StateSet& states, const CoVector& direction) {
  require_dim(states, direction);
  const Vector values = states.points() * direction.components();
  const double lowest = values.minCoeff();
  const double tol = kHullTolerance * (values.maxCoeff() - lowest);
  FaceResult face;
  face.value = lowest;
  face.barycenter = Vector::Zero(states.dim());
  for (Index i = 0; i < values.size(); ++i) {
    if (values[i] <= lowest + tol) {
      face.indices.push_back(i);
      face.barycenter += states.point(i);
    }
  }
  face.barycenter /= static_cast<double>(face.indices.size());
  return face;
}

Vector tropical_limit(const StateSet& states, const CoVector& direction) {
  require_dim(states, direction);
  if (direction.components().isZero(0.0)) {
    throw Error(ErrorKind::ZeroDirection, "tropical limit needs a nonzero direction");
  }
  return min_face(states, direction).barycenter;
}

}  // namespace mgibbs
