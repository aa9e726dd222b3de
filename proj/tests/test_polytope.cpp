#include <doctest.h>

#include <cmath>

#include "moment_gibbs/gibbs.hpp"
#include "moment_gibbs/polytope.hpp"
#include "test_support.hpp"

using namespace mgibbs;
using doctest::Approx;

namespace {

StateSet square() { return StateSet::from_rows(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}); }

Vector vec(std::initializer_list<double> xs) {
  return Eigen::Map<const Vector>(xs.begin(), static_cast<Index>(xs.size()));
}

// Hypercube {0,1}^dim.
StateSet hypercube(int dim) {
  Matrix pts(1 << dim, dim);
  for (int i = 0; i < (1 << dim); ++i)
    for (int j = 0; j < dim; ++j) pts(i, j) = (i >> j) & 1;
  return StateSet(dim, pts);
}

void check_polytope_invariants(const StateSet& s, const Polytope& q) {
  for (const Facet& f : q.facets) {
    CHECK(f.normal.norm() == Approx(1.0));
    CHECK(static_cast<int>(f.vertices.size()) >= q.affine_dim);
    for (Index i = 0; i < s.size(); ++i) {
      CHECK(f.normal.dot(s.point(i)) - f.offset >= -1e-9);
    }
    for (Index v : f.vertices) {
      CHECK(std::abs(f.normal.dot(s.point(v)) - f.offset) <= 1e-9);
      CHECK(std::binary_search(q.vertices.begin(), q.vertices.end(), v));
    }
  }
  CHECK(std::is_sorted(q.vertices.begin(), q.vertices.end()));
}

}  // namespace

TEST_CASE("interval hull") {
  const StateSet s = StateSet::from_rows(1, {{0}, {1}, {2}});
  const Polytope q = convex_hull(s);
  CHECK(q.affine_dim == 1);
  CHECK(q.vertices == std::vector<Index>{0, 2});
  REQUIRE(q.facets.size() == 2);
  CHECK(q.facets[0].normal[0] == Approx(1.0));
  CHECK(q.facets[0].offset == Approx(0.0));
  CHECK(q.facets[1].normal[0] == Approx(-1.0));
  CHECK(q.facets[1].offset == Approx(-2.0));
  check_polytope_invariants(s, q);
}

TEST_CASE("unit square hull") {
  const StateSet s = square();
  const Polytope q = convex_hull(s);
  CHECK(q.vertices.size() == 4);
  CHECK(q.facets.size() == 4);
  CHECK(q.span_equations.empty());
  CHECK(q.diameter == Approx(std::sqrt(2.0)));
  check_polytope_invariants(s, q);
}

TEST_CASE("collinear points give a segment with one span equation") {
  const StateSet s = StateSet::from_rows(2, {{0, 0}, {1, 1}, {2, 2}});
  const Polytope q = convex_hull(s);
  CHECK(q.affine_dim == 1);
  CHECK(q.vertices == std::vector<Index>{0, 2});
  REQUIRE(q.span_equations.size() == 1);
  const SpanEquation& eq = q.span_equations[0];
  // x = y up to orientation
  CHECK(std::abs(eq.normal[0] + eq.normal[1]) < 1e-12);
  CHECK(std::abs(eq.value) < 1e-12);
  check_polytope_invariants(s, q);
}

TEST_CASE("non-vertex points on edges and faces are excluded") {
  const StateSet grid = StateSet::from_rows(
      2, {{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 1}, {0, 2}, {1, 2}, {2, 2}});
  const Polytope q = convex_hull(grid);
  CHECK(q.vertices == std::vector<Index>{0, 2, 6, 8});
  CHECK(q.facets.size() == 4);
  check_polytope_invariants(grid, q);

  Matrix pts(27, 3);
  for (int i = 0; i < 27; ++i) {
    pts(i, 0) = i % 3;
    pts(i, 1) = (i / 3) % 3;
    pts(i, 2) = i / 9;
  }
  const StateSet cube3(3, pts);
  const Polytope c = convex_hull(cube3);
  CHECK(c.vertices == std::vector<Index>{0, 2, 6, 8, 18, 20, 24, 26});
  CHECK(c.facets.size() == 6);
  for (const Facet& f : c.facets) CHECK(f.vertices.size() == 4);
  check_polytope_invariants(cube3, c);
}

TEST_CASE("hypercubes up to dimension six") {
  for (int dim = 3; dim <= 6; ++dim) {
    const StateSet s = hypercube(dim);
    const Polytope q = convex_hull(s);
    CHECK(q.vertices.size() == static_cast<std::size_t>(1 << dim));
    CHECK(q.facets.size() == static_cast<std::size_t>(2 * dim));
    for (const Facet& f : q.facets) CHECK(f.vertices.size() == static_cast<std::size_t>(1 << (dim - 1)));
  }
}

TEST_CASE("simplex and cross-polytope facet counts") {
  // 4-simplex: 5 facets; 4-dimensional cross-polytope: 16 facets.
  Matrix simplex = Matrix::Zero(5, 4);
  simplex.bottomRows(4) = Matrix::Identity(4, 4);
  CHECK(convex_hull(StateSet(4, simplex)).facets.size() == 5);
  Matrix cross(8, 4);
  cross << Matrix::Identity(4, 4), -Matrix::Identity(4, 4);
  const Polytope q = convex_hull(StateSet(4, cross));
  CHECK(q.facets.size() == 16);
  CHECK(q.vertices.size() == 8);
}

TEST_CASE("dimension above six is rejected") {
  Matrix pts = Matrix::Zero(8, 7);
  pts.bottomRows(7) = Matrix::Identity(7, 7);
  try {
    convex_hull(StateSet(7, pts));
    FAIL("expected UnsupportedDimension");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedDimension);
  }
  // A low-dimensional set in high ambient dimension is fine.
  Matrix line = Matrix::Zero(3, 9);
  line.col(4) << 0, 1, 2;
  CHECK(convex_hull(StateSet(9, line)).affine_dim == 1);
}

TEST_CASE("interior_margin examples") {
  const Polytope q = convex_hull(square());
  CHECK(interior_margin(q, vec({0.5, 0.5})) == Approx(0.5));
  CHECK(std::abs(interior_margin(q, vec({1, 1}))) < 1e-15);
  CHECK(interior_margin(q, vec({2, 2})) == Approx(-1.0));
}

TEST_CASE("interior_margin rejects points off the affine span") {
  const Polytope q = convex_hull(StateSet::from_rows(2, {{0, 0}, {1, 1}, {2, 2}}));
  CHECK(interior_margin(q, vec({1, 1})) == Approx(std::sqrt(2.0)));
  try {
    interior_margin(q, vec({1, 0}));
    FAIL("expected OffAffineSpan");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OffAffineSpan);
  }
}

TEST_CASE("zero-dimensional hull") {
  const Polytope q = convex_hull(StateSet::from_rows(2, {{3, 4}}));
  CHECK(q.affine_dim == 0);
  CHECK(q.vertices == std::vector<Index>{0});
  CHECK(std::isinf(interior_margin(q, vec({3, 4}))));
  CHECK_THROWS_AS(interior_margin(q, vec({3, 5})), Error);
}

TEST_CASE("min_face examples") {
  const StateSet s = square();
  const FaceResult corner = min_face(s, CoVector{1, 1});
  CHECK(corner.indices == std::vector<Index>{0});
  CHECK(corner.barycenter.isZero());
  CHECK(corner.value == 0.0);

  const FaceResult edge = min_face(s, CoVector{1, 0});
  CHECK(edge.indices == std::vector<Index>{0, 2});
  CHECK(edge.barycenter[0] == 0.0);
  CHECK(edge.barycenter[1] == 0.5);

  const FaceResult all = min_face(s, CoVector{0, 0});
  CHECK(all.indices.size() == 4);
  CHECK((all.barycenter - s.barycenter()).norm() < 1e-15);
}

TEST_CASE("tropical_limit examples") {
  const StateSet two = StateSet::from_rows(1, {{0}, {1}});
  CHECK(tropical_limit(two, CoVector{1.0})[0] == 0.0);
  CHECK(tropical_limit(two, CoVector{-1.0})[0] == 1.0);
  const Vector edge = tropical_limit(square(), CoVector{1, 0});
  CHECK(edge[0] == 0.0);
  CHECK(edge[1] == 0.5);
  try {
    tropical_limit(square(), CoVector{0, 0});
    FAIL("expected ZeroDirection");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroDirection);
  }
}

TEST_CASE("min_face is invariant under positive rescaling") {
  testing::Rng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const int dim = testing::uniform_int(rng, 1, 3);
    const StateSet s = testing::random_lattice_state_set(rng, dim, testing::uniform_int(rng, 2, 15), 3);
    Vector dir(dim);
    for (int j = 0; j < dim; ++j) dir[j] = testing::uniform_int(rng, -2, 2);
    const FaceResult base = min_face(s, CoVector(dir));
    for (double c : {1e-3, 0.7, 3.0, 1e4}) {
      CHECK(min_face(s, CoVector(Vector(c * dir))).indices == base.indices);
    }
  }
}

TEST_CASE("hull classification agrees with brute-force Caratheodory membership") {
  testing::Rng rng(22);
  int counts[3] = {0, 0, 0};
  for (int trial = 0; trial < 150; ++trial) {
    const int dim = testing::uniform_int(rng, 1, 3);
    const StateSet s = trial % 2 == 0
                           ? testing::random_full_state_set(rng, dim, testing::uniform_int(rng, dim + 1, 10))
                           : testing::random_lattice_state_set(rng, dim, testing::uniform_int(rng, dim + 1, 10), 2);
    const auto n_points = static_cast<int>(s.size());
    if (s.affine_dim() != dim) continue;
    const Polytope q = convex_hull(s);
    check_polytope_invariants(s, q);

    std::vector<Vector> probes;
    // Strictly positive convex combinations are interior.
    for (int k = 0; k < 3; ++k) {
      probes.push_back(s.points().transpose() * testing::random_simplex_point(rng, n_points, 0.01));
    }
    // Face barycenters (brute-force argmin) are on the boundary.
    for (int k = 0; k < 3; ++k) {
      const Vector u = testing::random_vector(rng, dim, 1.0);
      const Vector values = s.points() * u;
      const double lowest = values.minCoeff();
      Vector center = Vector::Zero(dim);
      int hits = 0;
      for (Index i = 0; i < values.size(); ++i) {
        if (values[i] <= lowest + 1e-12) {
          center += s.point(i);
          ++hits;
        }
      }
      probes.push_back(center / hits);
    }
    // Points pushed beyond a supporting hyperplane are outside.
    for (int k = 0; k < 3; ++k) {
      const Vector u = testing::random_vector(rng, dim, 1.0).normalized();
      const Vector values = s.points() * u;
      Index top;
      values.maxCoeff(&top);
      probes.push_back(s.point(top) + testing::uniform(rng, 0.01, 1.0) * u);
    }
    // Random points, whatever they are.
    for (int k = 0; k < 6; ++k) probes.push_back(testing::random_vector(rng, dim, 2.0));

    for (const Vector& x : probes) {
      const int truth = testing::brute_force_classify(s.points(), x);
      const double margin = interior_margin(q, x);
      const int mine = margin > 1e-9 ? 1 : (margin < -1e-9 ? -1 : 0);
      CHECK(mine == truth);
      ++counts[truth + 1];
    }
  }
  // All three classes were exercised.
  CHECK(counts[0] > 50);
  CHECK(counts[1] > 50);
  CHECK(counts[2] > 50);
}

TEST_CASE("mean energy lies strictly inside the hull") {
  testing::Rng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const int dim = testing::uniform_int(rng, 1, 4);
    const StateSet s = testing::random_full_state_set(rng, dim, testing::uniform_int(rng, dim + 1, 20));
    const Polytope q = convex_hull(s);
    const CoVector beta(testing::random_vector(rng, dim, 10.0));
    CHECK(interior_margin(q, mean_energy(s, beta)) > 0.0);
  }
}

TEST_CASE("tropical convergence at a unique minimizer") {
  testing::Rng rng(24);
  int tested = 0;
  while (tested < 50) {
    const int dim = testing::uniform_int(rng, 1, 3);
    const StateSet s = testing::random_lattice_state_set(rng, dim, testing::uniform_int(rng, 2, 10), 4);
    Vector dir(dim);
    for (int j = 0; j < dim; ++j) dir[j] = testing::uniform_int(rng, -3, 3);
    if (dir.isZero()) continue;
    Vector values = s.points() * dir;
    std::sort(values.data(), values.data() + values.size());
    const double gap = values[1] - values[0];
    if (gap <= 0.0) continue;  // tie: face is not a vertex
    ++tested;
    const Vector limit = tropical_limit(s, CoVector(dir));
    const double diam = convex_hull(s).diameter;
    double previous = std::numeric_limits<double>::infinity();
    for (double t : {10.0, 20.0, 50.0}) {
      const double err = (mean_energy(s, CoVector(Vector(t * dir))) - limit).norm();
      CHECK(err <= (s.size() - 1) * diam * std::exp(-t * gap) + 1e-15);
      CHECK(err <= previous);
      previous = err;
    }
    const double err = (mean_energy(s, CoVector(Vector((50.0 / gap) * dir))) - limit).norm();
    CHECK(err <= 1e-6);
  }
}
