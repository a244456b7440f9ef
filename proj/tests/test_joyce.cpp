#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "generators.hpp"
#include "quatquot/joyce.hpp"
#include "quatquot/moment.hpp"

using namespace qq;
using namespace qqtest;

TEST_CASE("pole positions from the angles") {
  const std::vector<double> p3 = poles_from_angles(k3_r());
  REQUIRE(p3.size() == 3);
  CHECK(std::isinf(p3[0]));
  CHECK(p3[0] > 0);
  CHECK(p3[1] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(p3[2]) < 1e-14);

  std::mt19937_64 g(51);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 3 + static_cast<int>(g() % 4);
    const std::vector<double> poles = poles_from_angles(random_angles(g, k));
    for (std::size_t i = 0; i + 1 < poles.size(); ++i) {
      CHECK(poles[i] > poles[i + 1]);
    }
  }
}

TEST_CASE("elementary solutions: frozen values and unit length") {
  const Eigen::Vector2d a = elementary_solution(0.0, 0.0, 1.0);
  CHECK(a[0] == doctest::Approx(0.0));
  CHECK(a[1] == doctest::Approx(1.0));
  const Eigen::Vector2d b = elementary_solution(1.0, 1.0, 2.0);
  CHECK(b[0] == doctest::Approx(0.0));
  CHECK(b[1] == doctest::Approx(1.0));
  const Eigen::Vector2d c = elementary_solution(0.0, 1.0, 1.0);
  CHECK(c[0] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
  CHECK(c[1] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
  const Eigen::Vector2d inf = elementary_solution(std::numeric_limits<double>::infinity(), 0.3, 2.0);
  CHECK(inf[0] == -1.0);
  CHECK(inf[1] == 0.0);

  std::mt19937_64 g(52);
  for (int trial = 0; trial < 200; ++trial) {
    const double pole = uniform_in(g, -4.0, 4.0);
    const double xt = uniform_in(g, -4.0, 4.0);
    const double yt = uniform_in(g, 0.01, 4.0);
    CHECK(elementary_solution(pole, xt, yt).norm() == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK_THROWS_AS(elementary_solution(1.0, 1.0, 0.0), std::domain_error);
}

TEST_CASE("frozen matrix determinant at the reference point") {
  const DerivedData t = derive(k3_s());
  const std::vector<double> poles = poles_from_angles(k3_r());
  const Eigen::Matrix2d m = joyce_matrix(t, poles, 0.0, 1.0);
  // Twice the matrix has determinant -(1 + sqrt 2) here.
  CHECK(4.0 * m.determinant() == doctest::Approx(-(1.0 + std::sqrt(2.0))).epsilon(1e-14));
  CHECK(m(0, 1) == doctest::Approx(m(1, 0)).epsilon(1e-12));
}

TEST_CASE("matrix determinant against the cleared determinant") {
  // Exact identity: 4 det(J) * prod |q_i|^2 = -y * cleared, with the point
  // taken on the orbit section.
  std::mt19937_64 g(53);
  for (const auto& [s, r] : {std::pair{k3_s(), k3_r()}, {k4_s(), k4_r()}, {k5_s(), k5_r()},
                             {nonconvex_s(), k3_r()}}) {
    const DerivedData t = derive(s);
    const std::vector<double> poles = poles_from_angles(r);
    for (int trial = 0; trial < 60; ++trial) {
      const double xt = uniform_in(g, -3.0, 3.0);
      const double yt = uniform_in(g, 0.05, 3.0);
      const UPoint p = orbit_point(r, xt, yt);
      double rho_prod = 1.0;
      for (const auto& slot : p.c) rho_prod *= slot.norm_sq();
      const double lhs = 4.0 * joyce_matrix(t, poles, xt, yt).determinant() * rho_prod;
      const double rhs = -yt * transversality_cleared(p, t, r).value;
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
  }
}

TEST_CASE("nondegeneracy scan on the fixtures") {
  for (const auto& [s, r] : {std::pair{k3_s(), k3_r()}, {k4_s(), k4_r()}, {k5_s(), k5_r()}}) {
    const JoyceScan scan = nondegeneracy_scan(derive(s), r, 40);
    CHECK_FALSE(scan.trivial);
    CHECK(scan.sign_changes == 0);
    CHECK(scan.min_abs_det > 1e-9);
    // Two boundary rows precede the interior grid.
    CHECK(scan.samples == static_cast<int>(scan.det.size()));
    CHECK(scan.samples == 42 * 40);
  }
  const JoyceScan bad = nondegeneracy_scan(derive(nonconvex_s()), k3_r(), 40);
  CHECK(bad.sign_changes > 0);

  const JoyceScan empty = nondegeneracy_scan(derive(k3_s()), k3_r(), 0);
  CHECK(empty.trivial);
}

TEST_CASE("correspondence: both determinants flip together everywhere") {
  for (const auto& [s, r] : {std::pair{k3_s(), k3_r()}, {k4_s(), k4_r()}, {k5_s(), k5_r()},
                             {nonconvex_s(), k3_r()}}) {
    const CorrespondenceResult res = correspondence_check(s, r, 40);
    CHECK(res.samples == 1600);
    CHECK(res.accepted > 0);
    CHECK(res.coherent == res.accepted);
    CHECK(res.sign_constant);
  }
}

TEST_CASE("correspondence breaks when the edge data is corrupted") {
  // Pairing the edges with the wrong poles spoils the sign coherence
  // between the matrix route and the cleared determinant route.
  CombinatorialData s = k4_s();
  const ConformalData r = k4_r();
  const DerivedData good = derive(s);
  DerivedData tampered = good;
  std::reverse(tampered.v.begin(), tampered.v.end());

  const std::vector<double> poles = poles_from_angles(r);
  int disagreements = 0;
  std::mt19937_64 g(54);
  for (int trial = 0; trial < 40; ++trial) {
    const double xt = uniform_in(g, -3.0, 3.0);
    const double yt = uniform_in(g, 0.05, 3.0);
    const UPoint p = orbit_point(r, xt, yt);
    const ClearedDet cd = transversality_cleared(p, derive(s), r);
    if (std::abs(cd.value) < 1e-9 * cd.scale) continue;
    const double cleared = cd.value;
    const double good_det = joyce_matrix(good, poles, xt, yt).determinant();
    const double bad_det = joyce_matrix(tampered, poles, xt, yt).determinant();
    CHECK(good_det * cleared < 0.0);
    if (bad_det * cleared >= 0.0) ++disagreements;
  }
  CHECK(disagreements > 0);
}
