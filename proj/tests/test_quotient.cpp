#include <doctest.h>

#include <cmath>
#include <random>

#include "generators.hpp"
#include "quatquot/group_action.hpp"
#include "quatquot/quotient.hpp"

using namespace qq;
using namespace qqtest;

namespace {

// Differential of the torus action: the action is linear on the packed
// coordinates, so tangent vectors push forward by the action itself.
Eigen::MatrixXd transport(const Eigen::VectorXd& phi, const Eigen::MatrixXd& basis) {
  Eigen::MatrixXd out(basis.rows(), basis.cols());
  for (int j = 0; j < basis.cols(); ++j) {
    out.col(j) = to_vector(torus_act(phi, from_vector(basis.col(j))));
  }
  return out;
}

}  // namespace

TEST_CASE("vertical space has full rank at generic points") {
  std::mt19937_64 g(61);
  const MomentSetup spec = build_setup(k4_s(), k4_r());
  for (int trial = 0; trial < 20; ++trial) {
    const UPoint p = random_zero_level_point(k4_r(), g);
    const Eigen::MatrixXd vert = vertical_space(p, spec.kernel);
    REQUIRE(vert.rows() == 16);
    REQUIRE(vert.cols() == 6);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(vert);
    CHECK(svd.singularValues()(5) > 1e-8 * svd.singularValues()(0));
    CHECK(stabilizer_margin(p) > 1e-6);
  }
}

TEST_CASE("descended structures satisfy the quaternion relations") {
  std::mt19937_64 g(62);
  for (const auto& [s, r] : {std::pair{k3_s(), k3_r()}, {k4_s(), k4_r()}, {k5_s(), k5_r()}}) {
    const MomentSetup spec = build_setup(s, r);
    int accepted = 0;
    for (int trial = 0; trial < 40; ++trial) {
      const UPoint p = random_zero_level_point(r, g);
      DescendedFrame frame;
      try {
        frame = descend_structures(p, spec);
      } catch (const std::domain_error&) {
        continue;
      }
      ++accepted;
      CHECK(frame.relation_residual < 1e-6);
      CHECK(frame.kernel_dim == s.k() + 6);
      CHECK(frame.basis.cols() == 4);
      const Eigen::Matrix4d id = Eigen::Matrix4d::Identity();
      CHECK((frame.i1 * frame.i1 + id).norm() < 1e-6);
      CHECK((frame.i2 * frame.i2 + id).norm() < 1e-6);
      CHECK((frame.i3 * frame.i3 + id).norm() < 1e-6);
      CHECK((frame.i1 * frame.i2 - frame.i3).norm() < 1e-6);
      CHECK((frame.i2 * frame.i3 - frame.i1).norm() < 1e-6);
      // The quotient basis really is orthogonal to the vertical directions.
      const Eigen::MatrixXd vert = vertical_space(p, spec.kernel);
      CHECK((vert.transpose() * frame.basis).cwiseAbs().maxCoeff() < 1e-8 * p.norm_sq());
    }
    CHECK(accepted >= 35);
  }
}

TEST_CASE("conformal class is independent of the basis choice") {
  std::mt19937_64 g(63);
  const MomentSetup spec = build_setup(k4_s(), k4_r());

  // Alternative setup: rotated annihilator rows and a relabeled kernel
  // basis describe the same subtorus and the same moment map level.
  MomentSetup alt = spec;
  Eigen::MatrixXd mix(2, 2);
  mix << std::cos(0.7), -std::sin(0.7), std::sin(0.7), std::cos(0.7);
  alt.annihilator = mix * spec.annihilator;
  IMat relabel(2, 2);
  relabel << 1, 1, 0, 1;
  alt.kernel = relabel * spec.kernel;

  for (int trial = 0; trial < 20; ++trial) {
    const UPoint p = random_zero_level_point(k4_r(), g);
    DescendedFrame a, b;
    try {
      a = descend_structures(p, spec);
      b = descend_structures(p, alt);
    } catch (const std::domain_error&) {
      continue;
    }
    CHECK(class_distance(a, b) < 1e-6);
  }
}

TEST_CASE("conformal class is invariant along the subtorus flow") {
  std::mt19937_64 g(64);
  for (const auto& [s, r] : {std::pair{k3_s(), k3_r()}, {k4_s(), k4_r()}}) {
    const MomentSetup spec = build_setup(s, r);
    int compared = 0;
    for (int trial = 0; trial < 30 && compared < 10; ++trial) {
      const UPoint p = random_zero_level_point(r, g);
      // Flow direction inside the subtorus keeps the level and the class.
      Eigen::VectorXd d = Eigen::VectorXd::Zero(s.k());
      for (int rr = 0; rr < spec.kernel.rows(); ++rr) {
        const double c = uniform_in(g, -1.0, 1.0);
        for (int i = 0; i < s.k(); ++i) d[i] += c * static_cast<double>(spec.kernel(rr, i));
      }
      const UPoint q = torus_act(d, p);
      DescendedFrame fa, fb;
      try {
        fa = descend_structures(p, spec);
        fb = descend_structures(q, spec);
      } catch (const std::domain_error&) {
        continue;
      }
      ++compared;
      const Eigen::MatrixXd moved = transport(d, fa.basis);
      CHECK(class_distance(moved, conformal_rep(fa), fb.basis, conformal_rep(fb)) < 1e-5);
    }
    CHECK(compared >= 10);
  }
}

TEST_CASE("distinguished structure from the first slot") {
  std::mt19937_64 g(65);
  const MomentSetup spec = build_setup(k4_s(), k4_r());
  int used = 0;
  for (int trial = 0; trial < 30 && used < 12; ++trial) {
    const UPoint p = random_zero_level_point(k4_r(), g);
    if (p.c[0].norm_sq() < 0.1) continue;
    DescendedFrame frame;
    try {
      frame = descend_structures(p, spec);
    } catch (const std::domain_error&) {
      continue;
    }
    ++used;
    const Eigen::Matrix4d j = descend_nu1(p, frame);
    CHECK((j * j + Eigen::Matrix4d::Identity()).norm() < 1e-5);
  }
  CHECK(used >= 12);

  // A first slot with x = 1, y = 0 has slot value on the first axis, so the
  // combination collapses to the first structure.
  UPoint p = orbit_point(k4_r(), 0.3, 1.1);
  const cplx scale = std::sqrt(cplx(p.c[0].norm_sq(), 0.0));
  p.c[0] = {scale, 0.0};
  const DescendedFrame frame = descend_structures(p, spec);
  const Eigen::Matrix4d j = descend_nu1(p, frame);
  CHECK((j - frame.i1).norm() < 1e-8);

  UPoint zero_first = p;
  zero_first.c[0] = {{0.0, 0.0}, {0.0, 0.0}};
  CHECK_THROWS_AS(descend_nu1(zero_first, frame), std::domain_error);
}

TEST_CASE("fixed point probes sit on the level with a degenerate torus map") {
  for (const auto& [s, r] : {std::pair{k3_s(), k3_r()}, {k4_s(), k4_r()}, {k5_s(), k5_r()}}) {
    for (int i = 1; i <= s.k(); ++i) {
      const FixedPointProbe probe = fixed_point_probe(s, r, i);
      CHECK(probe.on_level);
      CHECK(probe.mu_norm < 1e-12);
      CHECK(probe.slot_norm_sq == 0.0);
      CHECK(probe.degenerate_directions >= 1);
      CHECK(probe.tk_min_sv < 1e-8);
    }
    CHECK_THROWS_AS(fixed_point_probe(s, r, 0), std::invalid_argument);
    CHECK_THROWS_AS(fixed_point_probe(s, r, s.k() + 1), std::invalid_argument);
  }
}

TEST_CASE("one vanishing slot still descends for screened data") {
  // The pinned circle lies in the full torus, not in the screened subtorus,
  // so the quotient construction stays healthy there.
  const MomentSetup spec = build_setup(k4_s(), k4_r());
  const FixedPointProbe probe = fixed_point_probe(k4_s(), k4_r(), 2);
  REQUIRE(probe.slot_norm_sq == 0.0);
  const DescendedFrame frame = descend_structures(probe.p, spec);
  CHECK(frame.relation_residual < 1e-6);
  CHECK(frame.vertical_margin > 1e-6);
}

TEST_CASE("descent rejects the cone point") {
  const MomentSetup spec = build_setup(k4_s(), k4_r());
  UPoint origin;
  origin.c.assign(4, ComplexSplit{});
  CHECK_THROWS_AS(descend_structures(origin, spec), std::domain_error);
}
