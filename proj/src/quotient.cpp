#include "quatquot/quotient.hpp"

#include <cmath>
#include <stdexcept>

#include "quatquot/group_action.hpp"

namespace qq {

namespace {

Eigen::MatrixXd fiber_columns(const UPoint& p) {
  const Eigen::VectorXd pv = to_vector(p);
  Eigen::MatrixXd out(pv.size(), 4);
  out.col(0) = pv;
  for (int a = 1; a <= 3; ++a) out.col(a) = apply_structure(a, pv);
  return out;
}

double margin_of(const Eigen::MatrixXd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  return sv(0) > 0 ? sv(sv.size() - 1) / sv(0) : 0.0;
}

}  // namespace

Eigen::MatrixXd vertical_space(const UPoint& p, const IMat& kernel) {
  const Eigen::MatrixXd xd = infinitesimal_columns(kernel, p);
  Eigen::MatrixXd out(4 * p.slots(), kernel.rows() + 4);
  out.leftCols(kernel.rows()) = xd;
  out.rightCols(4) = fiber_columns(p);
  return out;
}

double stabilizer_margin(const UPoint& p) {
  const int k = p.slots();
  IMat id = IMat::Identity(k, k);
  Eigen::MatrixXd m(4 * k, k + 4);
  m.leftCols(k) = infinitesimal_columns(id, p);
  m.rightCols(4) = fiber_columns(p);
  return margin_of(m);
}

DescendedFrame descend_structures(const UPoint& p, const MomentSetup& spec) {
  const int k = p.slots();
  if (spec.k() != k) throw std::invalid_argument("setup size mismatch");

  DescendedFrame frame;
  frame.p = p;

  const Eigen::MatrixXd bil = transversality_bilinear(p, spec);
  frame.bilinear_margin = margin_of(bil);
  if (!(frame.bilinear_margin > 1e-6))
    throw std::domain_error("transversality margin too small at this point");

  const Eigen::MatrixXd vert = vertical_space(p, spec.kernel);
  frame.vertical_margin = margin_of(vert);
  if (!(frame.vertical_margin > 1e-6))
    throw std::domain_error("vertical space degenerates at this point");

  // Kernel of the moment differential.
  const Eigen::MatrixXd jac = moment_jacobian(p, spec);
  Eigen::JacobiSVD<Eigen::MatrixXd> jsvd(jac, Eigen::ComputeFullV);
  const auto& jsv = jsvd.singularValues();
  const double jtol = 1e-10 * std::max(1.0, jsv.size() > 0 ? jsv(0) : 0.0);
  int rank = 0;
  for (int i = 0; i < jsv.size(); ++i)
    if (jsv(i) > jtol) ++rank;
  frame.kernel_dim = 4 * k - rank;
  if (frame.kernel_dim != k + 6)
    throw std::domain_error("moment differential does not have full rank here");
  const Eigen::MatrixXd kernel = jsvd.matrixV().rightCols(frame.kernel_dim);

  // Quotient basis: component of the kernel orthogonal to the vertical
  // space.  The vertical space lies inside the kernel, so the projected
  // kernel has rank exactly four.
  const Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(vert)
                                .householderQ() *
                            Eigen::MatrixXd::Identity(4 * k, k + 2);
  const Eigen::MatrixXd reduced = kernel - q * (q.transpose() * kernel);
  Eigen::JacobiSVD<Eigen::MatrixXd> rsvd(reduced, Eigen::ComputeFullU);
  if (rsvd.singularValues().size() < 4 || rsvd.singularValues()(3) < 0.5)
    throw std::domain_error("quotient basis extraction failed");
  const Eigen::MatrixXd basis = rsvd.matrixU().leftCols(4);
  frame.basis = basis;

  // Corrected lifts: subtract the subtorus fields weighted so that the
  // pairings against the annihilator fields vanish; the structures then
  // keep the corrected lift inside the kernel up to fiber directions.
  const Eigen::MatrixXd xd = infinitesimal_columns(spec.kernel, p);
  const Eigen::MatrixXd xb = infinitesimal_columns(spec.annihilator, p);
  const Eigen::MatrixXd pairings = xb.transpose() * basis;  // (k-2) x 4
  const Eigen::MatrixXd alpha = bil.transpose().partialPivLu().solve(pairings);
  const Eigen::MatrixXd lifted = basis - xd * alpha;

  Eigen::Matrix4d ia[3];
  for (int a = 1; a <= 3; ++a) {
    Eigen::MatrixXd moved(4 * k, 4);
    for (int j = 0; j < 4; ++j) moved.col(j) = apply_structure(a, Eigen::VectorXd(lifted.col(j)));
    ia[a - 1] = basis.transpose() * moved;
  }
  frame.i1 = ia[0];
  frame.i2 = ia[1];
  frame.i3 = ia[2];

  const Eigen::Matrix4d id = Eigen::Matrix4d::Identity();
  double res = (frame.i1 * frame.i2 - frame.i3).norm();
  res = std::max(res, (frame.i1 * frame.i1 + id).norm());
  res = std::max(res, (frame.i2 * frame.i2 + id).norm());
  res = std::max(res, (frame.i3 * frame.i3 + id).norm());
  frame.relation_residual = res;
  return frame;
}

Eigen::Matrix4d conformal_rep(const DescendedFrame& frame) {
  Eigen::Matrix4d f;
  f.col(0) = Eigen::Vector4d::Unit(0);
  f.col(1) = frame.i1.col(0);
  f.col(2) = frame.i2.col(0);
  f.col(3) = frame.i3.col(0);
  Eigen::Matrix4d g = (f * f.transpose()).inverse();
  return g / g(0, 0);
}

double class_distance(const Eigen::MatrixXd& basis_a, const Eigen::Matrix4d& gram_a,
                      const Eigen::MatrixXd& basis_b, const Eigen::Matrix4d& gram_b) {
  const Eigen::Matrix4d t = basis_b.transpose() * basis_a;
  const Eigen::Matrix4d tinv = t.inverse();
  Eigen::Matrix4d moved = tinv.transpose() * gram_a * tinv;
  moved /= moved.norm();
  Eigen::Matrix4d ref = gram_b;
  ref /= ref.norm();
  return (moved - ref).norm();
}

double class_distance(const DescendedFrame& a, const DescendedFrame& b) {
  return class_distance(a.basis, conformal_rep(a), b.basis, conformal_rep(b));
}

Eigen::Matrix4d descend_nu1(const UPoint& p, const DescendedFrame& frame) {
  const Eigen::MatrixXd values = nu(p);
  const Eigen::Vector3d n1 = values.row(0);
  const double len = n1.norm();
  if (!(len > 1e-12 * std::max(1.0, p.norm_sq())))
    throw std::domain_error("first slot vanishes: no distinguished structure here");
  return (n1(0) * frame.i1 + n1(1) * frame.i2 + n1(2) * frame.i3) / len;
}

FixedPointProbe fixed_point_probe(const CombinatorialData& s, const ConformalData& r, int i) {
  const int k = s.k();
  if (i < 1 || i > k) throw std::invalid_argument("slot index out of range");
  const MomentSetup spec = build_setup(s, r);

  Eigen::Vector3d xdir, ydir;
  if (i == 1) {
    xdir = {0.0, 0.0, 0.0};
    ydir = {0.0, 1.0, 0.0};
  } else {
    const double pole = std::cos(r.theta[i - 1]) / std::sin(r.theta[i - 1]);
    xdir = {1.0, 0.0, 0.0};
    ydir = {-pole, 0.0, 0.0};
  }

  FixedPointProbe probe;
  probe.p = section_point(r, xdir, ydir);
  probe.mu_norm = moment_map(probe.p, spec).norm();
  probe.slot_norm_sq = probe.p.c[i - 1].norm_sq();
  probe.on_level = on_zero_level(probe.p, spec);

  IMat id = IMat::Identity(k, k);
  const Eigen::MatrixXd tk = infinitesimal_columns(id, probe.p);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(tk);
  const auto& sv = svd.singularValues();
  probe.tk_min_sv = sv(sv.size() - 1);
  for (int j = 0; j < sv.size(); ++j)
    if (sv(j) < 1e-8) ++probe.degenerate_directions;
  return probe;
}

}  // namespace qq
