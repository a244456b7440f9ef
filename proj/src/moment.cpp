#include "quatquot/moment.hpp"

#include <cmath>
#include <stdexcept>

#include "quatquot/group_action.hpp"
#include "quatquot/parallel.hpp"

namespace qq {

MomentSetup build_setup(const CombinatorialData& s, const ConformalData& r) {
  if (s.k() != r.k()) throw std::invalid_argument("lattice and angle lists differ in length");
  const int k = s.k();
  MomentSetup spec;
  spec.re_z.resize(k);
  spec.im_z.resize(k);
  for (int i = 0; i < k; ++i) {
    spec.re_z[i] = std::cos(r.theta[i]);
    spec.im_z[i] = std::sin(r.theta[i]);
  }

  // Orthonormal basis of the spanned plane.
  Eigen::VectorXd a1 = spec.re_z;
  if (a1.norm() < 1e-12) throw std::invalid_argument("degenerate angle data");
  a1.normalize();
  Eigen::VectorXd a2 = spec.im_z - spec.im_z.dot(a1) * a1;
  if (a2.norm() < 1e-12) throw std::invalid_argument("angle vectors are linearly dependent");
  a2.normalize();

  // Gram-Schmidt over the coordinate vectors in index order.
  spec.annihilator.resize(k - 2, k);
  int rows = 0;
  for (int i = 0; i < k && rows < k - 2; ++i) {
    Eigen::VectorXd c = Eigen::VectorXd::Zero(k);
    c[i] = 1.0;
    c -= c.dot(a1) * a1;
    c -= c.dot(a2) * a2;
    for (int rr = 0; rr < rows; ++rr) {
      Eigen::VectorXd b = spec.annihilator.row(rr);
      c -= c.dot(b) * b;
    }
    if (c.norm() > 1e-10) {
      c.normalize();
      spec.annihilator.row(rows++) = c;
    }
  }
  if (rows != k - 2) throw std::invalid_argument("annihilator construction lost rank");

  spec.kernel = kernel_basis(build_omega(derive(s)));
  return spec;
}

Eigen::MatrixXd nu(const UPoint& p) {
  Eigen::MatrixXd out(p.slots(), 3);
  for (int i = 0; i < p.slots(); ++i) {
    const std::complex<double>& x = p.c[i].x;
    const std::complex<double>& y = p.c[i].y;
    const std::complex<double> w = 2.0 * std::complex<double>(0.0, 1.0) * x * y;
    out(i, 0) = std::norm(x) - std::norm(y);
    out(i, 1) = w.real();
    out(i, 2) = w.imag();
  }
  return out;
}

Eigen::MatrixXd moment_map(const UPoint& p, const MomentSetup& spec) {
  return spec.annihilator * nu(p);
}

Eigen::Vector4d nu_gradient(int axis, const ComplexSplit& q) {
  const double a = q.x.real(), b = q.x.imag(), c = q.y.real(), d = q.y.imag();
  switch (axis) {
    case 1:
      return {2 * a, 2 * b, -2 * c, -2 * d};
    case 2:
      return {-2 * d, -2 * c, -2 * b, -2 * a};
    case 3:
      return {2 * c, -2 * d, 2 * a, -2 * b};
    default:
      throw std::invalid_argument("axis must be 1, 2 or 3");
  }
}

Eigen::MatrixXd moment_jacobian(const UPoint& p, const MomentSetup& spec) {
  const int k = p.slots();
  const int m = static_cast<int>(spec.annihilator.rows());
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(3 * m, 4 * k);
  for (int r = 0; r < m; ++r)
    for (int axis = 1; axis <= 3; ++axis)
      for (int i = 0; i < k; ++i)
        out.block<1, 4>(3 * r + axis - 1, 4 * i) =
            spec.annihilator(r, i) * nu_gradient(axis, p.c[i]).transpose();
  return out;
}

Eigen::VectorXd raised_gradient(int axis, const Eigen::VectorXd& grad) {
  // Axis 1 carries the gradient of nu_1 onto twice the action field; axes 2
  // and 3 land on the negative of it, so flip them to make the three agree.
  Eigen::VectorXd out = apply_structure(axis, grad);
  return axis == 1 ? out : Eigen::VectorXd(-out);
}

double holomorphicity_residual(const UPoint& p, const MomentSetup& spec) {
  const Eigen::MatrixXd jac = moment_jacobian(p, spec);
  const int m = static_cast<int>(spec.annihilator.rows());
  double worst = 0.0;
  for (int r = 0; r < m; ++r) {
    Eigen::VectorXd g[3];
    for (int axis = 1; axis <= 3; ++axis)
      g[axis - 1] = raised_gradient(axis, jac.row(3 * r + axis - 1));
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b) worst = std::max(worst, (g[a] - g[b]).norm());
  }
  return worst;
}

bool on_zero_level(const UPoint& p, const MomentSetup& spec, double tol) {
  if (p.is_zero()) return false;
  return moment_map(p, spec).norm() <= tol * p.norm_sq();
}

double plane_membership_residual(const UPoint& p, const MomentSetup& spec) {
  Eigen::VectorXd a1 = spec.re_z.normalized();
  Eigen::VectorXd a2 = (spec.im_z - spec.im_z.dot(a1) * a1).normalized();
  const Eigen::MatrixXd nv = nu(p);
  double worst = 0.0;
  for (int c = 0; c < 3; ++c) {
    Eigen::VectorXd col = nv.col(c);
    col -= col.dot(a1) * a1;
    col -= col.dot(a2) * a2;
    worst = std::max(worst, col.norm());
  }
  const double scale = p.norm_sq();
  return scale > 0 ? worst / scale : worst;
}

UPoint section_point(const ConformalData& r, const Eigen::Vector3d& xdir,
                     const Eigen::Vector3d& ydir, std::vector<int>* degenerate_slots) {
  const int k = r.k();
  UPoint p;
  p.c.resize(k);
  if (degenerate_slots) degenerate_slots->clear();
  for (int i = 0; i < k; ++i) {
    const Eigen::Vector3d t = std::cos(r.theta[i]) * xdir + std::sin(r.theta[i]) * ydir;
    const double norm = t.norm();
    if (norm == 0.0) {
      p.c[i] = ComplexSplit{};
      if (degenerate_slots) degenerate_slots->push_back(i);
      continue;
    }
    const double xm2 = 0.5 * (norm + t[0]);
    if (xm2 <= 1e-15 * norm) {
      p.c[i].x = 0.0;
      p.c[i].y = std::sqrt(norm);
    } else {
      const double xm = std::sqrt(xm2);
      p.c[i].x = xm;
      p.c[i].y = std::complex<double>(t[2], -t[1]) / (2.0 * xm);
    }
  }
  return p;
}

UPoint orbit_point(const ConformalData& r, double xt, double yt,
                   std::vector<int>* degenerate_slots) {
  return section_point(r, {1.0, 0.0, 0.0}, {-xt, yt, 0.0}, degenerate_slots);
}

ClearedDet transversality_cleared(const UPoint& p, const DerivedData& t, const ConformalData& r) {
  const int k = p.slots();
  if (t.k() != k || r.k() != k) throw std::invalid_argument("size mismatch");
  std::vector<double> rho(k);
  double rho_max = 0.0;
  for (int i = 0; i < k; ++i) {
    rho[i] = p.c[i].norm_sq();
    rho_max = std::max(rho_max, rho[i]);
  }
  int vanish = 0;
  for (int i = 0; i < k; ++i)
    if (rho[i] <= 1e-13 * rho_max) ++vanish;
  if (rho_max == 0.0 || vanish >= 2)
    throw std::domain_error("two or more vanishing slots: outside the scanned stratum");

  std::vector<double> f1(k), f2(k);
  for (int i = 0; i < k; ++i) {
    f1[i] = std::cos(r.theta[i]);
    f2[i] = std::sin(r.theta[i]);
  }
  ClearedDet out;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      double coeff = (f1[i] * f2[j] - f2[i] * f1[j]) * static_cast<double>(cross(t.v[i], t.v[j]));
      if (coeff == 0.0) continue;
      double prod = 1.0;
      for (int l = 0; l < k; ++l)
        if (l != i && l != j) prod *= rho[l];
      out.value += coeff * prod;
      out.scale += std::abs(coeff * prod);
    }
  }
  return out;
}

Eigen::MatrixXd transversality_bilinear(const UPoint& p, const MomentSetup& spec) {
  const Eigen::MatrixXd xd = infinitesimal_columns(spec.kernel, p);
  const Eigen::MatrixXd xb = infinitesimal_columns(spec.annihilator, p);
  return xd.transpose() * xb;
}

ScanResult scan_transversality(const CombinatorialData& s, const ConformalData& r, int n,
                               double xt_lo, double xt_hi, double yt_hi) {
  if (n < 1) throw std::invalid_argument("grid size must be positive");
  const DerivedData t = derive(s);
  ScanResult res;
  res.samples = n * n;
  res.xt.resize(res.samples);
  res.yt.resize(res.samples);
  res.det.resize(res.samples);
  std::vector<double> normed(res.samples);

  parallel_for(n, [&](int row) {
    const double yt = yt_hi * (row + 1) / n;
    for (int col = 0; col < n; ++col) {
      const double xt = (n == 1) ? xt_lo : xt_lo + (xt_hi - xt_lo) * col / (n - 1);
      const int idx = row * n + col;
      res.xt[idx] = xt;
      res.yt[idx] = yt;
      const UPoint p = orbit_point(r, xt, yt);
      const ClearedDet d = transversality_cleared(p, t, r);
      res.det[idx] = d.value;
      normed[idx] = d.scale > 0 ? d.value / d.scale : 0.0;
    }
  });

  res.min_abs_det = std::abs(normed[0]);
  for (double v : normed) res.min_abs_det = std::min(res.min_abs_det, std::abs(v));
  int changes = 0;
  for (int row = 0; row < n; ++row)
    for (int col = 0; col + 1 < n; ++col)
      if (res.det[row * n + col] * res.det[row * n + col + 1] < 0.0) ++changes;
  for (int col = 0; col < n; ++col)
    for (int row = 0; row + 1 < n; ++row)
      if (res.det[row * n + col] * res.det[(row + 1) * n + col] < 0.0) ++changes;
  res.sign_changes = changes;
  return res;
}

}  // namespace qq
