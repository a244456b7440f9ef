#include "quatquot/joyce.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "quatquot/parallel.hpp"

namespace qq {

std::vector<double> poles_from_angles(const ConformalData& r) {
  std::vector<double> p(r.k());
  for (int i = 0; i < r.k(); ++i) {
    const double th = r.theta[i];
    p[i] = (th == 0.0) ? std::numeric_limits<double>::infinity()
                       : std::cos(th) / std::sin(th);
  }
  return p;
}

Eigen::Vector2d elementary_solution(double pole, double xt, double yt) {
  if (std::isinf(pole)) return pole > 0 ? Eigen::Vector2d(-1.0, 0.0) : Eigen::Vector2d(1.0, 0.0);
  const double rho = std::hypot(xt - pole, yt);
  if (rho == 0.0) throw std::domain_error("evaluation at the singular point (p, 0)");
  return {(xt - pole) / rho, yt / rho};
}

Eigen::Matrix2d joyce_matrix(const DerivedData& t, const std::vector<double>& poles,
                             double xt, double yt) {
  if (static_cast<int>(poles.size()) != t.k()) throw std::invalid_argument("size mismatch");
  Eigen::Matrix2d m = Eigen::Matrix2d::Zero();
  for (int i = 0; i < t.k(); ++i) {
    const Eigen::Vector2d f = elementary_solution(poles[i], xt, yt);
    const Eigen::Vector2d v(static_cast<double>(t.v[i].a), static_cast<double>(t.v[i].b));
    m += f * v.transpose();
  }
  return 0.5 * m;
}

JoyceScan nondegeneracy_scan(const DerivedData& t, const ConformalData& r, int n,
                             const std::vector<double>& boundary_eps, double xt_lo,
                             double xt_hi, double yt_hi) {
  if (n < 0) throw std::invalid_argument("grid size must be nonnegative");
  JoyceScan res;
  if (n == 0) {
    res.trivial = true;
    return res;
  }
  const std::vector<double> poles = poles_from_angles(r);

  std::vector<double> eps(boundary_eps);
  std::sort(eps.begin(), eps.end());
  const int extra = static_cast<int>(eps.size());
  const int rows = n + extra;
  res.samples = rows * n;
  res.xt.resize(res.samples);
  res.yt.resize(res.samples);
  res.det.resize(res.samples);

  parallel_for(rows, [&](int row) {
    const bool boundary = row < extra;
    const double yt = boundary ? eps[row] : yt_hi * (row - extra + 1) / n;
    for (int col = 0; col < n; ++col) {
      const double xt = (n == 1) ? xt_lo : xt_lo + (xt_hi - xt_lo) * col / (n - 1);
      const int idx = row * n + col;
      res.xt[idx] = xt;
      res.yt[idx] = yt;
      const double d = joyce_matrix(t, poles, xt, yt).determinant();
      res.det[idx] = boundary ? d / yt : d;
    }
  });

  res.min_abs_det = std::abs(res.det[0]);
  for (double v : res.det) res.min_abs_det = std::min(res.min_abs_det, std::abs(v));
  int changes = 0;
  for (int row = 0; row < rows; ++row)
    for (int col = 0; col + 1 < n; ++col)
      if (res.det[row * n + col] * res.det[row * n + col + 1] < 0.0) ++changes;
  for (int col = 0; col < n; ++col)
    for (int row = 0; row + 1 < rows; ++row)
      if (res.det[row * n + col] * res.det[(row + 1) * n + col] < 0.0) ++changes;
  res.sign_changes = changes;
  return res;
}

CorrespondenceResult correspondence_check(const CombinatorialData& s, const ConformalData& r,
                                          int n, double tol, double xt_lo, double xt_hi,
                                          double yt_hi) {
  if (n < 1) throw std::invalid_argument("grid size must be positive");
  const DerivedData t = derive(s);
  const std::vector<double> poles = poles_from_angles(r);

  double vscale = 0.0;
  for (const auto& v : t.v) vscale += std::hypot(static_cast<double>(v.a), static_cast<double>(v.b));
  vscale *= 0.5;
  const double joyce_scale = 2.0 * vscale * vscale;

  CorrespondenceResult res;
  res.samples = n * n;
  std::vector<double> ja(res.samples), ca(res.samples);
  std::vector<int> status(res.samples, 0);  // 0 rejected, +-1 product sign

  parallel_for(n, [&](int row) {
    const double yt = yt_hi * (row + 1) / n;
    for (int col = 0; col < n; ++col) {
      const double xt = (n == 1) ? xt_lo : xt_lo + (xt_hi - xt_lo) * col / (n - 1);
      const int idx = row * n + col;
      const UPoint p = orbit_point(r, xt, yt);
      const ClearedDet cd = transversality_cleared(p, t, r);
      const double jd = joyce_matrix(t, poles, xt, yt).determinant();
      const double cn = cd.scale > 0 ? std::abs(cd.value) / cd.scale : 0.0;
      const double jn = std::abs(jd) / joyce_scale;
      if (cn > tol && jn > tol) {
        ja[idx] = jn;
        ca[idx] = cn;
        status[idx] = (jd * cd.value > 0) ? 1 : -1;
      }
    }
  });

  int ref = 0;
  for (int i = 0; i < res.samples; ++i) {
    if (status[i] == 0) continue;
    ++res.accepted;
    if (ref == 0) {
      ref = status[i];
      res.min_joyce = ja[i];
      res.min_cleared = ca[i];
    }
    res.min_joyce = std::min(res.min_joyce, ja[i]);
    res.min_cleared = std::min(res.min_cleared, ca[i]);
    if (status[i] == ref) ++res.coherent;
  }
  res.sign_constant = (res.accepted > 0) && (res.coherent == res.accepted);
  return res;
}

}  // namespace qq
