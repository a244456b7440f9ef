#include "quatquot/twistor.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "quatquot/group_action.hpp"
#include "quatquot/lattice.hpp"

namespace qq {

namespace {

Eigen::VectorXcd flatten(const UPoint& p) {
  Eigen::VectorXcd out(2 * p.slots());
  for (int i = 0; i < p.slots(); ++i) {
    out(2 * i) = p.c[i].x;
    out(2 * i + 1) = p.c[i].y;
  }
  return out;
}

double projective_residual(const UPoint& a, const UPoint& b) {
  const Eigen::VectorXcd va = flatten(a).normalized();
  const Eigen::VectorXcd vb = flatten(b).normalized();
  return 1.0 - std::abs(va.dot(vb));
}

cplx ipow(cplx base, long long e) {
  cplx out = 1.0;
  while (e > 0) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

}  // namespace

UPoint line_point(const ConformalData& r, cplx z) {
  const auto zj = r.z();
  UPoint p;
  p.c.resize(r.k());
  for (int j = 0; j < r.k(); ++j) p.c[j] = {1.0 - std::conj(zj[j]) * z, zj[j] + z};
  return p;
}

UPoint line_point_infinity(const ConformalData& r) {
  const auto zj = r.z();
  UPoint p;
  p.c.resize(r.k());
  for (int j = 0; j < r.k(); ++j) p.c[j] = {-std::conj(zj[j]), 1.0};
  return p;
}

std::vector<cplx> torus_value(const ConformalData& r, cplx z, double guard) {
  const auto zj = r.z();
  std::vector<cplx> out(r.k());
  const double scale = 1.0 + std::abs(z);
  for (int j = 0; j < r.k(); ++j) {
    if (std::abs(z - zj[j]) <= guard * scale || std::abs(z + zj[j]) <= guard * scale)
      throw std::domain_error("parameter coincides with an excluded point");
    out[j] = (z + zj[j]) / (z - zj[j]);
  }
  return out;
}

double involution_residual(const ConformalData& r, cplx z) {
  const UPoint moved = complex_torus_act(torus_value(r, z), line_point(r, z));
  return projective_residual(moved, line_point(r, -z));
}

RealStructureCheck real_structure_check(const ConformalData& r, cplx z) {
  if (std::abs(z) < 1e-6) throw std::domain_error("parameter too close to zero");
  const UPoint image = left_structure(2, line_point(r, z));
  RealStructureCheck out;
  out.antipodal_residual = projective_residual(image, line_point(r, -1.0 / std::conj(z)));
  out.inverse_residual = projective_residual(image, line_point(r, 1.0 / std::conj(z)));
  out.antipodal_holds = out.antipodal_residual < 1e-9;
  out.inverse_holds = out.inverse_residual < 1e-9;
  return out;
}

std::array<cplx, 2> descended_value(const CombinatorialData& s, const ConformalData& r, cplx z) {
  const DerivedData t = derive(s);
  const auto zj = r.z();
  std::array<cplx, 2> out;
  for (int m = 0; m < 2; ++m) {
    cplx num = 1.0, den = 1.0;
    for (int j = 0; j < s.k(); ++j) {
      const long long e = (m == 0) ? t.v[j].a : t.v[j].b;
      if (e > 0) {
        num *= ipow(z + zj[j], e);
        den *= ipow(z - zj[j], e);
      } else if (e < 0) {
        num *= ipow(z - zj[j], -e);
        den *= ipow(z + zj[j], -e);
      }
    }
    if (std::abs(den) < 1e-300 || std::abs(num) < 1e-300)
      throw std::domain_error("pole or zero of the descended value");
    out[m] = num / den;
  }
  return out;
}

double pushforward_residual(const CombinatorialData& s, const ConformalData& r, cplx z) {
  const std::array<cplx, 2> direct = descended_value(s, r, z);
  const std::vector<cplx> psi = torus_value(r, z);
  const DerivedData t = derive(s);
  double worst = 0.0;
  for (int m = 0; m < 2; ++m) {
    cplx pushed = 1.0;
    for (int j = 0; j < s.k(); ++j) {
      const long long e = (m == 0) ? t.v[j].a : t.v[j].b;
      if (e > 0) pushed *= ipow(psi[j], e);
      if (e < 0) pushed /= ipow(psi[j], -e);
    }
    worst = std::max(worst, std::abs(direct[m] - pushed) / std::max(1.0, std::abs(direct[m])));
  }
  return worst;
}

ClassificationReport classification_report(const CombinatorialData& s, const ConformalData& r) {
  if (s.k() != r.k()) throw std::invalid_argument("lattice and angle lists differ in length");
  ClassificationReport rep;
  const DerivedData t = derive(s);
  rep.v = t.v;
  rep.z = r.z();
  rep.zeta = r.zeta();
  rep.convex = is_convex(s);
  rep.ordering_ok = validate_r(r).ok;

  const CombinatorialData back = recover(t);
  rep.round_trip_ok = (back.u == s.u);

  // Fixed sweep on two circles away from the excluded unit-circle points.
  int antipodal = 0, inverse = 0, total = 0;
  for (double radius : {0.7, 1.9}) {
    for (int step = 0; step < 40; ++step) {
      const double phase = 2.0 * std::numbers::pi * step / 40.0 + 0.013;
      const cplx z = std::polar(radius, phase);
      rep.max_involution_residual =
          std::max(rep.max_involution_residual, involution_residual(r, z));
      rep.max_pushforward_residual =
          std::max(rep.max_pushforward_residual, pushforward_residual(s, r, z));
      const RealStructureCheck rs = real_structure_check(r, z);
      ++total;
      if (rs.antipodal_holds) ++antipodal;
      if (rs.inverse_holds) ++inverse;
    }
  }
  if (antipodal == total && inverse < total)
    rep.real_structure = "antipodal";
  else if (inverse == total && antipodal < total)
    rep.real_structure = "inverse-conjugate";
  else
    rep.real_structure = "neither";

  if (!rep.convex) rep.warning = "lattice data is not in strictly increasing sector order";
  return rep;
}

DeformabilityReport deformability(const DerivedData& t) {
  const int k = t.k();
  const IMat kernel = kernel_basis(build_omega(t));
  DeformabilityReport rep;
  rep.tk_invariant_dim = k;

  auto annihilates = [&](const std::vector<long long>& w) {
    for (int rr = 0; rr < kernel.rows(); ++rr) {
      long long dot = 0;
      for (int j = 0; j < k; ++j) dot += kernel(rr, j) * w[j];
      if (dot != 0) return false;
    }
    return true;
  };

  for (int a = 0; a < k; ++a) {
    for (int b = a; b < k; ++b) {
      std::vector<long long> w(k, 0);
      w[a] += 1;
      w[b] += 1;
      if (annihilates(w)) rep.extra_weights.push_back(w);
    }
  }
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      std::vector<long long> w(k, 0);
      w[a] = 1;
      w[b] = -1;
      if (annihilates(w)) rep.extra_weights.push_back(w);
    }
  }
  rep.extra_dim = 2 * static_cast<int>(rep.extra_weights.size());
  return rep;
}

}  // namespace qq
