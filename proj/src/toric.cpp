#include "quatquot/toric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qq {

std::vector<std::complex<double>> ConformalData::z() const {
  std::vector<std::complex<double>> out(theta.size());
  for (size_t i = 0; i < theta.size(); ++i) out[i] = std::polar(1.0, theta[i]);
  return out;
}

std::vector<std::complex<double>> ConformalData::zeta() const {
  std::vector<std::complex<double>> out(theta.size());
  for (size_t i = 0; i < theta.size(); ++i) out[i] = std::polar(1.0, 2.0 * theta[i]);
  return out;
}

SValidation validate_s(const CombinatorialData& s) {
  const int k = s.k();
  if (k < 3) throw std::invalid_argument("need at least three lattice vectors");
  for (int i = 0; i < k; ++i)
    if (s.u[i].is_zero()) throw std::invalid_argument("zero lattice vector");

  SValidation r;

  // Sector normalization: u_1 on the positive horizontal axis, the rest in
  // the open upper half plane.
  r.sector_normalized = true;
  if (!(s.u[0].b == 0 && s.u[0].a >= 1)) {
    r.sector_normalized = false;
    r.issues.push_back({"sector", 0, "first vector must be (p, 0) with p >= 1"});
  }
  for (int i = 1; i < k; ++i) {
    if (!(s.u[i].b > 0)) {
      r.sector_normalized = false;
      r.issues.push_back({"sector", i, "second coordinate must be positive"});
    }
  }

  // Consecutive pairs u_i, u_{i+1} must be linearly independent.  The wrap
  // pair (u_k, u_1) is automatic in the sector: u_k has positive second
  // coordinate while u_1 does not.
  r.consecutive_independent = true;
  for (int i = 0; i + 1 < k; ++i) {
    if (cross(s.u[i], s.u[i + 1]) == 0) {
      r.consecutive_independent = false;
      r.issues.push_back({"independence", i, "consecutive vectors are parallel"});
    }
  }

  IMat m(k, 2);
  for (int i = 0; i < k; ++i) {
    m(i, 0) = s.u[i].a;
    m(i, 1) = s.u[i].b;
  }
  r.sublattice_index = lattice_index(m, 2);
  r.generates_lattice = (r.sublattice_index == 1);
  if (!r.generates_lattice) {
    r.issues.push_back({"span", -1,
                        r.sublattice_index == 0
                            ? "vectors do not span the plane"
                            : "vectors span a proper sublattice of index " +
                                  std::to_string(r.sublattice_index)});
  }
  return r;
}

RValidation validate_r(const ConformalData& r) {
  RValidation out;
  out.ok = true;
  const int k = r.k();
  if (k < 1) {
    out.ok = false;
    out.issues.push_back({"angles", -1, "empty angle list"});
    return out;
  }
  if (r.theta[0] != 0.0) {
    out.ok = false;
    out.issues.push_back({"angles", 0, "first angle must be zero"});
  }
  for (int i = 0; i + 1 < k; ++i) {
    if (!(r.theta[i] < r.theta[i + 1])) {
      out.ok = false;
      out.issues.push_back({"angles", i + 1, "angles must be strictly increasing"});
    }
  }
  if (!(r.theta[k - 1] < std::numbers::pi)) {
    out.ok = false;
    out.issues.push_back({"angles", k - 1, "angles must stay below pi"});
  }
  return out;
}

bool is_convex(const CombinatorialData& s) {
  for (int i = 0; i + 1 < s.k(); ++i)
    if (cross(s.u[i], s.u[i + 1]) <= 0) return false;
  return true;
}

int doubled_winding(const CombinatorialData& s) {
  const int k = s.k();
  std::vector<LatticeVec> w(s.u);
  for (int i = 0; i < k; ++i) w.push_back(-s.u[i]);
  double total = 0.0;
  for (int i = 0; i < 2 * k; ++i) {
    const LatticeVec& p = w[i];
    const LatticeVec& q = w[(i + 1) % (2 * k)];
    total += std::atan2(static_cast<double>(cross(p, q)), static_cast<double>(dot(p, q)));
  }
  return static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
}

CombinatorialData sector_normalize(std::vector<LatticeVec> raw) {
  const int k = static_cast<int>(raw.size());
  if (k < 3) throw std::invalid_argument("need at least three lattice vectors");
  for (auto& w : raw) {
    if (w.is_zero()) throw std::invalid_argument("zero lattice vector");
    if (w.b < 0 || (w.b == 0 && w.a < 0)) w = -w;
  }

  // Any strictly upper vector beats a horizontal one for last place, so
  // rotate a horizontal vector to the front when present; otherwise start at
  // the smallest argument.
  const auto rotate_min_front = [k](std::vector<LatticeVec> v) {
    int start = 0;
    for (int i = 1; i < k; ++i) {
      if (v[i].b == 0 && v[start].b != 0) {
        start = i;
      } else if ((v[i].b == 0) == (v[start].b == 0) && cross(v[i], v[start]) > 0) {
        start = i;
      }
    }
    std::rotate(v.begin(), v.begin() + start, v.end());
    return v;
  };
  const auto monotone = [k](const std::vector<LatticeVec>& v) {
    for (int i = 0; i + 1 < k; ++i) {
      if (cross(v[i], v[i + 1]) <= 0) return false;
    }
    return true;
  };

  // An orientation reversing lattice map reverses the cyclic argument order,
  // so the compensating normal form reverses the list.  Prefer whichever
  // orientation is monotone; a list that is monotone neither way keeps its
  // given orientation.
  std::vector<LatticeVec> forward = rotate_min_front(raw);
  if (!monotone(forward)) {
    std::reverse(raw.begin(), raw.end());
    std::vector<LatticeVec> backward = rotate_min_front(std::move(raw));
    if (monotone(backward)) forward = std::move(backward);
  }

  CombinatorialData out;
  out.u = std::move(forward);
  return out;
}

DerivedData derive(const CombinatorialData& s) {
  const int k = s.k();
  DerivedData t;
  t.v.resize(k);
  t.v[0] = s.u[0] + s.u[k - 1];
  for (int i = 1; i < k; ++i) t.v[i] = s.u[i] - s.u[i - 1];
  return t;
}

CombinatorialData recover(const DerivedData& t) {
  const int k = t.k();
  if (k < 3) throw std::invalid_argument("need at least three difference vectors");
  CombinatorialData s;
  s.u.resize(k);
  LatticeVec total{0, 0};
  for (const auto& v : t.v) total = total + v;
  // u_i = (prefix_i - suffix_i)/2 where prefix + suffix = total.
  LatticeVec prefix{0, 0};
  for (int i = 0; i < k; ++i) {
    prefix = prefix + t.v[i];
    LatticeVec twice = prefix + prefix - total;
    if ((twice.a % 2) != 0 || (twice.b % 2) != 0)
      throw std::invalid_argument("difference data does not come from integral normals");
    s.u[i] = {twice.a / 2, twice.b / 2};
  }
  return s;
}

int b2(const CombinatorialData& s) { return s.k() - 2; }

IMat normals_matrix(const CombinatorialData& s) {
  IMat m(2, s.k());
  for (int i = 0; i < s.k(); ++i) {
    m(0, i) = s.u[i].a;
    m(1, i) = s.u[i].b;
  }
  return m;
}

}  // namespace qq
