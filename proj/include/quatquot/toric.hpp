#pragma once

// Combinatorial input data for the quotient construction: a cyclically
// ordered list of lattice vectors u_1, ..., u_k in Z^2 normalized into the
// half-open sector {second coord > 0} U {(p, 0), p > 0}, together with the
// conformal angle data 0 = theta_1 < ... < theta_k < pi.

#include <complex>
#include <string>
#include <vector>

#include "quatquot/lattice.hpp"

namespace qq {

struct LatticeVec {
  long long a = 0, b = 0;

  LatticeVec() = default;
  LatticeVec(long long a_, long long b_) : a(a_), b(b_) {}

  bool operator==(const LatticeVec& o) const { return a == o.a && b == o.b; }
  LatticeVec operator+(const LatticeVec& o) const { return {a + o.a, b + o.b}; }
  LatticeVec operator-(const LatticeVec& o) const { return {a - o.a, b - o.b}; }
  LatticeVec operator-() const { return {-a, -b}; }
  bool is_zero() const { return a == 0 && b == 0; }
};

inline long long cross(const LatticeVec& u, const LatticeVec& v) { return u.a * v.b - u.b * v.a; }
inline long long dot(const LatticeVec& u, const LatticeVec& v) { return u.a * v.a + u.b * v.b; }

// The boundary normal list u_1, ..., u_k.
struct CombinatorialData {
  std::vector<LatticeVec> u;

  int k() const { return static_cast<int>(u.size()); }
};

// The edge differences v_1 = u_1 + u_k, v_i = u_i - u_{i-1}.
struct DerivedData {
  std::vector<LatticeVec> v;

  int k() const { return static_cast<int>(v.size()); }
};

// Angles with derived unit values z_i = exp(i theta_i) and zeta_i = z_i^2.
struct ConformalData {
  std::vector<double> theta;

  int k() const { return static_cast<int>(theta.size()); }
  std::vector<std::complex<double>> z() const;
  std::vector<std::complex<double>> zeta() const;
};

struct CheckIssue {
  std::string check;
  int index = -1;  // offending position, -1 when global
  std::string message;
};

struct SValidation {
  bool sector_normalized = false;
  bool consecutive_independent = false;
  bool generates_lattice = false;
  long long sublattice_index = 0;  // 0 when rank-deficient
  std::vector<CheckIssue> issues;

  bool ok() const { return sector_normalized && consecutive_independent && generates_lattice; }
};

struct RValidation {
  bool ok = false;
  std::vector<CheckIssue> issues;
};

// Rejects k < 3 and zero vectors by throwing; reports the three structural
// checks and the index of the sublattice spanned by the u_i.
SValidation validate_s(const CombinatorialData& s);

RValidation validate_r(const ConformalData& r);

// Sector-normalized data lists the boundary stabilizer normals in boundary
// order; the full normal sequence of the orbit polygon is the antiperiodic
// doubling u_1, ..., u_k, -u_1, ..., -u_k.  That sequence winds exactly once
// with consistently oriented turns iff the sector arguments strictly
// increase, i.e. cross(u_i, u_{i+1}) > 0 for i = 1..k-1 (the wrap pair
// (u_k, -u_1) is automatic).  Exact integer arithmetic.
bool is_convex(const CombinatorialData& s);

// Winding number of the doubled normal sequence; 1 for convex data.
int doubled_winding(const CombinatorialData& s);

// Canonical sector form of an arbitrary independent cyclic vector list:
// flips each vector into the closed upper sector, rotates a horizontal
// vector (or the minimal argument) to the front, and reverses the cyclic
// order when the arguments run backwards.  Used to compare data that differ
// by a plane lattice isomorphism.
CombinatorialData sector_normalize(std::vector<LatticeVec> raw);

DerivedData derive(const CombinatorialData& s);

// Inverse of derive: u_i = (sum_{j<=i} v_j - sum_{j>i} v_j) / 2.  Throws when
// the half-sums are not integral.
CombinatorialData recover(const DerivedData& t);

// Second Betti number of the associated space: k - 2.
int b2(const CombinatorialData& s);

// 2 x k integer matrix whose columns are the u_i.
IMat normals_matrix(const CombinatorialData& s);

}  // namespace qq
