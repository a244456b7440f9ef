#pragma once

// The k-torus action on k quaternionic slots: lambda acts on slot i by
// (x_i, y_i) -> (lambda_i x_i, lambda_i^{-1} y_i).  The subtorus of interest
// is cut out by the integer kernel of the map e_i -> v_i built from the
// edge-difference data.

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "quatquot/quaternion.hpp"
#include "quatquot/toric.hpp"

namespace qq {

// 2 x k integer matrix with columns v_1, ..., v_k.
IMat build_omega(const DerivedData& t);

// Saturated integer row basis of the kernel lattice of omega, canonicalized
// by Hermite normal form.  Throws when omega does not have rank 2.
IMat kernel_basis(const IMat& omega);

// Images of the torus lattice generators {(e_1 + ... + e_k)/2, e_2, ..., e_k}
// under e_i -> v_i generate the full plane lattice.  Equivalent to the
// normals u_i having sublattice index 1.
bool quotient_is_f(const CombinatorialData& s);

struct PatternWitness {
  int m = 0;  // 1-based position of the distinguished entry
  std::vector<long long> d;
};

struct LocallyFreeReport {
  bool locally_free = true;
  std::vector<PatternWitness> witnesses;
  // 1-based positions m where u_{m-1} and u_m are linearly dependent
  // (cyclically, with m = 1 pairing u_k against u_1).  Bound-independent.
  std::vector<int> dependent_positions;
};

// Screens for circle stabilizers: any kernel direction of the shape
// (d1, ..., d1, d_m, -d1, ..., -d1) forces the exact relation
// (d1 - d_m) u_{m-1} + (d1 + d_m) u_m = 0, so a hit certifies a fixed
// circle and requires consecutive normals to be parallel.  Enumerates
// d1 in 1..bound for every split position and solves for d_m; the
// dependent_positions list is the symbolic check with no bound.
LocallyFreeReport locally_free_screen(const DerivedData& t, int bound = 8);

// Slot-wise (lambda_i x_i, lambda_i^{-1} y_i).  Throws on a zero factor.
UPoint complex_torus_act(const std::vector<std::complex<double>>& lambda, const UPoint& p);

// Real form: lambda_i = exp(i phi_i).
UPoint torus_act(const Eigen::VectorXd& phi, const UPoint& p);

// Tangent vector of the action flow in direction d at p: slot components
// (i d_i x_i, -i d_i y_i), packed as a 4k real vector.
Eigen::VectorXd infinitesimal(const Eigen::VectorXd& d, const UPoint& p);

// Column j is the infinitesimal field of row j of dirs.
Eigen::MatrixXd infinitesimal_columns(const Eigen::MatrixXd& dirs, const UPoint& p);
Eigen::MatrixXd infinitesimal_columns(const IMat& dirs, const UPoint& p);

}  // namespace qq
