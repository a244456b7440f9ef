#pragma once

// Elementary half-plane solutions with poles on the boundary, the weighted
// tensor-sum matrix built from the edge difference data, boundary
// nondegeneracy scans, and the sign match against the cleared
// transversality determinant.

#include <vector>

#include <Eigen/Dense>

#include "quatquot/moment.hpp"
#include "quatquot/toric.hpp"

namespace qq {

// Pole positions on the boundary line: the first angle is zero so the first
// pole is +infinity; the rest are cot(theta_i), strictly decreasing.
std::vector<double> poles_from_angles(const ConformalData& r);

// Unit vector ((xt - p)/rho, yt/rho) with rho the distance to (p, 0); the
// infinite pole takes the p -> +inf limit (-1, 0).  Throws at (p, 0).
Eigen::Vector2d elementary_solution(double pole, double xt, double yt);

// Half the sum over slots of the outer products f^{p_i} v_i^T; entry (a, b)
// is (1/2) sum_i f_a v_b.
Eigen::Matrix2d joyce_matrix(const DerivedData& t, const std::vector<double>& poles,
                             double xt, double yt);

struct JoyceScan {
  int samples = 0;
  int sign_changes = 0;
  double min_abs_det = 0.0;
  bool trivial = false;  // empty grid, passes with a warning
  std::vector<double> xt, yt, det;  // row-major, boundary rows first
};

// Interior n x n grid over xt in [xt_lo, xt_hi], yt in (0, yt_hi], plus one
// boundary row per eps value carrying det/yt at yt = eps (same sign as det
// for yt > 0, finite limit at the boundary).  Sign changes are counted over
// the combined field; min |det| is taken over all recorded values.
JoyceScan nondegeneracy_scan(const DerivedData& t, const ConformalData& r, int n,
                             const std::vector<double>& boundary_eps = {1e-5, 1e-3},
                             double xt_lo = -3.0, double xt_hi = 3.0, double yt_hi = 3.0);

struct CorrespondenceResult {
  int samples = 0;
  int accepted = 0;       // both normalized magnitudes above tol
  int coherent = 0;       // accepted samples whose product sign matches the first one
  bool sign_constant = false;
  double min_joyce = 0.0;    // smallest accepted normalized |joyce det|
  double min_cleared = 0.0;  // smallest accepted normalized |cleared det|
};

// Evaluates the joyce determinant and the cleared transversality
// determinant on the same n x n grid and checks that they vanish and change
// sign together: every accepted sample must carry the same relative sign.
CorrespondenceResult correspondence_check(const CombinatorialData& s, const ConformalData& r,
                                          int n, double tol = 1e-9, double xt_lo = -3.0,
                                          double xt_hi = 3.0, double yt_hi = 3.0);

}  // namespace qq
