#pragma once

// Slot twistor functions nu_m, the plane W spanned by the angle vectors
// Re(z), Im(z), the moment map obtained by pairing nu with an orthonormal
// annihilator of W, and the transversality certificates on its zero level.

#include <vector>

#include <Eigen/Dense>

#include "quatquot/quaternion.hpp"
#include "quatquot/toric.hpp"

namespace qq {

struct MomentSetup {
  Eigen::VectorXd re_z;         // (cos theta_i)
  Eigen::VectorXd im_z;         // (sin theta_i)
  Eigen::MatrixXd annihilator;  // (k-2) x k, orthonormal rows orthogonal to re_z and im_z
  IMat kernel;                  // (k-2) x k integer rows spanning the action subtorus

  int k() const { return static_cast<int>(re_z.size()); }
};

// Assembles the annihilator by Gram-Schmidt over e_1, ..., e_k against the
// normalized span of re_z, im_z (deterministic) and the integer kernel of
// the edge-difference map.  Throws when re_z, im_z are dependent.
MomentSetup build_setup(const CombinatorialData& s, const ConformalData& r);

// Row m is nu_m(q_m) = (|x|^2 - |y|^2, Re(2ixy), Im(2ixy)).
Eigen::MatrixXd nu(const UPoint& p);

// (k-2) x 3, row r = sum_i annihilator(r,i) nu_i(p).
Eigen::MatrixXd moment_map(const UPoint& p, const MomentSetup& spec);

// Exact differential; row 3r + a is the gradient of component (r, axis a+1)
// in the packed 4k real coordinates.
Eigen::MatrixXd moment_jacobian(const UPoint& p, const MomentSetup& spec);

// Gradient of nu axis component (1, 2, or 3) for one slot, as a function of
// the packed slot coordinates (re x, im x, re y, im y).
Eigen::Vector4d nu_gradient(int axis, const ComplexSplit& q);

// Applies the structure map that carries the axis-a gradient of any moment
// component onto twice the corresponding action field; axes 2 and 3 take a
// sign flip relative to the raw structure so that all three agree.
Eigen::VectorXd raised_gradient(int axis, const Eigen::VectorXd& grad);

// max over components r and axis pairs (a,b) of
// | raised_gradient(a, grad mu_{r,a}) - raised_gradient(b, grad mu_{r,b}) |.
// Identically zero in exact arithmetic.
double holomorphicity_residual(const UPoint& p, const MomentSetup& spec);

// p != 0 and |moment_map(p)| below tol * sum |q_i|^2.
bool on_zero_level(const UPoint& p, const MomentSetup& spec, double tol = 1e-9);

// Independent zero-level test: max residual of the columns of nu(p) after
// projection onto span{re_z, im_z}, relative to the same quadratic scale.
double plane_membership_residual(const UPoint& p, const MomentSetup& spec);

// Section through the slot targets nu_i = Re(z_i) xdir + Im(z_i) ydir,
// choosing each x_i real nonnegative.  Slots whose target vanishes are set
// to zero and recorded.
UPoint section_point(const ConformalData& r, const Eigen::Vector3d& xdir,
                     const Eigen::Vector3d& ydir,
                     std::vector<int>* degenerate_slots = nullptr);

// Orbit-space section: section_point with xdir = (1,0,0), ydir = (-xt, yt, 0).
UPoint orbit_point(const ConformalData& r, double xt, double yt,
                   std::vector<int>* degenerate_slots = nullptr);

struct ClearedDet {
  double value = 0.0;  // sum_{i<j} (f_i ^ f_j)(v_i ^ v_j) prod_{l != i,j} |q_l|^2
  double scale = 0.0;  // sum of absolute summands, for scale-free thresholds
};

// Polynomial (denominator-cleared) form of the transversality determinant
// with f_i = (cos theta_i, sin theta_i).  Throws when two or more slots
// vanish, where the cleared form is identically zero.
ClearedDet transversality_cleared(const UPoint& p, const DerivedData& t, const ConformalData& r);

// (k-2) x (k-2) pairing of the action fields of the kernel rows against the
// action fields of the annihilator rows; nonsingular iff transversal.
Eigen::MatrixXd transversality_bilinear(const UPoint& p, const MomentSetup& spec);

struct ScanResult {
  int samples = 0;
  int sign_changes = 0;
  double min_abs_det = 0.0;  // min over grid of |value| / scale
  std::vector<double> xt, yt, det;  // row-major grid triples
};

// Evaluates the cleared determinant on an n x n grid over the orbit strip
// xt in [xt_lo, xt_hi], yt in (0, yt_hi]; parallel over rows, deterministic.
ScanResult scan_transversality(const CombinatorialData& s, const ConformalData& r, int n,
                               double xt_lo = -3.0, double xt_hi = 3.0, double yt_hi = 3.0);

}  // namespace qq
