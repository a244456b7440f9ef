#pragma once

// Descent of the three complex structures to the 4-dimensional quotient of
// the moment zero level by the subtorus and fiber directions, the conformal
// class they span, the distinguished complex structure from the first slot,
// and probes of the torus-fixed strata.

#include <vector>

#include <Eigen/Dense>

#include "quatquot/moment.hpp"
#include "quatquot/quaternion.hpp"
#include "quatquot/toric.hpp"

namespace qq {

// Columns: the subtorus fields X(d_r) for the kernel rows, then the four
// fiber directions p, I1 p, I2 p, I3 p.  4k x (k+2).
Eigen::MatrixXd vertical_space(const UPoint& p, const IMat& kernel);

// Smallest over largest singular value of the combined matrix
// [X(e_1) .. X(e_k) | p | I1 p | I2 p | I3 p]; vanishes exactly at points
// whose combined torus-and-fiber action has a stabilizer (a zero slot, or a
// slot pattern aligning some I_a p with a torus field).
double stabilizer_margin(const UPoint& p);

struct DescendedFrame {
  UPoint p;
  Eigen::MatrixXd basis;  // 4k x 4, orthonormal, orthogonal to the vertical space
  Eigen::Matrix4d i1, i2, i3;
  double relation_residual = 0.0;  // max Frobenius defect of the quaternion relations
  double bilinear_margin = 0.0;    // min/max singular value of the pairing matrix
  double vertical_margin = 0.0;    // min/max singular value of the vertical space
  int kernel_dim = 0;              // numerical dim ker(d moment), expected k+6
};

// Kernel of the moment differential, quotient basis orthogonal to the
// vertical space, and the three structures in quotient coordinates.  Each
// basis class is represented by its corrected lift (the representative
// whose pairings against the annihilator fields vanish), which keeps the
// kernel invariant under the structures; coefficients are read back through
// the orthonormal basis.  Throws std::domain_error when the transversality
// or vertical margin falls below 1e-6, or the kernel dimension is wrong.
DescendedFrame descend_structures(const UPoint& p, const MomentSetup& spec);

// Gram matrix (in quotient coordinates) of the inner product that makes
// {w, I1 w, I2 w, I3 w} orthonormal for the first basis class w, normalized
// to unit leading entry.  Determines the conformal class.
Eigen::Matrix4d conformal_rep(const DescendedFrame& frame);

// Frobenius distance of the two conformal classes after expressing frame a
// in the coordinates of frame b; both Gram matrices are scale-normalized.
// The bases may live at different points when a transport (e.g. the image
// of basis a under a torus flow) is passed for basis_a.
double class_distance(const Eigen::MatrixXd& basis_a, const Eigen::Matrix4d& gram_a,
                      const Eigen::MatrixXd& basis_b, const Eigen::Matrix4d& gram_b);
double class_distance(const DescendedFrame& a, const DescendedFrame& b);

// (a I1 + b I2 + c I3)/|n| for the first-slot value n = (a, b, c) of the
// slot function; squares to -Id when the frame relations hold.  Throws when
// the first slot vanishes.
Eigen::Matrix4d descend_nu1(const UPoint& p, const DescendedFrame& frame);

struct FixedPointProbe {
  UPoint p;
  double mu_norm = 0.0;       // moment map residual at the probe
  double slot_norm_sq = 0.0;  // |q_i|^2 at the probed slot
  double tk_min_sv = 0.0;     // smallest singular value of [X(e_1) .. X(e_k)]
  int degenerate_directions = 0;  // singular values below 1e-8
  bool on_level = false;
};

// Constructs a zero-level point with vanishing slot i (1-based) from the
// section through targets with t_i = 0 and reports the degeneracy of the
// full torus tangent map there.
FixedPointProbe fixed_point_probe(const CombinatorialData& s, const ConformalData& r, int i);

}  // namespace qq
