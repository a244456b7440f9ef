#pragma once

// Quaternion algebra in complex-split form.  A quaternion q = x + y j is
// stored as the complex pair (x, y); the ambient product space carries the
// three left-multiplication complex structures
//   I1 (x, y) = (ix, iy)
//   I2 (x, y) = (-conj(y), conj(x))
//   I3 (x, y) = (-i conj(y), i conj(x))
// which satisfy I1 I2 = I3 and I1 I2 I3 = -Id as endomorphisms.
// Points of the sign quotient (q_1, ..., q_k) ~ -(q_1, ..., q_k) are held
// with a canonical global sign.

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace qq {

using cplx = std::complex<double>;

struct Quaternion {
  double w = 0, x = 0, y = 0, z = 0;  // w + x i + y j + z k

  Quaternion() = default;
  Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}

  double norm() const;
  Quaternion conjugate() const { return {w, -x, -y, -z}; }
};

Quaternion operator*(const Quaternion& a, const Quaternion& b);
Quaternion operator+(const Quaternion& a, const Quaternion& b);
Quaternion operator-(const Quaternion& a, const Quaternion& b);

struct ComplexSplit {
  cplx x{0.0, 0.0};
  cplx y{0.0, 0.0};

  ComplexSplit() = default;
  ComplexSplit(cplx x_, cplx y_) : x(x_), y(y_) {}

  double norm_sq() const { return std::norm(x) + std::norm(y); }
};

// q = x + y j  <->  q = w + xi i + yj j + zk k  with x = w + xi i, y = yj + zk i.
ComplexSplit to_split(const Quaternion& q);
Quaternion from_split(const ComplexSplit& s);

// Left multiplication by i, j, k (axis 1, 2, 3) on one coordinate.
ComplexSplit left_mul(int axis, const ComplexSplit& s);

// Quaternion product in split form: (a.x + a.y j)(b.x + b.y j).
ComplexSplit split_mul(const ComplexSplit& a, const ComplexSplit& b);

// A point of the sign quotient of the k-fold product, identified up to one
// global sign across all coordinates.
struct UPoint {
  std::vector<ComplexSplit> c;

  UPoint() = default;
  explicit UPoint(std::vector<ComplexSplit> coords) : c(std::move(coords)) {}

  int slots() const { return static_cast<int>(c.size()); }
  double norm_sq() const;
  bool is_zero() const;
};

// Flips the global sign so that the first nonzero complex entry, scanning
// x_1, y_1, x_2, y_2, ..., has argument in [0, pi).
UPoint canonical(const UPoint& p);

// Equality modulo the global sign, entrywise within tol.
bool equal_mod_sign(const UPoint& a, const UPoint& b, double tol = 1e-12);

// Componentwise left multiplication by the structure with the given axis.
UPoint left_structure(int axis, const UPoint& p);

// Fiber action: left multiplication of every coordinate by c != 0.
UPoint fiber_act(const Quaternion& c, const UPoint& p);

// Real coordinates.  Slot i occupies indices 4i..4i+3 as
// (Re x_i, Im x_i, Re y_i, Im y_i).
Eigen::VectorXd to_vector(const UPoint& p);
UPoint from_vector(const Eigen::VectorXd& v);

// The structure I_axis as a linear map on the real coordinate vector.
Eigen::VectorXd apply_structure(int axis, const Eigen::VectorXd& v);

}  // namespace qq
