#include "quatquot/quaternion.hpp"

#include <cmath>
#include <stdexcept>

namespace qq {

double Quaternion::norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

Quaternion operator+(const Quaternion& a, const Quaternion& b) {
  return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
}

Quaternion operator-(const Quaternion& a, const Quaternion& b) {
  return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
}

ComplexSplit to_split(const Quaternion& q) { return {cplx(q.w, q.x), cplx(q.y, q.z)}; }

Quaternion from_split(const ComplexSplit& s) {
  return {s.x.real(), s.x.imag(), s.y.real(), s.y.imag()};
}

ComplexSplit left_mul(int axis, const ComplexSplit& s) {
  const cplx i(0.0, 1.0);
  switch (axis) {
    case 1:
      return {i * s.x, i * s.y};
    case 2:
      return {-std::conj(s.y), std::conj(s.x)};
    case 3:
      return {-i * std::conj(s.y), i * std::conj(s.x)};
    default:
      throw std::invalid_argument("structure axis must be 1, 2 or 3");
  }
}

ComplexSplit split_mul(const ComplexSplit& a, const ComplexSplit& b) {
  // (a.x + a.y j)(b.x + b.y j) = (a.x b.x - a.y conj(b.y)) + (a.x b.y + a.y conj(b.x)) j
  return {a.x * b.x - a.y * std::conj(b.y), a.x * b.y + a.y * std::conj(b.x)};
}

double UPoint::norm_sq() const {
  double s = 0;
  for (const auto& q : c) s += q.norm_sq();
  return s;
}

bool UPoint::is_zero() const { return norm_sq() == 0.0; }

namespace {

// argument in [0, pi): strictly positive imaginary part, or real positive.
bool upper_half(const cplx& v) {
  if (v.imag() > 0) return true;
  if (v.imag() < 0) return false;
  return v.real() > 0;
}

}  // namespace

UPoint canonical(const UPoint& p) {
  for (const auto& q : p.c) {
    for (const cplx* e : {&q.x, &q.y}) {
      if (*e != cplx(0.0, 0.0)) {
        if (upper_half(*e)) return p;
        UPoint f = p;
        for (auto& s : f.c) {
          s.x = -s.x;
          s.y = -s.y;
        }
        return f;
      }
    }
  }
  return p;  // zero point
}

bool equal_mod_sign(const UPoint& a, const UPoint& b, double tol) {
  if (a.slots() != b.slots()) return false;
  UPoint ca = canonical(a);
  UPoint cb = canonical(b);
  for (int i = 0; i < ca.slots(); ++i) {
    if (std::abs(ca.c[i].x - cb.c[i].x) > tol) return false;
    if (std::abs(ca.c[i].y - cb.c[i].y) > tol) return false;
  }
  return true;
}

UPoint left_structure(int axis, const UPoint& p) {
  UPoint out = p;
  for (auto& s : out.c) s = left_mul(axis, s);
  return out;
}

UPoint fiber_act(const Quaternion& c, const UPoint& p) {
  if (c.norm() == 0.0) throw std::invalid_argument("fiber element must be nonzero");
  ComplexSplit cs = to_split(c);
  UPoint out = p;
  for (auto& s : out.c) s = split_mul(cs, s);
  return out;
}

Eigen::VectorXd to_vector(const UPoint& p) {
  Eigen::VectorXd v(4 * p.slots());
  for (int i = 0; i < p.slots(); ++i) {
    v[4 * i + 0] = p.c[i].x.real();
    v[4 * i + 1] = p.c[i].x.imag();
    v[4 * i + 2] = p.c[i].y.real();
    v[4 * i + 3] = p.c[i].y.imag();
  }
  return v;
}

UPoint from_vector(const Eigen::VectorXd& v) {
  const int k = static_cast<int>(v.size()) / 4;
  UPoint p;
  p.c.resize(k);
  for (int i = 0; i < k; ++i) {
    p.c[i].x = cplx(v[4 * i + 0], v[4 * i + 1]);
    p.c[i].y = cplx(v[4 * i + 2], v[4 * i + 3]);
  }
  return p;
}

Eigen::VectorXd apply_structure(int axis, const Eigen::VectorXd& v) {
  const int k = static_cast<int>(v.size()) / 4;
  Eigen::VectorXd out(v.size());
  for (int i = 0; i < k; ++i) {
    const double a = v[4 * i + 0], b = v[4 * i + 1], c = v[4 * i + 2], d = v[4 * i + 3];
    switch (axis) {
      case 1:  // (x, y) -> (ix, iy)
        out[4 * i + 0] = -b;
        out[4 * i + 1] = a;
        out[4 * i + 2] = -d;
        out[4 * i + 3] = c;
        break;
      case 2:  // (x, y) -> (-conj y, conj x)
        out[4 * i + 0] = -c;
        out[4 * i + 1] = d;
        out[4 * i + 2] = a;
        out[4 * i + 3] = -b;
        break;
      case 3:  // (x, y) -> (-i conj y, i conj x)
        out[4 * i + 0] = -d;
        out[4 * i + 1] = -c;
        out[4 * i + 2] = b;
        out[4 * i + 3] = a;
        break;
      default:
        throw std::invalid_argument("structure axis must be 1, 2 or 3");
    }
  }
  return out;
}

}  // namespace qq
