#include "quatquot/sampling.hpp"

#include <cmath>

#include "quatquot/group_action.hpp"
#include "quatquot/moment.hpp"

namespace qq {

double uniform01(std::mt19937_64& g) {
  return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

double uniform_in(std::mt19937_64& g, double lo, double hi) {
  return lo + (hi - lo) * uniform01(g);
}

double gaussian(std::mt19937_64& g) {
  double u = uniform01(g);
  while (u == 0.0) {
    u = uniform01(g);
  }
  const double v = uniform01(g);
  return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * M_PI * v);
}

Quaternion random_unit_quaternion(std::mt19937_64& g) {
  while (true) {
    Quaternion q{gaussian(g), gaussian(g), gaussian(g), gaussian(g)};
    const double n = q.norm();
    if (n > 0.1) {
      return Quaternion{q.w / n, q.x / n, q.y / n, q.z / n};
    }
  }
}

UPoint random_ambient_point(int k, std::mt19937_64& g) {
  UPoint p;
  p.c.resize(k);
  for (int i = 0; i < k; ++i) {
    p.c[i].x = {gaussian(g), gaussian(g)};
    p.c[i].y = {gaussian(g), gaussian(g)};
  }
  return p;
}

UPoint random_zero_level_point(const ConformalData& r, std::mt19937_64& g,
                               double xt_lo, double xt_hi, double yt_hi) {
  const double xt = uniform_in(g, xt_lo, xt_hi);
  const double yt = yt_hi * (1.0 - uniform01(g));
  UPoint p = orbit_point(r, xt, yt);
  Eigen::VectorXd phi(r.k());
  for (int i = 0; i < r.k(); ++i) {
    phi[i] = uniform_in(g, 0.0, 2.0 * M_PI);
  }
  p = torus_act(phi, p);
  return fiber_act(random_unit_quaternion(g), p);
}

}  // namespace qq
