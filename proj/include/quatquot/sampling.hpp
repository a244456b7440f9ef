#pragma once

// Seeded sampling helpers used by the descend command and the test
// suites.  Draws go through the raw engine so a fixed seed produces the
// same stream on every platform.

#include <random>

#include "quatquot/quaternion.hpp"
#include "quatquot/toric.hpp"

namespace qq {

double uniform01(std::mt19937_64& g);
double uniform_in(std::mt19937_64& g, double lo, double hi);
double gaussian(std::mt19937_64& g);

Quaternion random_unit_quaternion(std::mt19937_64& g);

// Independent gaussian coordinates in every slot.
UPoint random_ambient_point(int k, std::mt19937_64& g);

// Random point of the common zero level: a section point at a random
// planar position, pushed around by random torus and fiber elements.
UPoint random_zero_level_point(const ConformalData& r, std::mt19937_64& g,
                               double xt_lo = -3.0, double xt_hi = 3.0,
                               double yt_hi = 3.0);

}  // namespace qq
