#pragma once

// The explicit rational curve in the product coordinates, the torus-valued
// meromorphic function carrying the point reflection z -> -z, its
// pushforward along the edge map, the classification certificate, and the
// invariant-monomial count behind deformability.

#include <array>
#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "quatquot/quaternion.hpp"
#include "quatquot/toric.hpp"

namespace qq {

// Curve point at affine parameter z: slot j carries (1 - conj(z_j) z, z_j + z).
UPoint line_point(const ConformalData& r, cplx z);

// Direction reached as the parameter goes to infinity: slot j carries
// (-conj(z_j), 1).
UPoint line_point_infinity(const ConformalData& r);

// Componentwise (z + z_j)/(z - z_j), one factor per slot; defined up to one
// global sign.  Throws within guard of the excluded parameters +-z_j.
std::vector<cplx> torus_value(const ConformalData& r, cplx z, double guard = 1e-12);

// Projective residual between the torus_value-translate of the curve point
// at z and the curve point at -z; zero in exact arithmetic.
double involution_residual(const ConformalData& r, cplx z);

struct RealStructureCheck {
  double antipodal_residual = 0.0;  // image vs curve point at -1/conj(z)
  double inverse_residual = 0.0;    // image vs curve point at  1/conj(z)
  bool antipodal_holds = false;
  bool inverse_holds = false;
};

// Applies the second structure slotwise to the curve point at z and reads
// back which affine parameter the image realizes.  Throws for z too close
// to zero (both candidate parameters blow up).
RealStructureCheck real_structure_check(const ConformalData& r, cplx z);

// Component m is prod_j base_j^{(v_j)_m} with base_j = (z + z_j)/(z - z_j);
// integer exponents accumulated as separate numerator and denominator
// products.  Throws at poles and zeros.
std::array<cplx, 2> descended_value(const CombinatorialData& s, const ConformalData& r, cplx z);

// Relative gap between descended_value and the exponent-pushforward of
// torus_value, evaluated along two independent floating point paths.
double pushforward_residual(const CombinatorialData& s, const ConformalData& r, cplx z);

struct ClassificationReport {
  std::vector<LatticeVec> v;
  std::vector<cplx> z;
  std::vector<cplx> zeta;  // squares of the marked points
  bool convex = false;
  bool ordering_ok = false;
  bool round_trip_ok = false;
  std::string real_structure;  // "antipodal", "inverse-conjugate", or "neither"
  double max_involution_residual = 0.0;
  double max_pushforward_residual = 0.0;
  std::string warning;
};

// Certifies the meromorphic data pinning the quotient: the exponent list,
// the marked points with their squares, the real-structure form (measured,
// not assumed), the reflection identity, and the pushforward match, swept
// over a fixed deterministic parameter set off the unit circle.
ClassificationReport classification_report(const CombinatorialData& s, const ConformalData& r);

struct DeformabilityReport {
  int tk_invariant_dim = 0;                           // always k: the diagonal monomials
  std::vector<std::vector<long long>> extra_weights;  // canonical representatives
  int extra_dim = 0;                                  // two real dimensions per weight
};

// Quadratic slot monomials carry torus weights e_a + e_b (a <= b) and
// e_a - e_b (a < b) together with their negatives; a monomial survives the
// subtorus quotient iff its weight annihilates every kernel row.  Nonzero
// surviving weights pair up under the reality involution, two real
// dimensions each; weight zero gives the k diagonal invariants.
DeformabilityReport deformability(const DerivedData& t);

}  // namespace qq
