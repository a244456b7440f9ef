#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "quatquot/toric.hpp"

using namespace qq;
using namespace qqtest;

TEST_CASE("validation accepts the fixtures") {
  for (const CombinatorialData& s : {k3_s(), k4_s(), k5_s(), nonconvex_s()}) {
    const SValidation v = validate_s(s);
    CHECK(v.ok());
    CHECK(v.sublattice_index == 1);
    CHECK(v.issues.empty());
  }
  for (const ConformalData& r : {k3_r(), k4_r(), k5_r()}) {
    CHECK(validate_r(r).ok);
  }
}

TEST_CASE("validation rejects malformed data") {
  CHECK_THROWS_AS(validate_s(CombinatorialData{{{1, 0}}}), std::invalid_argument);
  CHECK_THROWS_AS(validate_s(CombinatorialData{{{1, 0}, {0, 0}, {0, 1}}}), std::invalid_argument);

  const SValidation bad_sector = validate_s(CombinatorialData{{{1, 0}, {0, -1}, {-1, 1}}});
  CHECK_FALSE(bad_sector.sector_normalized);
  CHECK_FALSE(bad_sector.ok());

  const SValidation parallel = validate_s(CombinatorialData{{{1, 0}, {2, 0}, {0, 1}}});
  CHECK_FALSE(parallel.consecutive_independent);

  const SValidation sub = validate_s(CombinatorialData{{{2, 0}, {0, 2}, {-2, 2}}});
  CHECK(sub.sector_normalized);
  CHECK(sub.consecutive_independent);
  CHECK_FALSE(sub.generates_lattice);
  CHECK(sub.sublattice_index == 4);

  RValidation nonzero_start = validate_r(ConformalData{{0.1, 0.5, 1.0}});
  CHECK_FALSE(nonzero_start.ok);
  RValidation not_increasing = validate_r(ConformalData{{0.0, 1.0, 0.5}});
  CHECK_FALSE(not_increasing.ok);
  RValidation repeated = validate_r(ConformalData{{0.0, 0.7, 0.7}});
  CHECK_FALSE(repeated.ok);
  RValidation too_large = validate_r(ConformalData{{0.0, 1.0, 3.2}});
  CHECK_FALSE(too_large.ok);
}

TEST_CASE("derive and recover are mutually inverse") {
  const DerivedData t3 = derive(k3_s());
  CHECK(t3.v == std::vector<LatticeVec>{{0, 1}, {-1, 1}, {-1, 0}});

  std::mt19937_64 g(21);
  for (int trial = 0; trial < 200; ++trial) {
    const CombinatorialData s = random_valid_s(g);
    const DerivedData t = derive(s);
    // The differences telescope to twice the last normal.
    LatticeVec sum{0, 0};
    for (const LatticeVec& v : t.v) sum = sum + v;
    CHECK(sum == LatticeVec{2 * s.u.back().a, 2 * s.u.back().b});
    CHECK(recover(t).u == s.u);
  }
}

TEST_CASE("recover rejects non-integral half sums") {
  DerivedData t;
  t.v = {{1, 0}, {0, 1}, {0, 2}};  // odd total, so u_k is not integral
  CHECK_THROWS_AS(recover(t), std::invalid_argument);
}

TEST_CASE("convexity is monotone sector order") {
  CHECK(is_convex(k3_s()));
  CHECK(is_convex(k4_s()));
  CHECK(is_convex(k5_s()));
  CHECK_FALSE(is_convex(nonconvex_s()));
  CHECK(is_convex(CombinatorialData{{{2, 0}, {0, 2}, {-2, 2}}}));

  // Convexity forces the doubled normal sequence to wind exactly once; the
  // converse fails (negative turns can cancel), so the winding is only
  // checked in the forward direction.
  CHECK(doubled_winding(k3_s()) == 1);
  CHECK(doubled_winding(k4_s()) == 1);
  CHECK(doubled_winding(k5_s()) == 1);

  std::mt19937_64 g(22);
  for (int trial = 0; trial < 100; ++trial) {
    const CombinatorialData s = random_valid_s(g);
    CHECK(is_convex(s));
    CHECK(doubled_winding(s) == 1);
  }
}

TEST_CASE("convexity is invariant under plane lattice isomorphisms") {
  std::mt19937_64 g(23);
  for (int trial = 0; trial < 100; ++trial) {
    const CombinatorialData s = random_valid_s(g);
    // Random unimodular map, possibly orientation reversing.
    long long m[4] = {1, 0, 0, 1};
    for (int step = 0; step < 6; ++step) {
      const long long c = static_cast<long long>(g() % 5) - 2;
      if (g() % 2 == 0) {
        m[0] += c * m[2];
        m[1] += c * m[3];
      } else {
        m[2] += c * m[0];
        m[3] += c * m[1];
      }
    }
    if (g() % 2 == 0) {
      std::swap(m[0], m[2]);
      std::swap(m[1], m[3]);
    }
    std::vector<LatticeVec> img;
    for (const LatticeVec& u : s.u) {
      img.push_back({m[0] * u.a + m[1] * u.b, m[2] * u.a + m[3] * u.b});
    }
    const CombinatorialData back = sector_normalize(img);
    CHECK(is_convex(back) == is_convex(s));
    // The normalized image equals the original up to the cyclic start when
    // the map preserves orientation and up to reversal otherwise, so the
    // doubled winding agrees as well.
    CHECK(doubled_winding(back) == doubled_winding(s));
  }
}

TEST_CASE("sector normalization restores monotone order for mirrored data") {
  // Mirroring the convex k3 fixture across the first axis produces, slot by
  // slot, the vectors of the nonconvex fixture; the compensating reversal in
  // the normal form keeps the mirror image convex.
  std::vector<LatticeVec> mirrored;
  for (const LatticeVec& u : k3_s().u) mirrored.push_back({u.a, -u.b});
  const CombinatorialData n = sector_normalize(mirrored);
  CHECK(n.u == std::vector<LatticeVec>{{1, 0}, {1, 1}, {0, 1}});
  CHECK(is_convex(n));

  // The nonconvex fixture read as a plain list (no reversal) really is a
  // different configuration: its listed order is not monotone.
  CHECK_FALSE(is_convex(nonconvex_s()));

  // A list that is monotone in neither orientation stays nonconvex.
  const CombinatorialData scrambled =
      sector_normalize({{1, 0}, {1, 2}, {1, 1}, {1, 3}});
  CHECK_FALSE(is_convex(scrambled));
}

TEST_CASE("betti number and normals matrix") {
  CHECK(b2(k3_s()) == 1);
  CHECK(b2(k5_s()) == 3);
  const IMat nm = normals_matrix(k4_s());
  CHECK(nm.rows() == 2);
  CHECK(nm.cols() == 4);
  CHECK(nm(0, 1) == 2);
  CHECK(nm(1, 3) == 2);
}

TEST_CASE("angle derived values") {
  const ConformalData r = k3_r();
  const std::vector<cplx> z = r.z();
  const std::vector<cplx> zeta = r.zeta();
  CHECK(std::abs(z[1] - cplx(std::sqrt(0.5), std::sqrt(0.5))) < 1e-15);
  CHECK(std::abs(zeta[0] - cplx(1, 0)) < 1e-15);
  CHECK(std::abs(zeta[1] - cplx(0, 1)) < 1e-15);
  CHECK(std::abs(zeta[2] - cplx(-1, 0)) < 1e-15);
}
