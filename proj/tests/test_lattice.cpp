#include <doctest.h>

#include <random>

#include "quatquot/lattice.hpp"

using namespace qq;

namespace {

IMat mat(int rows, int cols, std::initializer_list<long long> vals) {
  IMat m(rows, cols);
  int i = 0;
  for (long long v : vals) {
    m(i / cols, i % cols) = v;
    ++i;
  }
  return m;
}

IMat random_unimodular(std::mt19937_64& g, int n) {
  IMat u = IMat::Identity(n, n);
  for (int step = 0; step < 3 * n; ++step) {
    const int i = static_cast<int>(g() % static_cast<unsigned>(n));
    const int j = static_cast<int>(g() % static_cast<unsigned>(n));
    if (i == j) continue;
    const long long c = static_cast<long long>(g() % 5) - 2;
    u.row(i) += c * u.row(j);
  }
  return u;
}

}  // namespace

TEST_CASE("gcd helper") {
  CHECK(gcd_ll(0, 0) == 0);
  CHECK(gcd_ll(0, 7) == 7);
  CHECK(gcd_ll(-12, 18) == 6);
  CHECK(gcd_ll(35, -14) == 7);
}

TEST_CASE("hermite form canonicalizes row spans") {
  const IMat a = mat(2, 3, {1, 0, -1, 0, 1, 1});
  const IMat h = hermite_normal_form(a);
  CHECK(h.rows() == 2);
  CHECK(h == a);  // already reduced

  std::mt19937_64 g(11);
  for (int trial = 0; trial < 50; ++trial) {
    IMat m(3, 4);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 4; ++j) m(i, j) = static_cast<long long>(g() % 9) - 4;
    const IMat u = random_unimodular(g, 3);
    CHECK(same_row_lattice(m, u * m));
  }
}

TEST_CASE("smith invariants of small matrices") {
  CHECK(smith_invariants(mat(2, 2, {1, 0, 0, 1})) == std::vector<long long>{1, 1});
  CHECK(smith_invariants(mat(2, 2, {2, 0, 0, 4})) == std::vector<long long>{2, 4});
  CHECK(smith_invariants(mat(2, 2, {4, 0, 0, 6})) == std::vector<long long>{2, 12});
  CHECK(smith_invariants(mat(2, 2, {0, 0, 0, 0})).empty());
  // Divisibility order is enforced even when the diagonal arrives reversed.
  CHECK(smith_invariants(mat(2, 2, {6, 0, 0, 4})) == std::vector<long long>{2, 12});
}

TEST_CASE("smith terminates on wide unit-pivot matrices") {
  // Regression: the 2 x 3 normal matrix of the smallest fixture used to
  // cycle forever in the row/column clearing loop.
  const IMat a = mat(2, 3, {1, 0, -1, 0, 1, 1});
  CHECK(smith_invariants(a) == std::vector<long long>{1, 1});
  CHECK(lattice_index(a, 2) == 1);
}

TEST_CASE("smith invariants are equivalence invariants") {
  std::mt19937_64 g(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int rows = 2 + static_cast<int>(g() % 2);
    const int cols = rows + static_cast<int>(g() % 3);
    IMat m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(i, j) = static_cast<long long>(g() % 11) - 5;
    const std::vector<long long> d = smith_invariants(m);
    for (std::size_t i = 0; i + 1 < d.size(); ++i) CHECK(d[i + 1] % d[i] == 0);
    const IMat u = random_unimodular(g, rows);
    const IMat v = random_unimodular(g, cols);
    CHECK(smith_invariants(u * m * v) == d);
  }
}

TEST_CASE("square smith product equals absolute determinant") {
  std::mt19937_64 g(13);
  for (int trial = 0; trial < 60; ++trial) {
    IMat m(2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m(i, j) = static_cast<long long>(g() % 13) - 6;
    const long long det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    long long prod = 1;
    for (long long x : smith_invariants(m)) prod *= x;
    if (det == 0) {
      CHECK(smith_invariants(m).size() < 2);
    } else {
      CHECK(prod == std::llabs(det));
    }
  }
}

TEST_CASE("integer kernel is a saturated annihilator") {
  std::mt19937_64 g(5);
  for (int trial = 0; trial < 40; ++trial) {
    const int cols = 4 + static_cast<int>(g() % 3);
    IMat a(2, cols);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < cols; ++j) a(i, j) = static_cast<long long>(g() % 9) - 4;
    const IMat ker = integer_kernel(a);
    const IMat prod = a * ker.transpose();
    CHECK(prod.cwiseAbs().maxCoeff() == 0);
    const std::vector<long long> rank_a = smith_invariants(a);
    CHECK(ker.rows() == cols - static_cast<int>(rank_a.size()));
    if (ker.rows() > 0) {
      // Saturation: the kernel lattice is primitive, all invariants 1.
      for (long long d : smith_invariants(ker)) CHECK(d == 1);
    }
  }
}

TEST_CASE("lattice index counts the quotient") {
  CHECK(lattice_index(mat(2, 3, {2, 0, -2, 0, 2, 2}), 2) == 4);
  CHECK(lattice_index(mat(2, 2, {1, 1, 0, 3}), 2) == 3);
  CHECK(lattice_index(mat(2, 2, {1, 1, 2, 2}), 2) == 0);  // rank deficient
}
