#include "quatquot/lattice.hpp"

#include <cstdlib>
#include <stdexcept>

namespace qq {

long long gcd_ll(long long a, long long b) {
  a = std::llabs(a);
  b = std::llabs(b);
  while (b != 0) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

namespace {

void swap_rows(IMat& m, int i, int j) { m.row(i).swap(m.row(j)); }

// row(i) += c * row(j)
void add_row(IMat& m, int i, int j, long long c) { m.row(i) += c * m.row(j); }

}  // namespace

IMat hermite_normal_form(const IMat& a) {
  IMat h = a;
  const int rows = static_cast<int>(h.rows());
  const int cols = static_cast<int>(h.cols());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    // Find a pivot row for column c.
    int piv = -1;
    for (int i = r; i < rows; ++i) {
      if (h(i, c) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    swap_rows(h, r, piv);
    // Euclidean elimination below the pivot.
    for (int i = r + 1; i < rows; ++i) {
      while (h(i, c) != 0) {
        long long q = h(r, c) / h(i, c);
        add_row(h, r, i, -q);
        swap_rows(h, r, i);
      }
    }
    if (h(r, c) < 0) h.row(r) = -h.row(r);
    // Reduce entries above the pivot into [0, pivot).
    for (int i = 0; i < r; ++i) {
      long long q = h(i, c) / h(r, c);
      if (h(i, c) % h(r, c) < 0) q -= 1;
      if (q != 0) add_row(h, i, r, -q);
    }
    ++r;
  }
  IMat out(r, cols);
  for (int i = 0; i < r; ++i) out.row(i) = h.row(i);
  return out;
}

std::vector<long long> smith_invariants(IMat a) {
  const int rows = static_cast<int>(a.rows());
  const int cols = static_cast<int>(a.cols());
  std::vector<long long> inv;
  int t = 0;
  while (t < rows && t < cols) {
    // Locate a nonzero entry in the remaining block.
    int pi = -1, pj = -1;
    for (int i = t; i < rows && pi < 0; ++i)
      for (int j = t; j < cols; ++j)
        if (a(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;
    a.row(t).swap(a.row(pi));
    a.col(t).swap(a.col(pj));
    // Clear row and column t.  A division leaving a remainder promotes the
    // remainder to the pivot slot, so |a(t,t)| strictly drops on every
    // restart and the loop terminates.
    while (true) {
      bool shrunk = false;
      for (int i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        long long q = a(i, t) / a(t, t);
        a.row(i) -= q * a.row(t);
        if (a(i, t) != 0) {
          a.row(t).swap(a.row(i));
          shrunk = true;
        }
      }
      if (shrunk) continue;
      bool row_clear = true;
      for (int j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        long long q = a(t, j) / a(t, t);
        a.col(j) -= q * a.col(t);
        if (a(t, j) != 0) {
          a.col(t).swap(a.col(j));
          row_clear = false;
          break;
        }
      }
      if (row_clear) break;
    }
    ++t;
  }
  // Diagonal now holds the elementary divisors up to divisibility fixing.
  std::vector<long long> d;
  for (int i = 0; i < t; ++i) d.push_back(std::llabs(a(i, i)));
  // Enforce d_1 | d_2 | ... by pairwise gcd/lcm passes.
  for (bool changed = true; changed;) {
    changed = false;
    for (size_t i = 0; i + 1 < d.size(); ++i) {
      if (d[i + 1] % d[i] != 0) {
        long long g = gcd_ll(d[i], d[i + 1]);
        long long l = d[i] / g * d[i + 1];
        d[i] = g;
        d[i + 1] = l;
        changed = true;
      }
    }
  }
  return d;
}

IMat integer_kernel(const IMat& a) {
  const int n = static_cast<int>(a.cols());
  // Row-reduce [a^T | I]: rows of the identity block that end up opposite
  // zero rows of the reduced a^T form a basis of the kernel of a.
  IMat at = a.transpose();
  IMat u = IMat::Identity(n, n);
  const int rows = n;
  const int cols = static_cast<int>(at.cols());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    at.row(r).swap(at.row(piv));
    u.row(r).swap(u.row(piv));
    for (int i = r + 1; i < rows; ++i) {
      while (at(i, c) != 0) {
        long long q = at(r, c) / at(i, c);
        at.row(r) -= q * at.row(i);
        u.row(r) -= q * u.row(i);
        at.row(r).swap(at.row(i));
        u.row(r).swap(u.row(i));
      }
    }
    ++r;
  }
  IMat ker(rows - r, n);
  for (int i = r; i < rows; ++i) ker.row(i - r) = u.row(i);
  return hermite_normal_form(ker);
}

long long lattice_index(const IMat& a, int n) {
  std::vector<long long> d = smith_invariants(a);
  if (static_cast<int>(d.size()) < n) return 0;
  long long idx = 1;
  for (long long x : d) idx *= x;
  return idx;
}

bool same_row_lattice(const IMat& a, const IMat& b) {
  if (a.cols() != b.cols()) return false;
  IMat ha = hermite_normal_form(a);
  IMat hb = hermite_normal_form(b);
  if (ha.rows() != hb.rows()) return false;
  return ha == hb;
}

}  // namespace qq
