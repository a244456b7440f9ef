#pragma once

// Exact integer matrix utilities: Hermite and Smith normal forms, integer
// kernels, sublattice indices.  All arithmetic is over long long; inputs are
// expected to stay far away from overflow (entries and intermediate pivots
// well below 2^31).

#include <Eigen/Dense>
#include <vector>

namespace qq {

using IMat = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;
using IVec = Eigen::Matrix<long long, Eigen::Dynamic, 1>;

// Row-style Hermite normal form.  Zero rows are dropped, pivots are positive,
// pivot columns strictly increase, and entries above each pivot are reduced
// into [0, pivot).  The result is the canonical basis of the row lattice.
IMat hermite_normal_form(const IMat& a);

// Diagonal of the Smith normal form: invariant factors d_1 | d_2 | ...,
// one entry per rank, all positive.
std::vector<long long> smith_invariants(IMat a);

// Basis of the integer kernel {x : a x = 0}, returned as rows in Hermite
// normal form.  The kernel of an integer matrix is automatically saturated
// (primitive): its Smith invariants are all 1.
IMat integer_kernel(const IMat& a);

// Index of the row lattice of a inside Z^n when a has full column rank n,
// i.e. the product of the Smith invariant factors.  Returns 0 when the rank
// is deficient (infinite index).
long long lattice_index(const IMat& a, int n);

// True when the row lattices of a and b coincide.
bool same_row_lattice(const IMat& a, const IMat& b);

long long gcd_ll(long long a, long long b);

}  // namespace qq
