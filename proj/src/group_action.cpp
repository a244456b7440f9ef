#include "quatquot/group_action.hpp"

#include <stdexcept>

namespace qq {

IMat build_omega(const DerivedData& t) {
  IMat m(2, t.k());
  for (int i = 0; i < t.k(); ++i) {
    m(0, i) = t.v[i].a;
    m(1, i) = t.v[i].b;
  }
  return m;
}

IMat kernel_basis(const IMat& omega) {
  const int k = static_cast<int>(omega.cols());
  IMat d = integer_kernel(omega);
  if (d.rows() != k - 2) throw std::invalid_argument("difference map must have rank 2");
  return d;
}

bool quotient_is_f(const CombinatorialData& s) {
  DerivedData t = derive(s);
  const int k = s.k();
  // Generator images: (e_1 + ... + e_k)/2 -> (v_1 + ... + v_k)/2 = u_k,
  // e_i -> v_i for i >= 2.
  IMat rows(k, 2);
  rows(0, 0) = s.u[k - 1].a;
  rows(0, 1) = s.u[k - 1].b;
  for (int i = 1; i < k; ++i) {
    rows(i, 0) = t.v[i].a;
    rows(i, 1) = t.v[i].b;
  }
  return lattice_index(rows, 2) == 1;
}

LocallyFreeReport locally_free_screen(const DerivedData& t, int bound) {
  const int k = t.k();
  if (k < 3) throw std::invalid_argument("need at least three difference vectors");
  LocallyFreeReport rep;

  // Doubled normals 2u_i from the prefix sums; always integral.
  LatticeVec total{0, 0};
  for (const auto& v : t.v) total = total + v;
  std::vector<LatticeVec> w(k + 1);  // w[i] = 2 u_i, w[0] = -2 u_k
  {
    LatticeVec prefix{0, 0};
    for (int i = 1; i <= k; ++i) {
      prefix = prefix + t.v[i - 1];
      w[i] = prefix + prefix - total;
    }
    w[0] = -w[k];
  }

  for (int m = 1; m <= k; ++m) {
    if (cross(w[m - 1], w[m]) == 0) rep.dependent_positions.push_back(m);
  }

  for (int m = 1; m <= k; ++m) {
    // Pattern membership reduces to d1 * s + d_m * v_m = 0 with
    // s = sum_{i<m} v_i - sum_{i>m} v_i.
    LatticeVec s{0, 0};
    for (int i = 1; i < m; ++i) s = s + t.v[i - 1];
    for (int i = m + 1; i <= k; ++i) s = s - t.v[i - 1];
    const LatticeVec& vm = t.v[m - 1];

    for (long long d1 = 1; d1 <= bound; ++d1) {
      long long dm = 0;
      bool match = false;
      if (vm.is_zero()) {
        match = s.is_zero();  // then every d_m works; record the 0 representative
      } else {
        if (cross(s, vm) != 0) break;  // not parallel for any d1
        long long num, den;
        if (vm.a != 0) {
          num = -d1 * s.a;
          den = vm.a;
        } else {
          num = -d1 * s.b;
          den = vm.b;
        }
        if (num % den != 0) continue;
        dm = num / den;
        match = (d1 * s.a + dm * vm.a == 0) && (d1 * s.b + dm * vm.b == 0);
      }
      if (!match) continue;

      // A pattern member fixes a circle exactly when the doubled relation
      // (d1 - d_m) w_{m-1} + (d1 + d_m) w_m = 0 holds.
      LatticeVec rel{(d1 - dm) * w[m - 1].a + (d1 + dm) * w[m].a,
                     (d1 - dm) * w[m - 1].b + (d1 + dm) * w[m].b};
      if (!rel.is_zero()) continue;

      PatternWitness wit;
      wit.m = m;
      wit.d.assign(k, 0);
      for (int i = 0; i < k; ++i) {
        if (i + 1 < m)
          wit.d[i] = d1;
        else if (i + 1 == m)
          wit.d[i] = dm;
        else
          wit.d[i] = -d1;
      }
      rep.witnesses.push_back(std::move(wit));
    }
  }

  rep.locally_free = rep.witnesses.empty();
  return rep;
}

UPoint complex_torus_act(const std::vector<std::complex<double>>& lambda, const UPoint& p) {
  if (static_cast<int>(lambda.size()) != p.slots())
    throw std::invalid_argument("factor count must match slot count");
  UPoint out = p;
  for (int i = 0; i < p.slots(); ++i) {
    if (lambda[i] == std::complex<double>(0.0, 0.0))
      throw std::invalid_argument("torus factor must be nonzero");
    out.c[i].x = lambda[i] * p.c[i].x;
    out.c[i].y = p.c[i].y / lambda[i];
  }
  return out;
}

UPoint torus_act(const Eigen::VectorXd& phi, const UPoint& p) {
  std::vector<std::complex<double>> lambda(phi.size());
  for (int i = 0; i < phi.size(); ++i) lambda[i] = std::polar(1.0, phi[i]);
  return complex_torus_act(lambda, p);
}

Eigen::VectorXd infinitesimal(const Eigen::VectorXd& d, const UPoint& p) {
  if (d.size() != p.slots()) throw std::invalid_argument("direction size must match slot count");
  Eigen::VectorXd out(4 * p.slots());
  for (int i = 0; i < p.slots(); ++i) {
    const std::complex<double> dx = std::complex<double>(0.0, d[i]) * p.c[i].x;
    const std::complex<double> dy = std::complex<double>(0.0, -d[i]) * p.c[i].y;
    out[4 * i + 0] = dx.real();
    out[4 * i + 1] = dx.imag();
    out[4 * i + 2] = dy.real();
    out[4 * i + 3] = dy.imag();
  }
  return out;
}

Eigen::MatrixXd infinitesimal_columns(const Eigen::MatrixXd& dirs, const UPoint& p) {
  Eigen::MatrixXd out(4 * p.slots(), dirs.rows());
  for (int r = 0; r < dirs.rows(); ++r) out.col(r) = infinitesimal(dirs.row(r), p);
  return out;
}

Eigen::MatrixXd infinitesimal_columns(const IMat& dirs, const UPoint& p) {
  return infinitesimal_columns(dirs.cast<double>().eval(), p);
}

}  // namespace qq
