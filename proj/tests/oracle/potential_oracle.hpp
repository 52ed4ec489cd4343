#pragma once

// Quartic potentials written monomial by monomial from their index formulas,
// evaluated on occupation states through the ladder-expansion oracle.

#include <functional>
#include <string>
#include <vector>

#include "monomial_oracle.hpp"

namespace oracle {

struct OracleParams {
  int d = 2;
  int n_max = 4;
  double beta = 1.0;
  double big_m = 1.0;   // tensor mass M
  double omega = 1.0;
  double omega_t = 1.0; // tensor frequency used for the canonical tensor pairs
  double small_m() const { return big_m / (beta * beta); }
};

struct Monomial {
  double coeff = 0.0;
  std::vector<Factor> factors;
};

class MonomialBuilder {
 public:
  explicit MonomialBuilder(const OracleParams& p) : p_(p) {}

  // Occupation-vector position of tensor mode (i<j).
  int tensor_mode(int i, int j) const {
    int pos = p_.d;
    for (int a = 1; a < i; ++a) pos += p_.d - a;
    return pos + (j - i - 1);
  }

  // Canonical factors; `ok` is false for the vanishing diagonal tensor entries.
  Factor xv(int i) const { return {i - 1, false, p_.small_m(), p_.omega, 1.0}; }
  Factor pv(int i) const { return {i - 1, true, p_.small_m(), p_.omega, 1.0}; }
  Factor xt(int i, int j) const { return tensor(i, j, false); }
  Factor pt(int i, int j) const { return tensor(i, j, true); }
  static bool vanishes(const Factor& f) { return f.scale == 0.0; }

  // Unified coordinates over 1..D+1 with X(i, D+1) = x_i / beta, P(i, D+1) = beta p_i.
  Factor ux(int mu, int nu) const { return unified(mu, nu, false); }
  Factor up(int mu, int nu) const { return unified(mu, nu, true); }

  void add(std::vector<Monomial>& out, double coeff, std::vector<Factor> factors) const {
    for (const auto& f : factors)
      if (vanishes(f)) return;
    out.push_back({coeff, std::move(factors)});
  }

 private:
  Factor tensor(int i, int j, bool momentum) const {
    if (i == j) return {0, momentum, 1.0, 1.0, 0.0};
    const double sign = i < j ? 1.0 : -1.0;
    const int mode = i < j ? tensor_mode(i, j) : tensor_mode(j, i);
    return {mode, momentum, p_.big_m, p_.omega_t, sign};
  }
  Factor unified(int mu, int nu, bool momentum) const {
    const int top = p_.d + 1;
    if (mu == nu) return {0, momentum, 1.0, 1.0, 0.0};
    if (mu != top && nu != top) return tensor(mu, nu, momentum);
    const int i = mu == top ? nu : mu;
    const double sign = mu == top ? -1.0 : 1.0;
    Factor f = momentum ? pv(i) : xv(i);
    f.scale = sign * (momentum ? p_.beta : 1.0 / p_.beta);
    return f;
  }

  OracleParams p_;
};

// (M w^2/8) sum X_mr P_nr (X_ms P_ns - X_ns P_ms) over unified indices.
inline std::vector<Monomial> covariant_monomials(const OracleParams& p) {
  MonomialBuilder b(p);
  std::vector<Monomial> out;
  const int top = p.d + 1;
  const double c = p.big_m * p.omega * p.omega / 8.0;
  for (int mu = 1; mu <= top; ++mu)
    for (int nu = 1; nu <= top; ++nu)
      for (int r = 1; r <= top; ++r)
        for (int s = 1; s <= top; ++s) {
          b.add(out, c, {b.ux(mu, r), b.up(nu, r), b.ux(mu, s), b.up(nu, s)});
          b.add(out, -c, {b.ux(mu, r), b.up(nu, r), b.ux(nu, s), b.up(mu, s)});
        }
  return out;
}

// The Omega-weighted group: sum x_i p_j (x_i p_j - x_j p_i) + sum x_ik p_jk (x_ih p_jh - x_jh p_ih)
// + cross * sum x_i p_j (x_ik p_jk - x_jk p_ik), with the vector-vector group scaled by `vv`.
inline void add_rotation_square(const MonomialBuilder& b, int d, double c, double vv, double cross,
                                std::vector<Monomial>& out) {
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j) {
      b.add(out, c * vv, {b.xv(i), b.pv(j), b.xv(i), b.pv(j)});
      b.add(out, -c * vv, {b.xv(i), b.pv(j), b.xv(j), b.pv(i)});
      for (int k = 1; k <= d; ++k) {
        b.add(out, c * cross, {b.xv(i), b.pv(j), b.xt(i, k), b.pt(j, k)});
        b.add(out, -c * cross, {b.xv(i), b.pv(j), b.xt(j, k), b.pt(i, k)});
        for (int h = 1; h <= d; ++h) {
          b.add(out, c, {b.xt(i, k), b.pt(j, k), b.xt(i, h), b.pt(j, h)});
          b.add(out, -c, {b.xt(i, k), b.pt(j, k), b.xt(j, h), b.pt(i, h)});
        }
      }
    }
}

// sum_ijk (beta^2 x_ij p_j x_ik p_k + beta^-2 x_j p_ij x_k p_ik - x_i p_j p_ik x_jk - p_i x_j x_ik p_jk)
inline void add_mixed(const MonomialBuilder& b, const OracleParams& p, double c, std::vector<Monomial>& out) {
  const double b2 = p.beta * p.beta;
  for (int i = 1; i <= p.d; ++i)
    for (int j = 1; j <= p.d; ++j)
      for (int k = 1; k <= p.d; ++k) {
        b.add(out, c * b2, {b.xt(i, j), b.pv(j), b.xt(i, k), b.pv(k)});
        b.add(out, c / b2, {b.xv(j), b.pt(i, j), b.xv(k), b.pt(i, k)});
        b.add(out, -c, {b.xv(i), b.pv(j), b.pt(i, k), b.xt(j, k)});
        b.add(out, -c, {b.pv(i), b.xv(j), b.xt(i, k), b.pt(j, k)});
      }
}

inline std::vector<Monomial> two_frequency_weyl_monomials(const OracleParams& p) {
  MonomialBuilder b(p);
  std::vector<Monomial> out;
  add_mixed(b, p, p.big_m * p.omega * p.omega / 8.0, out);
  add_rotation_square(b, p.d, p.big_m * p.omega_t * p.omega_t / 8.0, 1.0, 2.0, out);
  return out;
}

inline std::vector<Monomial> classical_monomials(const OracleParams& p) {
  MonomialBuilder b(p);
  std::vector<Monomial> out;
  const double c = p.big_m * p.omega * p.omega / 8.0 * p.beta * p.beta;
  for (int i = 1; i <= p.d; ++i)
    for (int j = 1; j <= p.d; ++j)
      for (int k = 1; k <= p.d; ++k) b.add(out, c, {b.xt(i, j), b.pv(j), b.xt(i, k), b.pv(k)});
  add_rotation_square(b, p.d, p.big_m * p.omega_t * p.omega_t / 8.0, 4.0, 4.0, out);
  return out;
}

inline std::vector<Monomial> moyal_monomials(const OracleParams& p) {
  MonomialBuilder b(p);
  std::vector<Monomial> out;
  const double c = p.small_m() * p.omega * p.omega / 8.0;
  for (int i = 1; i <= p.d; ++i)
    for (int j = 1; j <= p.d; ++j)
      for (int k = 1; k <= p.d; ++k) b.add(out, c, {b.xt(i, j), b.pv(j), b.xt(i, k), b.pv(k)});
  return out;
}

// Re <n|V|n>, the diagonal of (V + V^dagger)/2.
inline double diagonal(const std::vector<Monomial>& monomials, const std::vector<int>& occ, int n_max) {
  double sum = 0.0;
  for (const auto& m : monomials) sum += m.coeff * diagonal_element(occ, m.factors, n_max).real();
  return sum;
}

}  // namespace oracle
