#pragma once

// Diagonal matrix elements <n| f_1 f_2 ... f_k |n> of products of canonical
// coordinates and momenta, evaluated by expanding every factor into ladder
// operators and acting on occupation vectors directly. Independent of any
// matrix representation.

#include <cmath>
#include <complex>
#include <map>
#include <vector>

namespace oracle {

using Cplx = std::complex<double>;

struct Factor {
  int mode = 0;         // position in the occupation vector
  bool momentum = false;
  double mass = 1.0;
  double freq = 1.0;
  double scale = 1.0;   // sign of antisymmetric components, unified-index rescaling
};

// State as a sparse superposition of occupation vectors.
using Ket = std::map<std::vector<int>, Cplx>;

inline Ket apply(const Factor& f, const Ket& in, int n_max) {
  // x = (a + a^+)/sqrt(2mw), p = i sqrt(mw/2)(a^+ - a)
  const double mw = f.mass * f.freq;
  const Cplx c_lower = f.momentum ? Cplx(0, -std::sqrt(mw / 2.0)) : Cplx(1.0 / std::sqrt(2.0 * mw), 0);
  const Cplx c_raise = f.momentum ? Cplx(0, std::sqrt(mw / 2.0)) : Cplx(1.0 / std::sqrt(2.0 * mw), 0);
  Ket out;
  for (const auto& [occ, amp] : in) {
    const int n = occ[static_cast<std::size_t>(f.mode)];
    if (n > 0) {
      auto o = occ;
      o[static_cast<std::size_t>(f.mode)] = n - 1;
      out[o] += f.scale * c_lower * std::sqrt(static_cast<double>(n)) * amp;
    }
    if (n < n_max) {
      auto o = occ;
      o[static_cast<std::size_t>(f.mode)] = n + 1;
      out[o] += f.scale * c_raise * std::sqrt(static_cast<double>(n + 1)) * amp;
    }
  }
  return out;
}

// <n| f_1 ... f_k |n>; factors apply right to left.
inline Cplx diagonal_element(const std::vector<int>& occ, const std::vector<Factor>& factors, int n_max) {
  Ket ket{{occ, Cplx(1.0, 0.0)}};
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    ket = apply(*it, ket, n_max);
    if (ket.empty()) return 0.0;
  }
  auto found = ket.find(occ);
  return found == ket.end() ? Cplx(0.0) : found->second;
}

}  // namespace oracle
