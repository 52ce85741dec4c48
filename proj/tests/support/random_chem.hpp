#pragma once

// Seeded random integral sets with the right symmetries. Diagonal shifts keep
// core orbitals deep and virtuals high so perturbation denominators stay sane.

#include <random>

#include "qnevpt/chem.hpp"

namespace qnevpt::testing {

inline MOIntegrals random_integrals(int n_orbitals, unsigned seed,
                                    int n_core = 0, int n_virtual = 0,
                                    double scale = 0.2) {
  std::mt19937_64 rng(seed);
  auto u = [&]() { return (double)(rng() % 20001) / 10000.0 - 1.0; };
  MOIntegrals m;
  m.n_orbitals = n_orbitals;
  m.h1 = Tensor2(n_orbitals);
  m.eri = Tensor4(n_orbitals);
  m.e_nuclear = u();
  for (int p = 0; p < n_orbitals; ++p)
    for (int q = 0; q <= p; ++q) {
      double v = scale * u();
      m.h1(p, q) = v;
      m.h1(q, p) = v;
    }
  for (int p = 0; p < n_orbitals; ++p) {
    if (p < n_core)
      m.h1(p, p) -= 5.0 + 0.5 * p;
    else if (p >= n_orbitals - n_virtual)
      m.h1(p, p) += 4.0 + 0.5 * p;
  }
  for (int p = 0; p < n_orbitals; ++p)
    for (int q = 0; q <= p; ++q)
      for (int r = 0; r <= p; ++r) {
        const int smax = (r == p) ? q : r;
        for (int s = 0; s <= smax; ++s) {
          double v = scale * u();
          auto& e = m.eri;
          e(p, q, r, s) = e(q, p, r, s) = e(p, q, s, r) = e(q, p, s, r) = v;
          e(r, s, p, q) = e(s, r, p, q) = e(r, s, q, p) = e(s, r, q, p) = v;
        }
      }
  // weak repulsion on the diagonal keeps spectra bounded below
  for (int p = 0; p < n_orbitals; ++p) m.eri(p, p, p, p) += 0.5;
  return m;
}

}  // namespace qnevpt::testing
