#include "qnevpt/hamiltonian.hpp"

namespace qnevpt {

FermionOperator active_hamiltonian_fermion(const ActiveHamiltonian& h) {
  const int n = h.n_active;
  FermionOperator f;
  for (int t = 0; t < n; ++t)
    for (int u = 0; u < n; ++u) {
      if (h.h1_eff(t, u) != 0.0)
        f += spin_traced_excitation({t}, {u}, n) * h.h1_eff(t, u);
    }
  for (int t = 0; t < n; ++t)
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w) {
          const double g = h.eri_act(t, u, v, w);
          if (g != 0.0)
            f += spin_traced_excitation({t, v}, {u, w}, n) * (0.5 * g);
        }
  return f;
}

PauliSum active_hamiltonian_qubit(const ActiveHamiltonian& h) {
  PauliSum p = jordan_wigner(active_hamiltonian_fermion(h));
  if (!p.is_hermitian())
    throw std::runtime_error("active_hamiltonian_qubit: mapping lost hermiticity");
  return p;
}

}  // namespace qnevpt
