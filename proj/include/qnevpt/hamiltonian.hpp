#pragma once

#include "qnevpt/chem.hpp"
#include "qnevpt/fermion.hpp"
#include "qnevpt/pauli.hpp"

namespace qnevpt {

/// Second-quantized active Hamiltonian (excluding e_frozen):
/// sum_tu heff_tu E^t_u + 1/2 sum (tu|vw) E^{tv}_{uw}.
FermionOperator active_hamiltonian_fermion(const ActiveHamiltonian& h);

/// Jordan-Wigner image on 2*n_active qubits; real coefficients.
PauliSum active_hamiltonian_qubit(const ActiveHamiltonian& h);

}  // namespace qnevpt
