#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qnevpt/tensor.hpp"

namespace qnevpt {

/// Core/active/virtual partition of the spatial orbitals, in that index
/// order: core 0..n_core-1, active next, virtual last.
struct OrbitalSpaces {
  int n_core = 0;
  int n_active = 0;
  int n_virtual = 0;
  int n_active_electrons = 0;
  int total_electrons = 0;
  int spin_2s = 0;  // twice the S_z projection

  int n_orbitals() const { return n_core + n_active + n_virtual; }
  bool is_core(int p) const { return p < n_core; }
  bool is_active(int p) const { return p >= n_core && p < n_core + n_active; }
  bool is_virtual(int p) const { return p >= n_core + n_active; }

  int n_alpha_active() const { return (n_active_electrons + spin_2s) / 2; }
  int n_beta_active() const { return (n_active_electrons - spin_2s) / 2; }

  void validate() const;

  /// Partition with the given counts for a system with `total_electrons`;
  /// active electrons are whatever the core does not hold.
  static OrbitalSpaces cas(int n_orbitals, int total_electrons, int spin_2s,
                           int n_core, int n_active);
};

/// Full-register molecular-orbital integrals in chemists' notation (pq|rs).
struct MOIntegrals {
  int n_orbitals = 0;
  Tensor2 h1;
  Tensor4 eri;
  double e_nuclear = 0.0;
  int n_electrons = 0;
  int ms2 = 0;

  void check_symmetries(double tol = 1e-10) const;
};

/// Active-space Hamiltonian ingredients: core-Fock-dressed one-body part,
/// the active ERI block, and the frozen (nuclear + core) energy.
struct ActiveHamiltonian {
  int n_active = 0;
  Tensor2 h1_eff;
  Tensor4 eri_act;
  double e_frozen = 0.0;
};

/// Reads the Molpro-convention FCIDUMP format: a &FCI header carrying
/// NORB/NELEC/MS2 (ORBSYM and ISYM are accepted and ignored), then lines of
/// "value p q r s" with 1-based indices. Fortran D exponents are accepted.
/// Two-electron entries are spread over the full 8-fold symmetry; duplicate
/// entries overwrite earlier ones.
MOIntegrals parse_fcidump(std::istream& in);
MOIntegrals parse_fcidump_file(const std::string& path);

/// Inverse of parse_fcidump: emits one canonical representative per 8-fold
/// symmetry orbit, so parse(write(x)) reproduces the tensors exactly.
void write_fcidump(std::ostream& out, const MOIntegrals& ints);

/// Applies a spatial-orbital permutation: order[i] is the source orbital
/// placed at position i. Used to realize core < active < virtual for
/// FCIDUMP files with a different ordering.
MOIntegrals reorder_orbitals(const MOIntegrals& ints, const std::vector<int>& order);

/// Folds the doubly occupied core into an effective one-body operator over
/// the active orbitals and a frozen scalar energy.
ActiveHamiltonian build_active_hamiltonian(const MOIntegrals& ints,
                                           const OrbitalSpaces& spaces);

/// Restricted mean-field energy of the reference determinant (doubly
/// occupied lowest active orbitals, singly occupied next for open shells),
/// excluding e_frozen.
double hartree_fock_active_energy(const ActiveHamiltonian& h, const OrbitalSpaces& spaces);

}  // namespace qnevpt
