#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "qnevpt/chem.hpp"
#include "qnevpt/statevector.hpp"

namespace qnevpt {

/// Determinants are bitmasks over interleaved spin orbitals (bit 2p = p-up,
/// bit 2p+1 = p-down), identical to the qubit register convention, with the
/// phase fixed by creating occupied modes in ascending index order.
struct DeterminantSpace {
  int n_orbitals = 0;  // spatial
  int n_alpha = 0;
  int n_beta = 0;
  std::vector<std::uint64_t> dets;
  std::unordered_map<std::uint64_t, std::size_t> index;

  std::size_t dim() const { return dets.size(); }
};

DeterminantSpace determinant_space(int n_orbitals, int n_alpha, int n_beta);

/// Reference determinant: lowest orbitals filled, alpha first for open shells.
std::uint64_t reference_determinant(int n_alpha, int n_beta);

/// <bra| H |ket> for the active Hamiltonian (excluding e_frozen) by the
/// Slater-Condon rules.
double slater_condon(std::uint64_t bra, std::uint64_t ket,
                     const Tensor2& h1, const Tensor4& eri);

struct CasciResult {
  double energy = 0.0;  // active-space electronic energy, excludes e_frozen
  Eigen::VectorXd ci;
  DeterminantSpace space;
  int iterations = 0;
};

struct CasciOptions {
  std::size_t max_dimension = 1000000;  // refusal threshold
  std::size_t dense_threshold = 2500;   // direct diagonalization below this
  double tol = 1e-12;
  int max_davidson_iter = 400;
};

/// Lowest eigenpair of the active Hamiltonian in the fixed (N, S_z)
/// determinant basis.
CasciResult casci_solve(const ActiveHamiltonian& h, const OrbitalSpaces& spaces,
                        const CasciOptions& opts = {});

/// Expands a CI vector into the 2*n_orbitals qubit register. The mapping is
/// the identity on bitmasks, so no phase corrections arise.
StateVector ci_to_statevector(const CasciResult& r);

/// Matrix-free H*c over a determinant space (used by the Davidson solver and
/// exposed for oracles).
Eigen::VectorXd apply_hamiltonian(const DeterminantSpace& space, const Tensor2& h1,
                                  const Tensor4& eri, const Eigen::VectorXd& c);

}  // namespace qnevpt
