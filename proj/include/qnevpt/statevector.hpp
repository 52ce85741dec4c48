#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qnevpt/fermion.hpp"
#include "qnevpt/pauli.hpp"

namespace qnevpt {

using cdouble = std::complex<double>;

/// Dense state over 2^n_qubits computational basis states. Index bit q is
/// the occupation of qubit q (basis state index 0b...q1q0).
class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(int n_qubits, std::uint64_t basis_state = 0);
  static StateVector from_amplitudes(int n_qubits, std::vector<cdouble> amps);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  const std::vector<cdouble>& amplitudes() const { return amps_; }
  std::vector<cdouble>& amplitudes() { return amps_; }
  cdouble amplitude(std::uint64_t idx) const { return amps_[idx]; }

  double norm() const;
  void normalize();

  cdouble inner(const StateVector& o) const;
  double fidelity(const StateVector& o) const;

  /// In-place action of a single Pauli word (phase included).
  void apply_pauli(const PauliWord& w);

  /// <psi| P |psi> for a single word.
  cdouble pauli_expectation(const PauliWord& w) const;

  /// <psi| O |psi>; asserts the residual imaginary part is below tol.
  double expectation(const PauliSum& obs, double imag_tol = 1e-10) const;

  /// In-place ladder-operator action under the Jordan-Wigner convention:
  /// sign (-1)^(number of occupied modes below index). Returns false when the
  /// result is the zero vector (kept as all-zero amplitudes).
  void apply_ladder(const LadderOp& op);

  /// Applies a whole ladder string (rightmost factor first).
  void apply_fermion_term(const std::vector<LadderOp>& ops);

  /// <psi| F |psi> evaluated by direct ladder action.
  cdouble fermion_expectation(const FermionOperator& f) const;

 private:
  int n_qubits_ = 0;
  std::vector<cdouble> amps_;
};

}  // namespace qnevpt
