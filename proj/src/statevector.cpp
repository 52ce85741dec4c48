#include "qnevpt/statevector.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace qnevpt {

StateVector::StateVector(int n_qubits, std::uint64_t basis_state)
    : n_qubits_(n_qubits), amps_(std::size_t(1) << n_qubits, 0.0) {
  if (n_qubits < 0 || n_qubits > 30)
    throw std::invalid_argument("StateVector: unsupported qubit count");
  amps_[basis_state] = 1.0;
}

StateVector StateVector::from_amplitudes(int n_qubits, std::vector<cdouble> amps) {
  if (amps.size() != (std::size_t(1) << n_qubits))
    throw std::invalid_argument("StateVector: amplitude count mismatch");
  StateVector s(n_qubits);
  s.amps_ = std::move(amps);
  return s;
}

double StateVector::norm() const {
  double n2 = 0.0;
  for (const auto& a : amps_) n2 += std::norm(a);
  return std::sqrt(n2);
}

void StateVector::normalize() {
  double n = norm();
  if (n == 0.0) throw std::runtime_error("StateVector: cannot normalize zero vector");
  for (auto& a : amps_) a /= n;
}

cdouble StateVector::inner(const StateVector& o) const {
  if (o.n_qubits_ != n_qubits_) throw std::invalid_argument("StateVector: size mismatch");
  cdouble s = 0.0;
  for (std::size_t i = 0; i < amps_.size(); ++i) s += std::conj(amps_[i]) * o.amps_[i];
  return s;
}

double StateVector::fidelity(const StateVector& o) const {
  return std::norm(inner(o));
}

namespace {

inline cdouble word_phase(const PauliWord& w, std::uint64_t idx) {
  static const cdouble iy[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  int k = std::popcount(w.x & w.z) & 3;              // i^{#Y}
  int sign = std::popcount(idx & w.z) & 1;           // (-1)^{Z overlap}
  cdouble p = iy[k];
  return sign ? -p : p;
}

}  // namespace

void StateVector::apply_pauli(const PauliWord& w) {
  std::vector<cdouble> out(amps_.size());
  for (std::uint64_t idx = 0; idx < amps_.size(); ++idx)
    out[idx ^ w.x] = word_phase(w, idx) * amps_[idx];
  amps_ = std::move(out);
}

cdouble StateVector::pauli_expectation(const PauliWord& w) const {
  cdouble s = 0.0;
  for (std::uint64_t idx = 0; idx < amps_.size(); ++idx) {
    if (amps_[idx] == cdouble(0.0)) continue;
    s += std::conj(amps_[idx ^ w.x]) * word_phase(w, idx) * amps_[idx];
  }
  return s;
}

double StateVector::expectation(const PauliSum& obs, double imag_tol) const {
  cdouble s = 0.0;
  for (const auto& [w, c] : obs.terms()) s += c * pauli_expectation(w);
  if (std::abs(s.imag()) > imag_tol)
    throw std::runtime_error("expectation: non-Hermitian residual " +
                             std::to_string(s.imag()));
  return s.real();
}

void StateVector::apply_ladder(const LadderOp& op) {
  const std::uint64_t bit = 1ull << op.index;
  const std::uint64_t below = bit - 1;
  std::vector<cdouble> out(amps_.size(), 0.0);
  for (std::uint64_t idx = 0; idx < amps_.size(); ++idx) {
    const cdouble a = amps_[idx];
    if (a == cdouble(0.0)) continue;
    const bool occupied = idx & bit;
    if (op.create == occupied) continue;  // killed
    const int sign = std::popcount(idx & below) & 1;
    out[idx ^ bit] += sign ? -a : a;
  }
  amps_ = std::move(out);
}

void StateVector::apply_fermion_term(const std::vector<LadderOp>& ops) {
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) apply_ladder(*it);
}

cdouble StateVector::fermion_expectation(const FermionOperator& f) const {
  cdouble s = 0.0;
  for (const auto& term : f.terms()) {
    StateVector tmp = *this;
    tmp.apply_fermion_term(term.ops);
    s += term.coeff * inner(tmp);
  }
  return s;
}

}  // namespace qnevpt
