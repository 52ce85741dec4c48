#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qnevpt/pauli.hpp"
#include "qnevpt/statevector.hpp"

namespace qnevpt {

enum class GateKind { H, S, Sdg, X, CNOT, CZ, Rz, PauliExp };

struct Gate {
  GateKind kind;
  int q0 = 0;
  int q1 = 0;          // CNOT control = q0, target = q1
  double angle = 0.0;  // Rz / PauliExp parameter
  PauliWord word;      // PauliExp generator

  static Gate h(int q) { return {GateKind::H, q}; }
  static Gate s(int q) { return {GateKind::S, q}; }
  static Gate sdg(int q) { return {GateKind::Sdg, q}; }
  static Gate x(int q) { return {GateKind::X, q}; }
  static Gate cnot(int c, int t) { return {GateKind::CNOT, c, t}; }
  static Gate cz(int a, int b) { return {GateKind::CZ, a, b}; }
  static Gate rz(int q, double theta) { return {GateKind::Rz, q, 0, theta}; }
  /// exp(-i theta/2 * W)
  static Gate pauli_exp(const PauliWord& w, double theta) {
    return {GateKind::PauliExp, 0, 0, theta, w};
  }
};

class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(int n_qubits) : n_qubits_(n_qubits) {}

  int n_qubits() const { return n_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  bool empty() const { return gates_.empty(); }
  std::size_t size() const { return gates_.size(); }

  void append(const Gate& g);
  void extend(const Circuit& c);
  Circuit inverse() const;

  /// Gate-level decomposition of every PauliExp into basis rotations, a CNOT
  /// ladder and one Rz. Other gates pass through.
  Circuit decomposed() const;

 private:
  void check(int q) const;
  int n_qubits_ = 0;
  std::vector<Gate> gates_;
};

/// Exact unitary action. PauliExp gates act natively unless use_decomposed.
StateVector apply(const Circuit& circuit, const StateVector& state,
                  bool use_decomposed = false);

}  // namespace qnevpt
