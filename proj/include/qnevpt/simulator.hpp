#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>

#include "qnevpt/circuit.hpp"
#include "qnevpt/statevector.hpp"

namespace qnevpt {

/// Depolarizing noise after every gate plus independent readout bit flips.
struct NoiseModel {
  double depolarizing_per_gate = 0.0;
  double readout_flip = 0.0;

  void validate() const;
  bool is_trivial() const {
    return depolarizing_per_gate == 0.0 && readout_flip == 0.0;
  }
};

/// Measurement record: counts per computational-basis bitstring.
struct ShotTable {
  int n_qubits = 0;
  std::map<std::uint64_t, std::uint64_t> counts;
  std::uint64_t total_shots = 0;

  void record(std::uint64_t bits) {
    ++counts[bits];
    ++total_shots;
  }

  /// Empirical expectation of a diagonal (I/Z) word.
  double diagonal_expectation(const PauliWord& w) const;

  std::string to_json() const;
};

/// Deterministic uniform double in [0, 1) from a 64-bit draw.
inline double uniform01(std::mt19937_64& rng) {
  return (rng() >> 11) * 0x1.0p-53;
}

/// Applies basis_change to state and samples `shots` bitstrings. With a
/// noise model, each shot re-runs the circuit with stochastic Pauli
/// insertions after every gate, then applies readout flips.
ShotTable sample(const StateVector& state, const Circuit& basis_change,
                 std::uint64_t shots, std::uint64_t seed,
                 const std::optional<NoiseModel>& noise = std::nullopt);

}  // namespace qnevpt
