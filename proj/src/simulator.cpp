#include "qnevpt/simulator.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace qnevpt {

void NoiseModel::validate() const {
  if (depolarizing_per_gate < 0.0 || depolarizing_per_gate > 1.0 ||
      readout_flip < 0.0 || readout_flip > 1.0)
    throw std::invalid_argument("NoiseModel: probabilities must lie in [0,1]");
}

double ShotTable::diagonal_expectation(const PauliWord& w) const {
  if (!w.is_diagonal())
    throw std::invalid_argument("diagonal_expectation: word has X/Y support");
  if (total_shots == 0) throw std::invalid_argument("diagonal_expectation: no shots");
  std::int64_t acc = 0;
  for (const auto& [bits, n] : counts) {
    const bool odd = std::popcount(bits & w.z) & 1;
    acc += odd ? -static_cast<std::int64_t>(n) : static_cast<std::int64_t>(n);
  }
  return static_cast<double>(acc) / static_cast<double>(total_shots);
}

std::string ShotTable::to_json() const {
  std::ostringstream os;
  os << "{\"n_qubits\":" << n_qubits << ",\"total_shots\":" << total_shots
     << ",\"counts\":{";
  bool first = true;
  for (const auto& [bits, n] : counts) {
    if (!first) os << ",";
    first = false;
    std::string key(n_qubits, '0');
    for (int q = 0; q < n_qubits; ++q)
      if ((bits >> q) & 1) key[q] = '1';
    os << "\"" << key << "\":" << n;
  }
  os << "}}";
  return os.str();
}

namespace {

std::uint64_t sample_index(const std::vector<double>& cdf, double u) {
  // cdf is nondecreasing with cdf.back() ~= 1
  std::size_t lo = 0, hi = cdf.size() - 1;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (cdf[mid] > u)
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

std::vector<double> cumulative_probs(const StateVector& psi) {
  std::vector<double> cdf(psi.dim());
  double acc = 0.0;
  for (std::size_t i = 0; i < psi.dim(); ++i) {
    acc += std::norm(psi.amplitudes()[i]);
    cdf[i] = acc;
  }
  return cdf;
}

void insert_depolarizing(StateVector& psi, const Gate& g, double p,
                         std::mt19937_64& rng) {
  std::vector<int> qubits;
  if (g.kind == GateKind::PauliExp) {
    for (int q = 0; q < psi.n_qubits(); ++q)
      if (((g.word.x | g.word.z) >> q) & 1) qubits.push_back(q);
  } else if (g.kind == GateKind::CNOT || g.kind == GateKind::CZ) {
    qubits = {g.q0, g.q1};
  } else {
    qubits = {g.q0};
  }
  for (int q : qubits) {
    if (uniform01(rng) >= p) continue;
    const int which = static_cast<int>(rng() % 3);  // X, Y or Z
    PauliWord w;
    if (which != 2) w.x |= 1ull << q;
    if (which != 0) w.z |= 1ull << q;
    psi.apply_pauli(w);
  }
}

}  // namespace

ShotTable sample(const StateVector& state, const Circuit& basis_change,
                 std::uint64_t shots, std::uint64_t seed,
                 const std::optional<NoiseModel>& noise) {
  if (shots == 0) throw std::invalid_argument("sample: shots must be positive");
  if (noise) noise->validate();
  std::mt19937_64 rng(seed);
  ShotTable table;
  table.n_qubits = state.n_qubits();

  const bool noiseless = !noise || noise->is_trivial();
  if (noiseless) {
    StateVector rotated = apply(basis_change, state);
    auto cdf = cumulative_probs(rotated);
    for (std::uint64_t s = 0; s < shots; ++s)
      table.record(sample_index(cdf, uniform01(rng) * cdf.back()));
    return table;
  }

  const double p = noise->depolarizing_per_gate;
  const double r = noise->readout_flip;
  const std::uint64_t full = (state.n_qubits() == 64)
                                 ? ~0ull
                                 : (1ull << state.n_qubits()) - 1;
  for (std::uint64_t s = 0; s < shots; ++s) {
    StateVector psi = state;
    if (p > 0.0) {
      for (const auto& g : basis_change.gates()) {
        Circuit one(state.n_qubits());
        one.append(g);
        psi = apply(one, psi);
        insert_depolarizing(psi, g, p, rng);
      }
    } else {
      psi = apply(basis_change, psi);
    }
    auto cdf = cumulative_probs(psi);
    std::uint64_t bits = sample_index(cdf, uniform01(rng) * cdf.back());
    if (r > 0.0) {
      for (int q = 0; q < state.n_qubits(); ++q)
        if (uniform01(rng) < r) bits ^= 1ull << q;
    }
    table.record(bits & full);
  }
  return table;
}

}  // namespace qnevpt
