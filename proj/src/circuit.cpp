#include "qnevpt/circuit.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace qnevpt {

void Circuit::check(int q) const {
  if (q < 0 || q >= n_qubits_)
    throw std::invalid_argument("Circuit: gate target out of range");
}

void Circuit::append(const Gate& g) {
  switch (g.kind) {
    case GateKind::CNOT:
    case GateKind::CZ:
      check(g.q0);
      check(g.q1);
      if (g.q0 == g.q1) throw std::invalid_argument("Circuit: 2q gate needs distinct qubits");
      break;
    case GateKind::PauliExp: {
      std::uint64_t support = g.word.x | g.word.z;
      if (n_qubits_ < 64 && (support >> n_qubits_) != 0)
        throw std::invalid_argument("Circuit: PauliExp word exceeds register");
      break;
    }
    default:
      check(g.q0);
  }
  gates_.push_back(g);
}

void Circuit::extend(const Circuit& c) {
  for (const auto& g : c.gates()) append(g);
}

Circuit Circuit::inverse() const {
  Circuit inv(n_qubits_);
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
    Gate g = *it;
    switch (g.kind) {
      case GateKind::S: g.kind = GateKind::Sdg; break;
      case GateKind::Sdg: g.kind = GateKind::S; break;
      case GateKind::Rz:
      case GateKind::PauliExp: g.angle = -g.angle; break;
      default: break;  // H, X, CNOT, CZ are involutions
    }
    inv.append(g);
  }
  return inv;
}

Circuit Circuit::decomposed() const {
  Circuit out(n_qubits_);
  for (const auto& g : gates_) {
    if (g.kind != GateKind::PauliExp) {
      out.append(g);
      continue;
    }
    std::vector<int> support;
    for (int q = 0; q < n_qubits_; ++q)
      if (((g.word.x | g.word.z) >> q) & 1) support.push_back(q);
    if (support.empty()) continue;  // global phase, unobservable
    // rotate X -> Z with H, Y -> Z with Sdg then H
    for (int q : support) {
      if ((g.word.x >> q) & 1) {
        if ((g.word.z >> q) & 1) out.append(Gate::sdg(q));
        out.append(Gate::h(q));
      }
    }
    for (std::size_t i = 0; i + 1 < support.size(); ++i)
      out.append(Gate::cnot(support[i], support[i + 1]));
    out.append(Gate::rz(support.back(), g.angle));
    for (std::size_t i = support.size() - 1; i-- > 0;)
      out.append(Gate::cnot(support[i], support[i + 1]));
    for (int q : support) {
      if ((g.word.x >> q) & 1) {
        out.append(Gate::h(q));
        if ((g.word.z >> q) & 1) out.append(Gate::s(q));
      }
    }
  }
  return out;
}

namespace {

void apply_gate(StateVector& psi, const Gate& g) {
  auto& a = psi.amplitudes();
  const std::size_t dim = a.size();
  switch (g.kind) {
    case GateKind::H: {
      const std::uint64_t bit = 1ull << g.q0;
      const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
      for (std::uint64_t i = 0; i < dim; ++i) {
        if (i & bit) continue;
        cdouble lo = a[i], hi = a[i | bit];
        a[i] = inv_sqrt2 * (lo + hi);
        a[i | bit] = inv_sqrt2 * (lo - hi);
      }
      break;
    }
    case GateKind::S:
    case GateKind::Sdg: {
      const std::uint64_t bit = 1ull << g.q0;
      const cdouble f(0.0, g.kind == GateKind::S ? 1.0 : -1.0);
      for (std::uint64_t i = 0; i < dim; ++i)
        if (i & bit) a[i] *= f;
      break;
    }
    case GateKind::X: {
      const std::uint64_t bit = 1ull << g.q0;
      for (std::uint64_t i = 0; i < dim; ++i)
        if (!(i & bit)) std::swap(a[i], a[i | bit]);
      break;
    }
    case GateKind::CNOT: {
      const std::uint64_t c = 1ull << g.q0, t = 1ull << g.q1;
      for (std::uint64_t i = 0; i < dim; ++i)
        if ((i & c) && !(i & t)) std::swap(a[i], a[i | t]);
      break;
    }
    case GateKind::CZ: {
      const std::uint64_t m = (1ull << g.q0) | (1ull << g.q1);
      for (std::uint64_t i = 0; i < dim; ++i)
        if ((i & m) == m) a[i] = -a[i];
      break;
    }
    case GateKind::Rz: {
      const std::uint64_t bit = 1ull << g.q0;
      const cdouble e0 = std::polar(1.0, -g.angle / 2.0);
      const cdouble e1 = std::polar(1.0, g.angle / 2.0);
      for (std::uint64_t i = 0; i < dim; ++i) a[i] *= (i & bit) ? e1 : e0;
      break;
    }
    case GateKind::PauliExp: {
      // exp(-i t/2 W) = cos(t/2) I - i sin(t/2) W, applied pairwise in place
      const double c = std::cos(g.angle / 2.0);
      const cdouble mis(0.0, -std::sin(g.angle / 2.0));
      const PauliWord& w = g.word;
      if (w.x == 0) {
        // diagonal word: pure phase exp(-i t/2 * (+-1)) per basis state
        for (std::uint64_t i = 0; i < dim; ++i) {
          const bool neg = std::popcount(i & w.z) & 1;
          a[i] *= c + (neg ? -mis : mis);
        }
      } else {
        static const cdouble iy[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        const int ky = std::popcount(w.x & w.z) & 3;
        for (std::uint64_t i = 0; i < dim; ++i) {
          const std::uint64_t j = i ^ w.x;
          if (j < i) continue;
          cdouble ph_i = iy[ky];
          if (std::popcount(i & w.z) & 1) ph_i = -ph_i;
          cdouble ph_j = iy[ky];
          if (std::popcount(j & w.z) & 1) ph_j = -ph_j;
          const cdouble ai = a[i], aj = a[j];
          // W|i> = ph_i |j>, W|j> = ph_j |i>
          a[i] = c * ai + mis * ph_j * aj;
          a[j] = c * aj + mis * ph_i * ai;
        }
      }
      break;
    }
  }
}

}  // namespace

StateVector apply(const Circuit& circuit, const StateVector& state, bool use_decomposed) {
  if (circuit.n_qubits() != state.n_qubits())
    throw std::invalid_argument("apply: circuit/state qubit mismatch");
  StateVector psi = state;
  const Circuit* c = &circuit;
  Circuit dec;
  if (use_decomposed) {
    dec = circuit.decomposed();
    c = &dec;
  }
  for (const auto& g : c->gates()) apply_gate(psi, g);
  return psi;
}

}  // namespace qnevpt
