#pragma once

// Dense-matrix oracles for small registers. Everything here is test-only and
// deliberately independent of the bit-twiddling fast paths it checks.

#include <Eigen/Dense>
#include <complex>
#include <random>

#include "qnevpt/circuit.hpp"
#include "qnevpt/fermion.hpp"
#include "qnevpt/pauli.hpp"

namespace qnevpt::testing {

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

inline CMat pauli_letter(char l) {
  CMat m(2, 2);
  const std::complex<double> i(0, 1);
  switch (l) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, -i, i, 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("bad letter");
  }
  return m;
}

// Kronecker product with qubit 0 as the least significant index bit.
inline CMat kron(const CMat& high, const CMat& low) {
  CMat out(high.rows() * low.rows(), high.cols() * low.cols());
  for (int i = 0; i < high.rows(); ++i)
    for (int j = 0; j < high.cols(); ++j)
      out.block(i * low.rows(), j * low.cols(), low.rows(), low.cols()) =
          high(i, j) * low;
  return out;
}

inline CMat word_matrix(const PauliWord& w, int n_qubits) {
  CMat m = CMat::Identity(1, 1);
  for (int q = 0; q < n_qubits; ++q) m = kron(pauli_letter(w.letter(q)), m);
  return m;
}

inline CMat pauli_sum_matrix(const PauliSum& s, int n_qubits) {
  const std::size_t dim = std::size_t(1) << n_qubits;
  CMat m = CMat::Zero(dim, dim);
  for (const auto& [w, c] : s.terms()) m += c * word_matrix(w, n_qubits);
  return m;
}

// Jordan-Wigner ladder matrices built directly from (X +- iY)/2 with Z
// strings, as explicit matrices.
inline CMat ladder_matrix(const LadderOp& op, int n_modes) {
  const std::complex<double> i(0, 1);
  CMat m = CMat::Identity(1, 1);
  for (int q = 0; q < n_modes; ++q) {
    CMat f(2, 2);
    if (q == op.index) {
      // (X - iY)/2 = |1><0| is the creation block in this bit order
      if (op.create)
        f << 0, 0, 1, 0;
      else
        f << 0, 1, 0, 0;
    } else if (q < op.index) {
      f = pauli_letter('Z');
    } else {
      f = pauli_letter('I');
    }
    m = kron(f, m);
  }
  return m;
}

inline CMat fermion_matrix(const FermionOperator& f, int n_modes) {
  const std::size_t dim = std::size_t(1) << n_modes;
  CMat m = CMat::Zero(dim, dim);
  for (const auto& t : f.terms()) {
    CMat term = CMat::Identity(dim, dim);
    for (const auto& op : t.ops) term = term * ladder_matrix(op, n_modes);
    m += t.coeff * term;
  }
  return m;
}

inline FermionOperator random_fermion_operator(int n_modes, int n_terms,
                                               unsigned seed,
                                               int max_len = 4) {
  std::mt19937_64 rng(seed);
  FermionOperator f;
  for (int t = 0; t < n_terms; ++t) {
    int len = 1 + static_cast<int>(rng() % max_len);
    std::vector<LadderOp> ops;
    for (int k = 0; k < len; ++k)
      ops.push_back({static_cast<std::uint16_t>(rng() % n_modes),
                     static_cast<bool>(rng() % 2)});
    double re = (static_cast<double>(rng() % 2000) - 1000.0) / 500.0;
    double im = (static_cast<double>(rng() % 2000) - 1000.0) / 500.0;
    f.add_term({re, im}, std::move(ops));
  }
  return f;
}

inline CMat circuit_matrix(const Circuit& c, int n_qubits) {
  const std::size_t dim = std::size_t(1) << n_qubits;
  CMat m(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    StateVector basis(n_qubits, col);
    StateVector out = apply(c, basis);
    for (std::size_t row = 0; row < dim; ++row) m(row, col) = out.amplitudes()[row];
  }
  return m;
}

}  // namespace qnevpt::testing
