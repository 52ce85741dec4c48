#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qnevpt {

/// A Pauli word on up to 64 qubits, stored as X/Z bit masks.
/// Letter on qubit q: I (00), X (10), Y (11), Z (01) from (x_bit, z_bit).
/// String form reads qubit 0 leftmost, e.g. "IZZI" puts Z on qubits 1 and 2.
struct PauliWord {
  std::uint64_t x = 0;
  std::uint64_t z = 0;

  bool operator==(const PauliWord& o) const { return x == o.x && z == o.z; }
  bool operator!=(const PauliWord& o) const { return !(*this == o); }
  bool operator<(const PauliWord& o) const {
    return x != o.x ? x < o.x : z < o.z;
  }

  bool is_identity() const { return x == 0 && z == 0; }
  bool is_diagonal() const { return x == 0; }
  int weight() const;

  /// True when the two words commute as operators.
  bool commutes_with(const PauliWord& o) const;
  /// True when the words commute on every individual qubit.
  bool qubitwise_commutes_with(const PauliWord& o) const;

  char letter(int qubit) const;
  std::string str(int n_qubits) const;
  static PauliWord parse(const std::string& s);
};

/// Product of two Pauli words: returns the resulting word and the phase
/// exponent k such that P1*P2 = i^k * P3 (k in 0..3).
std::pair<PauliWord, int> pauli_product(const PauliWord& a, const PauliWord& b);

/// Linear combination of Pauli words. Coefficients are complex internally so
/// that products close over the type; observables are Hermitian members with
/// real coefficients (checked where it matters).
class PauliSum {
 public:
  static constexpr double kPruneTol = 1e-12;

  PauliSum() = default;
  explicit PauliSum(std::map<PauliWord, std::complex<double>> terms);

  static PauliSum identity(std::complex<double> c = 1.0);
  static PauliSum single(const PauliWord& w, std::complex<double> c = 1.0);

  const std::map<PauliWord, std::complex<double>>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  std::complex<double> coefficient(const PauliWord& w) const;

  void add(const PauliWord& w, std::complex<double> c);
  PauliSum& operator+=(const PauliSum& o);
  PauliSum& operator-=(const PauliSum& o);
  PauliSum& operator*=(std::complex<double> s);
  PauliSum operator+(const PauliSum& o) const;
  PauliSum operator-(const PauliSum& o) const;
  PauliSum operator*(const PauliSum& o) const;
  PauliSum operator*(std::complex<double> s) const;

  /// Drops terms with |coefficient| below tol.
  void prune(double tol = kPruneTol);

  /// Largest |imag part| over all coefficients.
  double max_imag() const;
  bool is_hermitian(double tol = 1e-10) const;

  /// Asserts coefficients are real to `tol` and returns the real view.
  std::map<PauliWord, double> real_terms(double tol = 1e-10) const;

  /// Serialization as a JSON-ready list of (word string, coefficient).
  std::string to_json(int n_qubits) const;

  bool commutes_termwise_with(const PauliWord& w) const;

 private:
  std::map<PauliWord, std::complex<double>> terms_;
};

}  // namespace qnevpt
