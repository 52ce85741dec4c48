#include "qnevpt/pauli.hpp"

#include <bit>
#include <sstream>

namespace qnevpt {

int PauliWord::weight() const { return std::popcount(x | z); }

bool PauliWord::commutes_with(const PauliWord& o) const {
  // Symplectic form: words anticommute iff the overlap count is odd.
  int n = std::popcount(x & o.z) + std::popcount(z & o.x);
  return (n & 1) == 0;
}

bool PauliWord::qubitwise_commutes_with(const PauliWord& o) const {
  std::uint64_t both = (x | z) & (o.x | o.z);
  // On shared support the letters must match exactly.
  return ((x ^ o.x) & both) == 0 && ((z ^ o.z) & both) == 0;
}

char PauliWord::letter(int qubit) const {
  bool bx = (x >> qubit) & 1, bz = (z >> qubit) & 1;
  if (bx && bz) return 'Y';
  if (bx) return 'X';
  if (bz) return 'Z';
  return 'I';
}

std::string PauliWord::str(int n_qubits) const {
  std::string s(n_qubits, 'I');
  for (int q = 0; q < n_qubits; ++q) s[q] = letter(q);
  return s;
}

PauliWord PauliWord::parse(const std::string& s) {
  if (s.size() > 64) throw std::invalid_argument("PauliWord: more than 64 qubits");
  PauliWord w;
  for (std::size_t q = 0; q < s.size(); ++q) {
    switch (s[q]) {
      case 'I': break;
      case 'X': w.x |= 1ull << q; break;
      case 'Y': w.x |= 1ull << q; w.z |= 1ull << q; break;
      case 'Z': w.z |= 1ull << q; break;
      default:
        throw std::invalid_argument("PauliWord: bad letter '" + std::string(1, s[q]) + "'");
    }
  }
  return w;
}

std::pair<PauliWord, int> pauli_product(const PauliWord& a, const PauliWord& b) {
  PauliWord r{a.x ^ b.x, a.z ^ b.z};
  // Phase bookkeeping: write each word as i^{|x&z|} X^x Z^z; commuting Z^za
  // past X^xb yields (-1)^{|za & xb|}.
  int k = std::popcount(a.x & a.z) + std::popcount(b.x & b.z);
  k += 2 * std::popcount(a.z & b.x);
  k -= std::popcount(r.x & r.z);
  return {r, ((k % 4) + 4) % 4};
}

PauliSum::PauliSum(std::map<PauliWord, std::complex<double>> terms)
    : terms_(std::move(terms)) {
  prune();
}

PauliSum PauliSum::identity(std::complex<double> c) { return single(PauliWord{}, c); }

PauliSum PauliSum::single(const PauliWord& w, std::complex<double> c) {
  PauliSum s;
  s.add(w, c);
  return s;
}

std::complex<double> PauliSum::coefficient(const PauliWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? std::complex<double>(0.0) : it->second;
}

void PauliSum::add(const PauliWord& w, std::complex<double> c) {
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) it->second += c;
  if (std::abs(it->second) < kPruneTol) terms_.erase(it);
}

PauliSum& PauliSum::operator+=(const PauliSum& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

PauliSum& PauliSum::operator*=(std::complex<double> s) {
  for (auto& [w, c] : terms_) c *= s;
  prune();
  return *this;
}

PauliSum PauliSum::operator+(const PauliSum& o) const {
  PauliSum r = *this;
  r += o;
  return r;
}

PauliSum PauliSum::operator-(const PauliSum& o) const {
  PauliSum r = *this;
  r -= o;
  return r;
}

PauliSum PauliSum::operator*(const PauliSum& o) const {
  static const std::complex<double> kI(0.0, 1.0);
  static const std::complex<double> phases[4] = {1.0, kI, -1.0, -kI};
  PauliSum r;
  for (const auto& [wa, ca] : terms_) {
    for (const auto& [wb, cb] : o.terms_) {
      auto [w, k] = pauli_product(wa, wb);
      r.add(w, ca * cb * phases[k]);
    }
  }
  return r;
}

PauliSum PauliSum::operator*(std::complex<double> s) const {
  PauliSum r = *this;
  r *= s;
  return r;
}

void PauliSum::prune(double tol) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (std::abs(it->second) < tol)
      it = terms_.erase(it);
    else
      ++it;
  }
}

double PauliSum::max_imag() const {
  double m = 0.0;
  for (const auto& [w, c] : terms_) m = std::max(m, std::abs(c.imag()));
  return m;
}

bool PauliSum::is_hermitian(double tol) const { return max_imag() < tol; }

std::map<PauliWord, double> PauliSum::real_terms(double tol) const {
  if (max_imag() >= tol)
    throw std::runtime_error("PauliSum: expected real coefficients, max imag = " +
                             std::to_string(max_imag()));
  std::map<PauliWord, double> out;
  for (const auto& [w, c] : terms_) out.emplace(w, c.real());
  return out;
}

std::string PauliSum::to_json(int n_qubits) const {
  std::ostringstream os;
  os.precision(17);
  os << "[";
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << ",";
    first = false;
    os << "[\"" << w.str(n_qubits) << "\"," << c.real();
    if (std::abs(c.imag()) > kPruneTol) os << "," << c.imag();
    os << "]";
  }
  os << "]";
  return os.str();
}

bool PauliSum::commutes_termwise_with(const PauliWord& w) const {
  for (const auto& [t, c] : terms_)
    if (!t.commutes_with(w)) return false;
  return true;
}

}  // namespace qnevpt
