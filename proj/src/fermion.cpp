#include "qnevpt/fermion.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qnevpt {

void FermionOperator::add_term(std::complex<double> coeff, std::vector<LadderOp> ops) {
  terms_.push_back({coeff, std::move(ops)});
}

FermionOperator& FermionOperator::operator+=(const FermionOperator& o) {
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  return *this;
}

FermionOperator FermionOperator::operator+(const FermionOperator& o) const {
  FermionOperator r = *this;
  r += o;
  return r;
}

FermionOperator FermionOperator::operator*(const FermionOperator& o) const {
  FermionOperator r;
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      std::vector<LadderOp> ops = a.ops;
      ops.insert(ops.end(), b.ops.begin(), b.ops.end());
      r.add_term(a.coeff * b.coeff, std::move(ops));
    }
  }
  return r;
}

FermionOperator FermionOperator::operator*(std::complex<double> s) const {
  FermionOperator r = *this;
  for (auto& t : r.terms_) t.coeff *= s;
  return r;
}

FermionOperator FermionOperator::adjoint() const {
  FermionOperator r;
  for (const auto& t : terms_) {
    std::vector<LadderOp> ops(t.ops.rbegin(), t.ops.rend());
    for (auto& op : ops) op.create = !op.create;
    r.add_term(std::conj(t.coeff), std::move(ops));
  }
  return r;
}

namespace {

// Recursively normal-orders one ladder string into the accumulator map.
void normal_order_string(std::complex<double> coeff, std::vector<LadderOp> ops,
                         std::map<std::vector<std::pair<std::uint16_t, bool>>,
                                  std::complex<double>>& acc) {
  // Bubble pass: find the first adjacent pair out of order.
  for (std::size_t i = 0; i + 1 < ops.size(); ++i) {
    const LadderOp a = ops[i], b = ops[i + 1];
    bool swap_needed = false;
    if (!a.create && b.create) {
      swap_needed = true;
    } else if (a.create == b.create) {
      if (a.index == b.index) return;  // a+ a+ or a a with equal index: zero
      // descending indices within each group is the canonical form
      swap_needed = a.index < b.index;
    }
    if (!swap_needed) continue;
    if (!a.create && b.create && a.index == b.index) {
      // a_p a+_p = 1 - a+_p a_p
      std::vector<LadderOp> contracted(ops.begin(), ops.begin() + i);
      contracted.insert(contracted.end(), ops.begin() + i + 2, ops.end());
      normal_order_string(coeff, std::move(contracted), acc);
    }
    std::swap(ops[i], ops[i + 1]);
    normal_order_string(-coeff, std::move(ops), acc);
    return;
  }
  std::vector<std::pair<std::uint16_t, bool>> key;
  key.reserve(ops.size());
  for (const auto& op : ops) key.emplace_back(op.index, op.create);
  acc[key] += coeff;
}

}  // namespace

FermionOperator FermionOperator::normal_ordered(double tol) const {
  std::map<std::vector<std::pair<std::uint16_t, bool>>, std::complex<double>> acc;
  for (const auto& t : terms_) normal_order_string(t.coeff, t.ops, acc);
  FermionOperator r;
  for (const auto& [key, c] : acc) {
    if (std::abs(c) < tol) continue;
    std::vector<LadderOp> ops;
    ops.reserve(key.size());
    for (const auto& [idx, cr] : key) ops.push_back({idx, cr});
    r.add_term(c, std::move(ops));
  }
  return r;
}

FermionOperator spatial_number_operator(int p) {
  FermionOperator n;
  for (int s = 0; s < 2; ++s)
    n.add_term(1.0, {{spin_orbital(p, s), true}, {spin_orbital(p, s), false}});
  return n;
}

FermionOperator total_number_operator(int n_spatial) {
  FermionOperator n;
  for (int p = 0; p < n_spatial; ++p) n += spatial_number_operator(p);
  return n;
}

FermionOperator total_sz_operator(int n_spatial) {
  FermionOperator sz;
  for (int p = 0; p < n_spatial; ++p) {
    sz.add_term(0.5, {{spin_orbital(p, 0), true}, {spin_orbital(p, 0), false}});
    sz.add_term(-0.5, {{spin_orbital(p, 1), true}, {spin_orbital(p, 1), false}});
  }
  return sz;
}

FermionOperator spin_traced_excitation(const std::vector<int>& upper,
                                       const std::vector<int>& lower,
                                       int n_active) {
  if (upper.size() != lower.size() || upper.empty() || upper.size() > 4)
    throw std::invalid_argument("spin_traced_excitation: rank must be 1..4");
  const int rank = static_cast<int>(upper.size());
  for (int i = 0; i < rank; ++i) {
    if (upper[i] < 0 || upper[i] >= n_active || lower[i] < 0 || lower[i] >= n_active)
      throw std::invalid_argument("spin_traced_excitation: index out of range");
  }
  FermionOperator e;
  for (int spins = 0; spins < (1 << rank); ++spins) {
    std::vector<LadderOp> ops;
    ops.reserve(2 * rank);
    for (int i = 0; i < rank; ++i)
      ops.push_back({spin_orbital(upper[i], (spins >> i) & 1), true});
    for (int i = rank - 1; i >= 0; --i)
      ops.push_back({spin_orbital(lower[i], (spins >> i) & 1), false});
    e.add_term(1.0, std::move(ops));
  }
  return e;
}

PauliSum jordan_wigner(const FermionOperator& op) {
  PauliSum out;
  for (const auto& term : op.terms()) {
    PauliSum acc = PauliSum::identity(term.coeff);
    for (const auto& lop : term.ops) {
      const std::uint64_t zmask = (1ull << lop.index) - 1;
      PauliWord wx{1ull << lop.index, zmask};
      PauliWord wy{1ull << lop.index, zmask | (1ull << lop.index)};
      PauliSum ladder;
      ladder.add(wx, 0.5);
      // a = (X + iY)/2 * Z-string, a+ = (X - iY)/2 * Z-string
      ladder.add(wy, std::complex<double>(0.0, lop.create ? -0.5 : 0.5));
      acc = acc * ladder;
    }
    out += acc;
  }
  out.prune();
  return out;
}

}  // namespace qnevpt
