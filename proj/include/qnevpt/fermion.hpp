#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qnevpt/pauli.hpp"

namespace qnevpt {

/// One creation or annihilation operator acting on a spin orbital.
/// Spin orbitals are interleaved: 2p = p-up, 2p+1 = p-down.
struct LadderOp {
  std::uint16_t index = 0;
  bool create = false;

  bool operator==(const LadderOp& o) const {
    return index == o.index && create == o.create;
  }
};

inline std::uint16_t spin_orbital(int spatial, int spin) {
  return static_cast<std::uint16_t>(2 * spatial + spin);
}

/// Sparse second-quantized operator: a sum of coefficient-weighted ladder
/// strings. No normal ordering is implied by the representation.
class FermionOperator {
 public:
  struct Term {
    std::complex<double> coeff;
    std::vector<LadderOp> ops;
  };

  FermionOperator() = default;

  void add_term(std::complex<double> coeff, std::vector<LadderOp> ops);
  const std::vector<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  FermionOperator& operator+=(const FermionOperator& o);
  FermionOperator operator+(const FermionOperator& o) const;
  FermionOperator operator*(const FermionOperator& o) const;
  FermionOperator operator*(std::complex<double> s) const;

  /// Hermitian conjugate.
  FermionOperator adjoint() const;

  /// Rewrites into normal order (creations left of annihilations, indices
  /// descending within each group), expanding anticommutators. Equal terms
  /// are merged and zero strings dropped.
  FermionOperator normal_ordered(double tol = 1e-14) const;

 private:
  std::vector<Term> terms_;
};

/// Number operator on one spatial orbital (both spins).
FermionOperator spatial_number_operator(int p);

/// Total particle number over n_spatial orbitals.
FermionOperator total_number_operator(int n_spatial);

/// Total S_z (in units of hbar) over n_spatial orbitals.
FermionOperator total_sz_operator(int n_spatial);

/// Spin-traced excitation operator of the given rank.
/// rank 1: sum over spin of a+_{p,s} a_{q,s}.
/// rank k: sum over s1..sk of a+_{p1,s1}..a+_{pk,sk} a_{qk,sk}..a_{q1,s1},
/// i.e. creation operators in upper-index order, annihilations reversed.
FermionOperator spin_traced_excitation(const std::vector<int>& upper,
                                       const std::vector<int>& lower,
                                       int n_active);

/// Jordan-Wigner image: a_j -> (X_j + iY_j)/2 * Z_{<j} and the conjugate for
/// creations. Products expand and merge; Hermitian inputs produce real
/// coefficients.
PauliSum jordan_wigner(const FermionOperator& op);

}  // namespace qnevpt
