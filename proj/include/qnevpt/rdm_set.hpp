#pragma once

#include <optional>

#include "qnevpt/tensor.hpp"

namespace qnevpt {

/// Spin-traced reduced density matrices over active spatial orbitals.
/// Index order groups upper indices first: gamma2(p, r, q, s) is the
/// expectation of E^{pr}_{qs}, gamma4(p,r,t,v,q,s,u,w) of E^{prtv}_{qsuw}.
/// pdm4 holds the expectation of the ordered product E^p_q E^r_s E^t_u E^v_w
/// with the same index layout.
struct RDMSet {
  int n_active = 0;
  int n_active_electrons = 0;
  Tensor2 gamma1;
  Tensor4 gamma2;
  Tensor6 gamma3;
  std::optional<Tensor8> gamma4;
  std::optional<Tensor8> pdm4;
};

}  // namespace qnevpt
