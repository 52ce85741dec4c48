#include "qnevpt/eop.hpp"

#include <functional>
#include <stdexcept>

namespace qnevpt {

EPoly epoly_mul(const EPoly& a, const EPoly& b) {
  EPoly out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      if (wa.len + wb.len > EWord::kMaxLen)
        throw std::runtime_error("epoly_mul: word length cap exceeded");
      epoly_add(out, wa.concat(wb), ca * cb);
    }
  return out;
}

EPoly epoly_adjoint(const EPoly& a) {
  EPoly out;
  for (const auto& [w, c] : a) epoly_add(out, w.adjoint(), c);
  return out;
}

EPoly epoly_scale(const EPoly& a, double s) {
  EPoly out;
  for (const auto& [w, c] : a) epoly_add(out, w, c * s);
  return out;
}

void eword_commutator_into(const EWord& a, const EWord& b, double coeff, EPoly& out) {
  // [a1..am, b1..bk] = sum_{i,j} a_<i b_<j [a_i, b_j] b_>j a_>i
  for (int i = 0; i < a.len; ++i) {
    const int p = a.upper(i), q = a.lower(i);
    for (int j = 0; j < b.len; ++j) {
      const int r = b.upper(j), s = b.lower(j);
      auto build = [&](int up, int lo) {
        EWord w;
        for (int t = 0; t < i; ++t) w.f[w.len++] = a.f[t];
        for (int t = 0; t < j; ++t) w.f[w.len++] = b.f[t];
        w.push(up, lo);
        for (int t = j + 1; t < b.len; ++t) w.f[w.len++] = b.f[t];
        for (int t = i + 1; t < a.len; ++t) w.f[w.len++] = a.f[t];
        return w;
      };
      if (q == r) epoly_add(out, build(p, s), coeff);
      if (s == p) epoly_add(out, build(r, q), -coeff);
    }
  }
}

EPoly epoly_commutator(const EPoly& a, const EPoly& b) {
  EPoly out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      if (wa.len + wb.len - 1 > EWord::kMaxLen)
        throw std::runtime_error("epoly_commutator: word length cap exceeded");
      eword_commutator_into(wa, wb, ca * cb, out);
    }
  return out;
}

EWord ActiveSpaceReducer::normalize(const EWord& w) const {
  EWord out = w;
  int next_core = 128, next_virt = 192;
  std::array<int, 256> map;
  map.fill(-1);
  for (int i = 0; i < w.len; ++i) {
    for (int part = 0; part < 2; ++part) {
      const int orb = part == 0 ? w.upper(i) : w.lower(i);
      int mapped = orb;
      if (kind(orb) != Kind::Active) {
        if (map[orb] < 0)
          map[orb] = (kind(orb) == Kind::Core) ? next_core++ : next_virt++;
        mapped = map[orb];
      }
      if (part == 0)
        out.f[i] = static_cast<std::uint16_t>((mapped << 8) | out.lower(i));
      else
        out.f[i] = static_cast<std::uint16_t>((out.upper(i) << 8) | mapped);
    }
  }
  return out;
}

const ActiveSpaceReducer::Reduction& ActiveSpaceReducer::reduce(const EWord& w) {
  const EWord key = normalize(w);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  EPoly acc;
  reduce_impl(key, 1.0, acc);
  Reduction red(acc.begin(), acc.end());
  auto [ins, fresh] = memo_.emplace(key, std::move(red));
  return ins->second;
}

void ActiveSpaceReducer::reduce_impl(const EWord& w, double coeff, EPoly& acc) {
  if (coeff == 0.0) return;
  if (w.len == 0) {
    epoly_add(acc, w, coeff);
    return;
  }
  auto right_elim = [&](int i) {
    return kind(w.lower(i)) == Kind::Virtual || kind(w.upper(i)) == Kind::Core;
  };
  auto left_elim = [&](int i) {
    return kind(w.upper(i)) == Kind::Virtual || kind(w.lower(i)) == Kind::Core;
  };
  auto recurse = [&](const EWord& next, double c) {
    const auto& red = reduce(next);
    for (const auto& [word, rc] : red) epoly_add(acc, word, coeff * c * rc);
  };

  int ri = -1;
  for (int i = w.len - 1; i >= 0; --i)
    if (right_elim(i)) {
      ri = i;
      break;
    }
  if (ri >= 0) {
    if (ri == w.len - 1) {
      if (kind(w.lower(ri)) == Kind::Virtual) return;  // annihilates empty modes
      // upper index is core: survives only as the core number operator
      if (w.upper(ri) != w.lower(ri)) return;
      EWord rest = w;
      rest.len -= 1;
      recurse(rest, 2.0);
      return;
    }
    // move it one step right: A B = B A + [A, B]
    EWord swapped = w;
    std::swap(swapped.f[ri], swapped.f[ri + 1]);
    recurse(swapped, 1.0);
    EPoly comm;
    EWord wa = EWord::one(w.upper(ri), w.lower(ri));
    EWord wb = EWord::one(w.upper(ri + 1), w.lower(ri + 1));
    eword_commutator_into(wa, wb, 1.0, comm);
    for (const auto& [op, c] : comm) {
      EWord shorter;
      for (int t = 0; t < ri; ++t) shorter.f[shorter.len++] = w.f[t];
      shorter.f[shorter.len++] = op.f[0];
      for (int t = ri + 2; t < w.len; ++t) shorter.f[shorter.len++] = w.f[t];
      recurse(shorter, c);
    }
    return;
  }

  int li = -1;
  for (int i = 0; i < w.len; ++i)
    if (left_elim(i)) {
      li = i;
      break;
    }
  if (li >= 0) {
    if (li == 0) {
      if (kind(w.upper(li)) == Kind::Virtual) return;
      if (w.upper(li) != w.lower(li)) return;
      EWord rest;
      for (int t = 1; t < w.len; ++t) rest.f[rest.len++] = w.f[t];
      recurse(rest, 2.0);
      return;
    }
    // move it one step left: B A = A B + [B, A]
    EWord swapped = w;
    std::swap(swapped.f[li - 1], swapped.f[li]);
    recurse(swapped, 1.0);
    EPoly comm;
    EWord wb = EWord::one(w.upper(li - 1), w.lower(li - 1));
    EWord wa = EWord::one(w.upper(li), w.lower(li));
    eword_commutator_into(wb, wa, 1.0, comm);
    for (const auto& [op, c] : comm) {
      EWord shorter;
      for (int t = 0; t < li - 1; ++t) shorter.f[shorter.len++] = w.f[t];
      shorter.f[shorter.len++] = op.f[0];
      for (int t = li + 1; t < w.len; ++t) shorter.f[shorter.len++] = w.f[t];
      recurse(shorter, c);
    }
    return;
  }

  epoly_add(acc, w, coeff);  // pure active
}

EPoly ActiveSpaceReducer::reduce_poly(const EPoly& p) {
  EPoly out;
  for (const auto& [w, c] : p) {
    const auto& red = reduce(w);
    for (const auto& [word, rc] : red) epoly_add(out, word, c * rc);
  }
  return out;
}

const std::vector<PdmExpansionTerm>& pdm_expansion(int k) {
  static std::vector<std::vector<PdmExpansionTerm>> cache = [] {
    std::vector<std::vector<PdmExpansionTerm>> all(5);
    all[1] = {{{}, {0}, {1}}};
    for (int kk = 2; kk <= 4; ++kk) {
      const int us = 2 * (kk - 1), ls = 2 * (kk - 1) + 1;
      std::vector<PdmExpansionTerm> next;
      for (const auto& t : all[kk - 1]) {
        // E^A_B * E^c_d -> E^{A,c}_{B,d} + sum_i delta(B_i, c) E^A_{B: B_i->d}
        PdmExpansionTerm grow = t;
        grow.upper_slots.push_back(us);
        grow.lower_slots.push_back(ls);
        next.push_back(std::move(grow));
        for (std::size_t i = 0; i < t.lower_slots.size(); ++i) {
          PdmExpansionTerm contracted = t;
          contracted.deltas.emplace_back(t.lower_slots[i], us);
          contracted.lower_slots[i] = ls;
          next.push_back(std::move(contracted));
        }
      }
      all[kk] = std::move(next);
    }
    return all;
  }();
  if (k < 1 || k > 4) throw std::invalid_argument("pdm_expansion: rank out of range");
  return cache[k];
}

namespace {

// Evaluates one expansion term at a concrete slot-index assignment.
inline double eval_term(const PdmExpansionTerm& t, const int* idx, const RDMSet& r) {
  for (const auto& [a, b] : t.deltas)
    if (idx[a] != idx[b]) return 0.0;
  const int rank = static_cast<int>(t.upper_slots.size());
  switch (rank) {
    case 1:
      return r.gamma1(idx[t.upper_slots[0]], idx[t.lower_slots[0]]);
    case 2:
      return r.gamma2(idx[t.upper_slots[0]], idx[t.upper_slots[1]],
                      idx[t.lower_slots[0]], idx[t.lower_slots[1]]);
    case 3:
      return r.gamma3(idx[t.upper_slots[0]], idx[t.upper_slots[1]], idx[t.upper_slots[2]],
                      idx[t.lower_slots[0]], idx[t.lower_slots[1]], idx[t.lower_slots[2]]);
    case 4: {
      if (!r.gamma4) throw std::runtime_error("eval_term: gamma4 required");
      return (*r.gamma4)(idx[t.upper_slots[0]], idx[t.upper_slots[1]],
                         idx[t.upper_slots[2]], idx[t.upper_slots[3]],
                         idx[t.lower_slots[0]], idx[t.lower_slots[1]],
                         idx[t.lower_slots[2]], idx[t.lower_slots[3]]);
    }
    default:
      throw std::logic_error("eval_term: bad rank");
  }
}

template <int K>
void for_each_tuple(int n, const std::function<void(const int*)>& fn) {
  int idx[2 * K] = {0};
  const int total = 2 * K;
  while (true) {
    fn(idx);
    int pos = total - 1;
    while (pos >= 0 && ++idx[pos] == n) idx[pos--] = 0;
    if (pos < 0) break;
  }
}

}  // namespace

Tensor4 pdm2_from_rdms(const RDMSet& r) {
  const int n = r.n_active;
  Tensor4 out(n);
  const auto& terms = pdm_expansion(2);
  for_each_tuple<2>(n, [&](const int* idx) {
    double v = 0.0;
    for (const auto& t : terms) v += eval_term(t, idx, r);
    out(idx[0], idx[2], idx[1], idx[3]) = v;
  });
  return out;
}

Tensor6 pdm3_from_rdms(const RDMSet& r) {
  const int n = r.n_active;
  Tensor6 out(n);
  const auto& terms = pdm_expansion(3);
  for_each_tuple<3>(n, [&](const int* idx) {
    double v = 0.0;
    for (const auto& t : terms) v += eval_term(t, idx, r);
    out(idx[0], idx[2], idx[4], idx[1], idx[3], idx[5]) = v;
  });
  return out;
}

Tensor8 pdm4_from_rdms(const RDMSet& r) {
  if (!r.gamma4) throw std::invalid_argument("pdm4_from_rdms: gamma4 missing");
  const int n = r.n_active;
  Tensor8 out(n);
  const auto& terms = pdm_expansion(4);
  for_each_tuple<4>(n, [&](const int* idx) {
    double v = 0.0;
    for (const auto& t : terms) v += eval_term(t, idx, r);
    out(idx[0], idx[2], idx[4], idx[6], idx[1], idx[3], idx[5], idx[7]) = v;
  });
  return out;
}

Tensor8 rdm4_from_pdm4(const RDMSet& r, const Tensor8& pdm4) {
  const int n = r.n_active;
  Tensor8 out(n);
  const auto& terms = pdm_expansion(4);
  for_each_tuple<4>(n, [&](const int* idx) {
    double v = pdm4(idx[0], idx[2], idx[4], idx[6], idx[1], idx[3], idx[5], idx[7]);
    for (const auto& t : terms) {
      if (t.upper_slots.size() == 4) continue;  // identity term solved for
      v -= eval_term(t, idx, r);
    }
    out(idx[0], idx[2], idx[4], idx[6], idx[1], idx[3], idx[5], idx[7]) = v;
  });
  return out;
}

PdmEvaluator::PdmEvaluator(const RDMSet& rdms, bool need_rank4, int core_offset)
    : n_(rdms.n_active), n_core_offset_(core_offset) {
  pdm1_ = rdms.gamma1;
  pdm2_ = pdm2_from_rdms(rdms);
  pdm3_ = pdm3_from_rdms(rdms);
  if (need_rank4) {
    if (rdms.pdm4)
      pdm4_ = *rdms.pdm4;
    else if (rdms.gamma4)
      pdm4_ = pdm4_from_rdms(rdms);
    else
      throw std::invalid_argument("PdmEvaluator: rank-4 data (gamma4 or pdm4) required");
    have4_ = true;
  }
}

double PdmEvaluator::lookup(int rank, const int* idx) const {
  switch (rank) {
    case 0:
      return 1.0;
    case 1:
      return pdm1_(idx[0], idx[1]);
    case 2:
      return pdm2_(idx[0], idx[2], idx[1], idx[3]);
    case 3:
      return pdm3_(idx[0], idx[2], idx[4], idx[1], idx[3], idx[5]);
    case 4:
      if (!have4_) throw std::runtime_error("PdmEvaluator: rank-4 lookup without data");
      return pdm4_(idx[0], idx[2], idx[4], idx[6], idx[1], idx[3], idx[5], idx[7]);
    default:
      throw std::runtime_error("PdmEvaluator: rank out of range");
  }
}

double PdmEvaluator::pure_active_word(const EWord& w) const {
  int idx[8];
  for (int i = 0; i < w.len; ++i) {
    idx[2 * i] = w.upper(i) - n_core_offset_;
    idx[2 * i + 1] = w.lower(i) - n_core_offset_;
  }
  return lookup(w.len, idx);
}

}  // namespace qnevpt
