#pragma once

#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "qnevpt/chem.hpp"
#include "qnevpt/rdm_set.hpp"

namespace qnevpt {

/// Word in the algebra of one-body spin-traced excitations: an ordered
/// product E^{u1}_{l1} ... E^{uk}_{lk} over arbitrary orbital indices.
/// The algebra closes under commutation:
///   [E^a_b, E^c_d] = delta_bc E^a_d - delta_da E^c_b.
struct EWord {
  static constexpr int kMaxLen = 8;
  std::uint8_t len = 0;
  std::array<std::uint16_t, kMaxLen> f{};  // packed (upper << 8) | lower

  static EWord one(int upper, int lower) {
    EWord w;
    w.push(upper, lower);
    return w;
  }

  void push(int upper, int lower) {
    f[len++] = static_cast<std::uint16_t>((upper << 8) | lower);
  }
  int upper(int i) const { return f[i] >> 8; }
  int lower(int i) const { return f[i] & 0xff; }

  EWord adjoint() const {
    EWord w;
    for (int i = len - 1; i >= 0; --i) w.push(lower(i), upper(i));
    return w;
  }

  EWord concat(const EWord& o) const {
    EWord w = *this;
    for (int i = 0; i < o.len; ++i) w.f[w.len++] = o.f[i];
    return w;
  }

  bool operator==(const EWord& o) const {
    if (len != o.len) return false;
    for (int i = 0; i < len; ++i)
      if (f[i] != o.f[i]) return false;
    return true;
  }
};

struct EWordHash {
  std::size_t operator()(const EWord& w) const {
    std::size_t h = w.len;
    for (int i = 0; i < w.len; ++i)
      h = h * 1000003u + w.f[i];
    return h;
  }
};

using EPoly = std::unordered_map<EWord, double, EWordHash>;

inline void epoly_add(EPoly& p, const EWord& w, double c) {
  if (c == 0.0) return;
  auto [it, fresh] = p.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0.0) p.erase(it);
  }
}

EPoly epoly_mul(const EPoly& a, const EPoly& b);
EPoly epoly_adjoint(const EPoly& a);
EPoly epoly_scale(const EPoly& a, double s);

/// [a, b] fully expanded into words of length len(a)+len(b)-1.
EPoly epoly_commutator(const EPoly& a, const EPoly& b);
void eword_commutator_into(const EWord& a, const EWord& b, double coeff, EPoly& out);

/// Reduces <ref| w |ref> over a reference with doubly occupied core,
/// arbitrary active part, and empty virtuals, into a linear combination of
/// pure-active words (which are expectation values of the active state).
/// Results are memoized on the word with external orbital ids normalized,
/// so repeated labels with different core/virtual indices are free.
class ActiveSpaceReducer {
 public:
  explicit ActiveSpaceReducer(const OrbitalSpaces& spaces) : spaces_(spaces) {}

  using Reduction = std::vector<std::pair<EWord, double>>;
  const Reduction& reduce(const EWord& w);

  /// <ref| poly |ref> as a pure-active polynomial.
  EPoly reduce_poly(const EPoly& p);

 private:
  enum class Kind { Core, Active, Virtual };
  Kind kind(int orb) const {
    if (spaces_.is_core(orb)) return Kind::Core;
    if (spaces_.is_active(orb)) return Kind::Active;
    return Kind::Virtual;
  }
  void reduce_impl(const EWord& w, double coeff, EPoly& acc);
  EWord normalize(const EWord& w) const;

  OrbitalSpaces spaces_;
  std::unordered_map<EWord, Reduction, EWordHash> memo_;
};

/// One term of the expansion of an ordered product of k rank-1 excitations
/// into multi-rank excitations: product of Kronecker deltas among the 2k
/// index slots times one spin-traced excitation of rank <= k.
/// Slot numbering: factor i contributes upper slot 2i and lower slot 2i+1.
struct PdmExpansionTerm {
  std::vector<std::pair<int, int>> deltas;  // (lower slot, upper slot) pairs
  std::vector<int> upper_slots;
  std::vector<int> lower_slots;
};

/// E^{s0}_{s1} E^{s2}_{s3} ... expansion, derived once from the commutator
/// identity. The rank-k identity term (no deltas) comes first.
const std::vector<PdmExpansionTerm>& pdm_expansion(int k);

/// Expectations of ordered products of rank-1 excitations, evaluated from
/// spin-traced RDMs via pdm_expansion. Rank 4 requires gamma4 or pdm4.
class PdmEvaluator {
 public:
  explicit PdmEvaluator(const RDMSet& rdms, bool need_rank4, int core_offset = 0);

  double pure_active_word(const EWord& w) const;  // global orbital ids
  double lookup(int rank, const int* idx) const;  // active-local ids

  const Tensor8& pdm4() const { return pdm4_; }

 private:
  int n_ = 0;
  int n_core_offset_ = 0;
  Tensor2 pdm1_;
  Tensor4 pdm2_;
  Tensor6 pdm3_;
  Tensor8 pdm4_;
  bool have4_ = false;
};

/// Ordered-product tensor of rank k from spin-traced RDMs.
Tensor4 pdm2_from_rdms(const RDMSet& rdms);
Tensor6 pdm3_from_rdms(const RDMSet& rdms);
Tensor8 pdm4_from_rdms(const RDMSet& rdms);
/// Inverse of pdm4_from_rdms at fixed lower RDMs.
Tensor8 rdm4_from_pdm4(const RDMSet& rdms, const Tensor8& pdm4);

}  // namespace qnevpt
