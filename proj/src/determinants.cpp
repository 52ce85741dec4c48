#include "qnevpt/determinants.hpp"

#include <Eigen/Eigenvalues>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace qnevpt {

namespace {

// Enumerates all n-bit masks with k bits set, ascending.
std::vector<std::uint64_t> bit_combinations(int n, int k) {
  std::vector<std::uint64_t> out;
  if (k < 0 || k > n) return out;
  std::uint64_t v = (k == 0) ? 0 : (1ull << k) - 1;
  if (k == 0) return {0};
  const std::uint64_t limit = 1ull << n;
  while (v < limit) {
    out.push_back(v);
    // Gosper's hack
    std::uint64_t c = v & -v, r = v + c;
    v = (((r ^ v) >> 2) / c) | r;
    if (c == 0) break;
  }
  return out;
}

inline int parity_below(std::uint64_t mask, int pos) {
  return std::popcount(mask & ((1ull << pos) - 1)) & 1;
}

}  // namespace

DeterminantSpace determinant_space(int n_orbitals, int n_alpha, int n_beta) {
  if (n_alpha < 0 || n_beta < 0 || n_alpha > n_orbitals || n_beta > n_orbitals)
    throw std::invalid_argument("determinant_space: bad electron counts");
  DeterminantSpace s;
  s.n_orbitals = n_orbitals;
  s.n_alpha = n_alpha;
  s.n_beta = n_beta;
  auto alphas = bit_combinations(n_orbitals, n_alpha);
  auto betas = bit_combinations(n_orbitals, n_beta);
  s.dets.reserve(alphas.size() * betas.size());
  for (std::uint64_t a : alphas)
    for (std::uint64_t b : betas) {
      std::uint64_t mask = 0;
      for (int p = 0; p < n_orbitals; ++p) {
        if ((a >> p) & 1) mask |= 1ull << (2 * p);
        if ((b >> p) & 1) mask |= 1ull << (2 * p + 1);
      }
      s.dets.push_back(mask);
    }
  for (std::size_t i = 0; i < s.dets.size(); ++i) s.index[s.dets[i]] = i;
  return s;
}

std::uint64_t reference_determinant(int n_alpha, int n_beta) {
  std::uint64_t mask = 0;
  for (int p = 0; p < n_alpha; ++p) mask |= 1ull << (2 * p);
  for (int p = 0; p < n_beta; ++p) mask |= 1ull << (2 * p + 1);
  return mask;
}

double slater_condon(std::uint64_t bra, std::uint64_t ket,
                     const Tensor2& h1, const Tensor4& eri) {
  const std::uint64_t diff = bra ^ ket;
  const int n_diff = std::popcount(diff);
  if (n_diff > 4) return 0.0;

  auto spatial = [](int so) { return so >> 1; };
  auto spin = [](int so) { return so & 1; };

  if (n_diff == 0) {
    double e = 0.0;
    for (std::uint64_t occ = ket; occ;) {
      const int p = std::countr_zero(occ);
      occ &= occ - 1;
      e += h1(spatial(p), spatial(p));
      for (std::uint64_t occ2 = ket; occ2;) {
        const int q = std::countr_zero(occ2);
        occ2 &= occ2 - 1;
        e += 0.5 * eri(spatial(p), spatial(p), spatial(q), spatial(q));
        if (spin(p) == spin(q))
          e -= 0.5 * eri(spatial(p), spatial(q), spatial(q), spatial(p));
      }
    }
    return e;
  }

  if (n_diff == 2) {
    const int m = std::countr_zero(diff & ket);   // annihilated in ket
    const int p = std::countr_zero(diff & bra);   // created
    if (spin(m) != spin(p)) return 0.0;
    double v = h1(spatial(m), spatial(p));
    for (std::uint64_t occ = ket & ~diff; occ;) {
      const int q = std::countr_zero(occ);
      occ &= occ - 1;
      v += eri(spatial(m), spatial(p), spatial(q), spatial(q));
      if (spin(q) == spin(m))
        v -= eri(spatial(m), spatial(q), spatial(q), spatial(p));
    }
    const int sign = (parity_below(ket, m) ^ parity_below(bra, p)) ? -1 : 1;
    return sign * v;
  }

  // n_diff == 4: double excitation (m<n annihilated, p<q created)
  std::uint64_t ann = diff & ket, cre = diff & bra;
  const int m = std::countr_zero(ann);
  const int n = std::countr_zero(ann & (ann - 1));
  const int p = std::countr_zero(cre);
  const int q = std::countr_zero(cre & (cre - 1));
  double v = 0.0;
  // pairing (m->p, n->q) and the exchange pairing (m->q, n->p)
  if (spin(m) == spin(p) && spin(n) == spin(q))
    v += eri(spatial(m), spatial(p), spatial(n), spatial(q));
  if (spin(m) == spin(q) && spin(n) == spin(p))
    v -= eri(spatial(m), spatial(q), spatial(n), spatial(p));
  if (v == 0.0) return 0.0;
  // parity of bringing the four operators into position
  int sign = parity_below(ket, m) ^ parity_below(ket & ~(1ull << m), n) ^
             parity_below(bra, p) ^ parity_below(bra & ~(1ull << p), q);
  return sign ? -v : v;
}

Eigen::VectorXd apply_hamiltonian(const DeterminantSpace& space, const Tensor2& h1,
                                  const Tensor4& eri, const Eigen::VectorXd& c) {
  const std::size_t dim = space.dim();
  Eigen::VectorXd out = Eigen::VectorXd::Zero(dim);
  const int n_so = 2 * space.n_orbitals;
  for (std::size_t i = 0; i < dim; ++i) {
    const std::uint64_t ket = space.dets[i];
    const double ci = c[i];
    out[i] += slater_condon(ket, ket, h1, eri) * ci;
    // singles
    for (int m = 0; m < n_so; ++m) {
      if (!((ket >> m) & 1)) continue;
      for (int p = m & 1; p < n_so; p += 2) {
        if ((ket >> p) & 1) continue;
        const std::uint64_t bra = (ket & ~(1ull << m)) | (1ull << p);
        auto it = space.index.find(bra);
        if (it == space.index.end()) continue;
        out[it->second] += slater_condon(bra, ket, h1, eri) * ci;
      }
    }
    // doubles
    for (int m = 0; m < n_so; ++m) {
      if (!((ket >> m) & 1)) continue;
      for (int n = m + 1; n < n_so; ++n) {
        if (!((ket >> n) & 1)) continue;
        for (int p = 0; p < n_so; ++p) {
          if ((ket >> p) & 1) continue;
          for (int q = p + 1; q < n_so; ++q) {
            if ((ket >> q) & 1) continue;
            // S_z conservation
            const int dsz = ((m & 1) + (n & 1)) - ((p & 1) + (q & 1));
            if (dsz != 0) continue;
            const std::uint64_t bra =
                (ket & ~(1ull << m) & ~(1ull << n)) | (1ull << p) | (1ull << q);
            auto it = space.index.find(bra);
            if (it == space.index.end()) continue;
            out[it->second] += slater_condon(bra, ket, h1, eri) * ci;
          }
        }
      }
    }
  }
  return out;
}

namespace {

CasciResult davidson(const ActiveHamiltonian& h, DeterminantSpace space,
                     const CasciOptions& opts) {
  const std::size_t dim = space.dim();
  Eigen::VectorXd diag(dim);
  for (std::size_t i = 0; i < dim; ++i)
    diag[i] = slater_condon(space.dets[i], space.dets[i], h.h1_eff, h.eri_act);

  // start from the lowest-diagonal determinant
  std::size_t start = 0;
  for (std::size_t i = 1; i < dim; ++i)
    if (diag[i] < diag[start]) start = i;

  std::vector<Eigen::VectorXd> basis, sigma;
  Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
  v[start] = 1.0;
  basis.push_back(v);
  sigma.push_back(apply_hamiltonian(space, h.h1_eff, h.eri_act, v));

  CasciResult res;
  res.space = std::move(space);
  double theta = 0.0;
  Eigen::VectorXd x;
  for (int iter = 0; iter < opts.max_davidson_iter; ++iter) {
    const std::size_t m = basis.size();
    Eigen::MatrixXd proj(m, m);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) proj(a, b) = basis[a].dot(sigma[b]);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (proj + proj.transpose()));
    theta = es.eigenvalues()(0);
    Eigen::VectorXd y = es.eigenvectors().col(0);
    x = Eigen::VectorXd::Zero(res.space.dim());
    Eigen::VectorXd hx = Eigen::VectorXd::Zero(res.space.dim());
    for (std::size_t a = 0; a < m; ++a) {
      x += y[a] * basis[a];
      hx += y[a] * sigma[a];
    }
    Eigen::VectorXd resid = hx - theta * x;
    res.iterations = iter + 1;
    if (resid.norm() < opts.tol * std::max(1.0, std::abs(theta)) * 10.0 ||
        m >= res.space.dim()) {
      break;
    }
    // diagonal preconditioner
    for (Eigen::Index i = 0; i < resid.size(); ++i) {
      const double d = diag[i] - theta;
      resid[i] /= (std::abs(d) > 1e-8) ? d : 1e-8;
    }
    // orthogonalize against the subspace (twice for stability)
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis) resid -= b.dot(resid) * b;
    const double nrm = resid.norm();
    if (nrm < 1e-14) break;
    resid /= nrm;
    if (basis.size() > 40) {
      // restart from the current best vector
      basis.clear();
      sigma.clear();
      basis.push_back(x.normalized());
      sigma.push_back(apply_hamiltonian(res.space, h.h1_eff, h.eri_act, basis.back()));
    }
    basis.push_back(resid);
    sigma.push_back(apply_hamiltonian(res.space, h.h1_eff, h.eri_act, resid));
  }
  res.energy = theta;
  res.ci = x.normalized();
  // fix the overall sign for reproducibility
  for (Eigen::Index i = 0; i < res.ci.size(); ++i) {
    if (std::abs(res.ci[i]) > 1e-8) {
      if (res.ci[i] < 0) res.ci = -res.ci;
      break;
    }
  }
  return res;
}

}  // namespace

CasciResult casci_solve(const ActiveHamiltonian& h, const OrbitalSpaces& spaces,
                        const CasciOptions& opts) {
  spaces.validate();
  DeterminantSpace space =
      determinant_space(h.n_active, spaces.n_alpha_active(), spaces.n_beta_active());
  if (space.dim() == 0)
    throw std::invalid_argument("casci_solve: empty determinant space");
  if (space.dim() > opts.max_dimension)
    throw std::runtime_error("casci_solve: determinant space dimension " +
                             std::to_string(space.dim()) + " exceeds budget " +
                             std::to_string(opts.max_dimension));

  if (space.dim() > opts.dense_threshold) return davidson(h, std::move(space), opts);

  const std::size_t dim = space.dim();
  Eigen::MatrixXd H(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const double v = slater_condon(space.dets[i], space.dets[j], h.h1_eff, h.eri_act);
      H(i, j) = v;
      H(j, i) = v;
    }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H);
  CasciResult res;
  res.energy = es.eigenvalues()(0);
  res.ci = es.eigenvectors().col(0);
  res.space = std::move(space);
  res.iterations = 1;
  for (Eigen::Index i = 0; i < res.ci.size(); ++i) {
    if (std::abs(res.ci[i]) > 1e-8) {
      if (res.ci[i] < 0) res.ci = -res.ci;
      break;
    }
  }
  return res;
}

StateVector ci_to_statevector(const CasciResult& r) {
  StateVector psi(2 * r.space.n_orbitals, 0);
  auto& amps = psi.amplitudes();
  std::fill(amps.begin(), amps.end(), cdouble(0.0));
  for (std::size_t i = 0; i < r.space.dim(); ++i) amps[r.space.dets[i]] = r.ci[i];
  return psi;
}

}  // namespace qnevpt
