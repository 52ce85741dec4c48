#include "qnevpt/chem.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qnevpt {

void OrbitalSpaces::validate() const {
  if (n_core < 0 || n_active < 0 || n_virtual < 0 || n_active_electrons < 0)
    throw std::invalid_argument("OrbitalSpaces: negative count");
  if (n_core * 2 + n_active_electrons != total_electrons)
    throw std::invalid_argument("OrbitalSpaces: electron bookkeeping mismatch");
  if (n_active_electrons > 2 * n_active)
    throw std::invalid_argument("OrbitalSpaces: too many active electrons");
  if ((n_active_electrons + spin_2s) % 2 != 0 || n_beta_active() < 0 ||
      n_alpha_active() > n_active || n_beta_active() > n_active)
    throw std::invalid_argument("OrbitalSpaces: inconsistent spin projection");
}

OrbitalSpaces OrbitalSpaces::cas(int n_orbitals, int total_electrons, int spin_2s,
                                 int n_core, int n_active) {
  OrbitalSpaces s;
  s.n_core = n_core;
  s.n_active = n_active;
  s.n_virtual = n_orbitals - n_core - n_active;
  s.total_electrons = total_electrons;
  s.n_active_electrons = total_electrons - 2 * n_core;
  s.spin_2s = spin_2s;
  if (s.n_virtual < 0)
    throw std::invalid_argument("OrbitalSpaces: partition exceeds orbital count");
  s.validate();
  return s;
}

void MOIntegrals::check_symmetries(double tol) const {
  for (int p = 0; p < n_orbitals; ++p)
    for (int q = 0; q <= p; ++q)
      if (std::abs(h1(p, q) - h1(q, p)) > tol)
        throw std::runtime_error("MOIntegrals: h1 not symmetric");
  for (int p = 0; p < n_orbitals; ++p)
    for (int q = 0; q < n_orbitals; ++q)
      for (int r = 0; r < n_orbitals; ++r)
        for (int s = 0; s < n_orbitals; ++s) {
          double v = eri(p, q, r, s);
          if (std::abs(v - eri(q, p, r, s)) > tol ||
              std::abs(v - eri(p, q, s, r)) > tol ||
              std::abs(v - eri(r, s, p, q)) > tol)
            throw std::runtime_error("MOIntegrals: eri not 8-fold symmetric");
        }
}

namespace {

void set_eri_symmetric(Tensor4& eri, int p, int q, int r, int s, double v) {
  eri(p, q, r, s) = v;
  eri(q, p, r, s) = v;
  eri(p, q, s, r) = v;
  eri(q, p, s, r) = v;
  eri(r, s, p, q) = v;
  eri(s, r, p, q) = v;
  eri(r, s, q, p) = v;
  eri(s, r, q, p) = v;
}

int parse_header_int(const std::string& header, const std::string& key) {
  auto pos = header.find(key);
  if (pos == std::string::npos)
    throw std::runtime_error("FCIDUMP header: missing " + key);
  pos += key.size();
  while (pos < header.size() && (header[pos] == '=' || std::isspace((unsigned char)header[pos])))
    ++pos;
  std::size_t end = pos;
  while (end < header.size() &&
         (std::isdigit((unsigned char)header[end]) || header[end] == '-' || header[end] == '+'))
    ++end;
  if (end == pos)
    throw std::runtime_error("FCIDUMP header: malformed value for " + key);
  return std::stoi(header.substr(pos, end - pos));
}

double parse_value(const std::string& token, int line_no) {
  std::string t = token;
  for (auto& c : t)
    if (c == 'D' || c == 'd') c = 'E';
  std::size_t used = 0;
  double v;
  try {
    v = std::stod(t, &used);
  } catch (const std::exception&) {
    throw std::runtime_error("FCIDUMP line " + std::to_string(line_no) +
                             ": non-numeric value '" + token + "'");
  }
  if (used != t.size())
    throw std::runtime_error("FCIDUMP line " + std::to_string(line_no) +
                             ": non-numeric value '" + token + "'");
  return v;
}

}  // namespace

MOIntegrals parse_fcidump(std::istream& in) {
  std::string line;
  std::string header;
  bool have_header = false;
  int line_no = 0;
  // accumulate the namelist until &END (or / in some dialects)
  while (std::getline(in, line)) {
    ++line_no;
    std::string upper = line;
    std::transform(upper.begin(), upper.end(), upper.begin(), ::toupper);
    header += " " + upper;
    if (upper.find("&END") != std::string::npos ||
        upper.find('/') != std::string::npos) {
      have_header = true;
      break;
    }
  }
  if (!have_header || header.find("&FCI") == std::string::npos)
    throw std::runtime_error("FCIDUMP header: missing &FCI namelist");

  MOIntegrals ints;
  ints.n_orbitals = parse_header_int(header, "NORB");
  ints.n_electrons = parse_header_int(header, "NELEC");
  ints.ms2 = header.find("MS2") != std::string::npos ? parse_header_int(header, "MS2") : 0;
  if (ints.n_orbitals <= 0 || ints.n_orbitals > 64)
    throw std::runtime_error("FCIDUMP header: NORB out of supported range");
  if (ints.n_electrons < 0 || ints.n_electrons > 2 * ints.n_orbitals)
    throw std::runtime_error("FCIDUMP header: NELEC out of range");
  ints.h1 = Tensor2(ints.n_orbitals);
  ints.eri = Tensor4(ints.n_orbitals);

  const int n = ints.n_orbitals;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string vtok;
    if (!(ls >> vtok)) continue;  // blank line
    double v = parse_value(vtok, line_no);
    long p, q, r, s;
    if (!(ls >> p >> q >> r >> s))
      throw std::runtime_error("FCIDUMP line " + std::to_string(line_no) +
                               ": expected four indices");
    for (long idx : {p, q, r, s})
      if (idx < 0 || idx > n)
        throw std::runtime_error("FCIDUMP line " + std::to_string(line_no) +
                                 ": index " + std::to_string(idx) + " out of range 0.." +
                                 std::to_string(n));
    if (p == 0 && q == 0 && r == 0 && s == 0) {
      ints.e_nuclear = v;
    } else if (r == 0 && s == 0) {
      if (p == 0 || q == 0)
        throw std::runtime_error("FCIDUMP line " + std::to_string(line_no) +
                                 ": malformed one-electron entry");
      ints.h1(p - 1, q - 1) = v;
      ints.h1(q - 1, p - 1) = v;
    } else if (p != 0 && q != 0 && r != 0 && s != 0) {
      set_eri_symmetric(ints.eri, (int)p - 1, (int)q - 1, (int)r - 1, (int)s - 1, v);
    } else {
      throw std::runtime_error("FCIDUMP line " + std::to_string(line_no) +
                               ": malformed index pattern");
    }
  }
  return ints;
}

MOIntegrals parse_fcidump_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open FCIDUMP file: " + path);
  return parse_fcidump(f);
}

void write_fcidump(std::ostream& out, const MOIntegrals& ints) {
  const int n = ints.n_orbitals;
  out << "&FCI NORB=" << n << ",NELEC=" << ints.n_electrons << ",MS2=" << ints.ms2 << ",\n";
  out << " ORBSYM=";
  for (int i = 0; i < n; ++i) out << "1,";
  out << "\n ISYM=1,\n&END\n";
  char buf[64];
  auto emit = [&](double v, int p, int q, int r, int s) {
    std::snprintf(buf, sizeof(buf), "%23.16e %3d %3d %3d %3d\n", v, p, q, r, s);
    out << buf;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j)
      for (int k = 0; k <= i; ++k) {
        const int lmax = (k == i) ? j : k;
        for (int l = 0; l <= lmax; ++l) {
          double v = ints.eri(i, j, k, l);
          if (v != 0.0) emit(v, i + 1, j + 1, k + 1, l + 1);
        }
      }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j)
      if (ints.h1(i, j) != 0.0) emit(ints.h1(i, j), i + 1, j + 1, 0, 0);
  emit(ints.e_nuclear, 0, 0, 0, 0);
}

MOIntegrals reorder_orbitals(const MOIntegrals& ints, const std::vector<int>& order) {
  const int n = ints.n_orbitals;
  if ((int)order.size() != n)
    throw std::invalid_argument("reorder_orbitals: permutation size mismatch");
  std::vector<bool> seen(n, false);
  for (int src : order) {
    if (src < 0 || src >= n || seen[src])
      throw std::invalid_argument("reorder_orbitals: not a permutation");
    seen[src] = true;
  }
  MOIntegrals out = ints;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      out.h1(p, q) = ints.h1(order[p], order[q]);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s)
          out.eri(p, q, r, s) = ints.eri(order[p], order[q], order[r], order[s]);
  return out;
}

ActiveHamiltonian build_active_hamiltonian(const MOIntegrals& ints,
                                           const OrbitalSpaces& spaces) {
  spaces.validate();
  if (spaces.n_orbitals() != ints.n_orbitals)
    throw std::invalid_argument("build_active_hamiltonian: spaces do not match integrals");
  const int nc = spaces.n_core, na = spaces.n_active;
  ActiveHamiltonian h;
  h.n_active = na;
  h.h1_eff = Tensor2(na);
  h.eri_act = Tensor4(na);

  double e_core = 0.0;
  for (int i = 0; i < nc; ++i) {
    e_core += 2.0 * ints.h1(i, i);
    for (int j = 0; j < nc; ++j)
      e_core += 2.0 * ints.eri(i, i, j, j) - ints.eri(i, j, j, i);
  }
  h.e_frozen = ints.e_nuclear + e_core;

  for (int t = 0; t < na; ++t)
    for (int u = 0; u < na; ++u) {
      double v = ints.h1(nc + t, nc + u);
      for (int i = 0; i < nc; ++i)
        v += 2.0 * ints.eri(nc + t, nc + u, i, i) - ints.eri(nc + t, i, i, nc + u);
      h.h1_eff(t, u) = v;
    }

  for (int t = 0; t < na; ++t)
    for (int u = 0; u < na; ++u)
      for (int v = 0; v < na; ++v)
        for (int w = 0; w < na; ++w)
          h.eri_act(t, u, v, w) = ints.eri(nc + t, nc + u, nc + v, nc + w);
  return h;
}

double hartree_fock_active_energy(const ActiveHamiltonian& h, const OrbitalSpaces& spaces) {
  const int na_el = spaces.n_alpha_active();
  const int nb_el = spaces.n_beta_active();
  // occupation per active spatial orbital for the reference determinant
  std::vector<int> occ_a(h.n_active, 0), occ_b(h.n_active, 0);
  for (int i = 0; i < na_el; ++i) occ_a[i] = 1;
  for (int i = 0; i < nb_el; ++i) occ_b[i] = 1;
  double e = 0.0;
  for (int p = 0; p < h.n_active; ++p) e += (occ_a[p] + occ_b[p]) * h.h1_eff(p, p);
  for (int p = 0; p < h.n_active; ++p)
    for (int q = 0; q < h.n_active; ++q) {
      const double np = occ_a[p] + occ_b[p], nq = occ_a[q] + occ_b[q];
      e += 0.5 * np * nq * h.eri_act(p, p, q, q);
      const double same = occ_a[p] * occ_a[q] + occ_b[p] * occ_b[q];
      e -= 0.5 * same * h.eri_act(p, q, q, p);
    }
  return e;
}

}  // namespace qnevpt
