#include <Eigen/Eigenvalues>
#include <bit>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "qnevpt/chem.hpp"
#include "qnevpt/determinants.hpp"
#include "qnevpt/hamiltonian.hpp"
#include "support/dense.hpp"
#include "support/random_chem.hpp"

using namespace qnevpt;
namespace qt = qnevpt::testing;

namespace {
std::string data_path(const std::string& name) {
  return std::string(QNEVPT_TEST_DATA_DIR) + "/fcidump/" + name;
}
}  // namespace

TEST_CASE("fcidump: one-orbital system round trips the stated values") {
  std::istringstream in(
      "&FCI NORB=1,NELEC=2,MS2=0,\n ORBSYM=1,\n ISYM=1,\n&END\n"
      " 0.675 1 1 1 1\n"
      "-1.25  1 1 0 0\n"
      " 0.715 0 0 0 0\n");
  auto ints = parse_fcidump(in);
  CHECK(ints.n_orbitals == 1);
  CHECK(ints.n_electrons == 2);
  CHECK(ints.h1(0, 0) == doctest::Approx(-1.25));
  CHECK(ints.eri(0, 0, 0, 0) == doctest::Approx(0.675));
  CHECK(ints.e_nuclear == doctest::Approx(0.715));
}

TEST_CASE("fcidump: one-electron entries fill both triangles") {
  std::istringstream in(
      "&FCI NORB=2,NELEC=2,MS2=0,\n&END\n"
      "0.5 1 2 0 0\n");
  auto ints = parse_fcidump(in);
  CHECK(ints.h1(0, 1) == doctest::Approx(0.5));
  CHECK(ints.h1(1, 0) == doctest::Approx(0.5));
}

TEST_CASE("fcidump: malformed inputs raise named errors") {
  {
    std::istringstream in("&FCI NELEC=2,MS2=0,\n&END\n");
    CHECK_THROWS_WITH_AS(parse_fcidump(in), doctest::Contains("NORB"),
                         std::runtime_error);
  }
  {
    std::istringstream in("&FCI NORB=2,NELEC=2,MS2=0,\n&END\n1.0 3 1 0 0\n");
    CHECK_THROWS_WITH_AS(parse_fcidump(in), doctest::Contains("out of range"),
                         std::runtime_error);
  }
  {
    std::istringstream in("&FCI NORB=2,NELEC=2,MS2=0,\n&END\nfoo 1 1 0 0\n");
    CHECK_THROWS_WITH_AS(parse_fcidump(in), doctest::Contains("non-numeric"),
                         std::runtime_error);
  }
}

TEST_CASE("fcidump: fortran exponents are accepted") {
  std::istringstream in("&FCI NORB=1,NELEC=2,MS2=0,\n&END\n1.5D-2 1 1 0 0\n");
  auto ints = parse_fcidump(in);
  CHECK(ints.h1(0, 0) == doctest::Approx(0.015));
}

TEST_CASE("fcidump: write/parse round trip is exact") {
  auto ints = qt::random_integrals(4, 11, 1, 1);
  ints.n_electrons = 4;
  std::ostringstream os;
  write_fcidump(os, ints);
  std::istringstream is(os.str());
  auto back = parse_fcidump(is);
  CHECK(back.h1.max_abs_diff(ints.h1) == 0.0);
  CHECK(back.eri.max_abs_diff(ints.eri) == 0.0);
  CHECK(back.e_nuclear == ints.e_nuclear);
  back.check_symmetries();
}

TEST_CASE("active hamiltonian: all-active is the identity embedding") {
  auto ints = qt::random_integrals(3, 5);
  auto spaces = OrbitalSpaces::cas(3, 4, 0, 0, 3);
  auto h = build_active_hamiltonian(ints, spaces);
  CHECK(h.e_frozen == doctest::Approx(ints.e_nuclear));
  CHECK(h.h1_eff.max_abs_diff(ints.h1) < 1e-15);
  CHECK(h.eri_act.max_abs_diff(ints.eri) < 1e-15);
}

TEST_CASE("active hamiltonian: single-core closed form") {
  MOIntegrals ints;
  ints.n_orbitals = 2;
  ints.h1 = Tensor2(2);
  ints.eri = Tensor4(2);
  ints.e_nuclear = 0.3;
  ints.n_electrons = 4;
  ints.h1(0, 0) = -2.0;
  ints.eri(0, 0, 0, 0) = 1.0;
  auto spaces = OrbitalSpaces::cas(2, 4, 0, 1, 1);
  auto h = build_active_hamiltonian(ints, spaces);
  CHECK(h.e_frozen == doctest::Approx(0.3 - 4.0 + 1.0));
}

TEST_CASE("slater-condon matches the dense fermionic matrix") {
  const int n = 3;
  auto ints = qt::random_integrals(n, 23);
  auto spaces = OrbitalSpaces::cas(n, 2, 0, 0, n);
  auto h = build_active_hamiltonian(ints, spaces);
  auto hf = active_hamiltonian_fermion(h);
  qt::CMat dense = qt::fermion_matrix(hf, 2 * n);

  auto space = determinant_space(n, 1, 1);
  for (std::size_t i = 0; i < space.dim(); ++i)
    for (std::size_t j = 0; j < space.dim(); ++j) {
      double sc = slater_condon(space.dets[i], space.dets[j], h.h1_eff, h.eri_act);
      double dm = dense((Eigen::Index)space.dets[i], (Eigen::Index)space.dets[j]).real();
      CHECK(sc == doctest::Approx(dm).epsilon(1e-10));
    }
  // also a 3-electron (open-shell) sector
  auto space3 = determinant_space(n, 2, 1);
  for (std::size_t i = 0; i < space3.dim(); ++i)
    for (std::size_t j = 0; j < space3.dim(); ++j) {
      double sc = slater_condon(space3.dets[i], space3.dets[j], h.h1_eff, h.eri_act);
      double dm = dense((Eigen::Index)space3.dets[i], (Eigen::Index)space3.dets[j]).real();
      CHECK(sc == doctest::Approx(dm).epsilon(1e-10));
    }
}

TEST_CASE("casci: one orbital, two electrons in closed form") {
  MOIntegrals ints;
  ints.n_orbitals = 1;
  ints.h1 = Tensor2(1);
  ints.eri = Tensor4(1);
  ints.h1(0, 0) = -1.25;
  ints.eri(0, 0, 0, 0) = 0.675;
  ints.n_electrons = 2;
  auto spaces = OrbitalSpaces::cas(1, 2, 0, 0, 1);
  auto h = build_active_hamiltonian(ints, spaces);
  auto r = casci_solve(h, spaces);
  CHECK(r.energy == doctest::Approx(2.0 * -1.25 + 0.675));
}

TEST_CASE("casci: H2/STO-3G ground state matches the qubit-space oracle") {
  auto ints = parse_fcidump_file(data_path("h2_sto3g_0.7354.fcidump"));
  auto spaces = OrbitalSpaces::cas(ints.n_orbitals, ints.n_electrons, ints.ms2, 0, 2);
  auto h = build_active_hamiltonian(ints, spaces);
  auto r = casci_solve(h, spaces);

  // dense diagonalization of the JW Hamiltonian restricted to the sector
  auto hq = active_hamiltonian_qubit(h);
  qt::CMat m = qt::pauli_sum_matrix(hq, 4);
  std::vector<int> sector;
  for (int idx = 0; idx < 16; ++idx) {
    int n_up = std::popcount((unsigned)idx & 0b0101u);
    int n_dn = std::popcount((unsigned)idx & 0b1010u);
    if (n_up == 1 && n_dn == 1) sector.push_back(idx);
  }
  qt::CMat sub(sector.size(), sector.size());
  for (std::size_t i = 0; i < sector.size(); ++i)
    for (std::size_t j = 0; j < sector.size(); ++j) sub(i, j) = m(sector[i], sector[j]);
  Eigen::SelfAdjointEigenSolver<qt::CMat> es(sub);
  CHECK(r.energy == doctest::Approx(es.eigenvalues()(0)).epsilon(1e-10));

  // sanity: total energy close to the known FCI value for this geometry
  CHECK(r.energy + h.e_frozen == doctest::Approx(-1.137).epsilon(2e-3));
}

TEST_CASE("casci: energy invariant under active orbital relabeling") {
  auto ints = qt::random_integrals(4, 31);
  auto spaces = OrbitalSpaces::cas(4, 4, 0, 0, 4);
  auto base = casci_solve(build_active_hamiltonian(ints, spaces), spaces);
  auto permuted = reorder_orbitals(ints, {2, 0, 3, 1});
  auto perm = casci_solve(build_active_hamiltonian(permuted, spaces), spaces);
  CHECK(base.energy == doctest::Approx(perm.energy).epsilon(1e-10));
}

TEST_CASE("casci: core embedding equals frozen-core full CI") {
  const int n = 4, nelec = 6;
  auto ints = qt::random_integrals(n, 7, /*n_core=*/2, /*n_virtual=*/1);
  ints.n_electrons = nelec;
  auto spaces = OrbitalSpaces::cas(n, nelec, 0, 2, 2);
  auto h = build_active_hamiltonian(ints, spaces);
  auto active = casci_solve(h, spaces);

  // full-space CI restricted to determinants with both core orbitals doubly
  // occupied, built directly from the raw integrals
  auto full = determinant_space(n, nelec / 2, nelec / 2);
  std::vector<std::uint64_t> kept;
  const std::uint64_t core_mask = 0b1111;  // spin orbitals of spatial 0,1
  for (auto d : full.dets)
    if ((d & core_mask) == core_mask) kept.push_back(d);
  Eigen::MatrixXd H(kept.size(), kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i)
    for (std::size_t j = 0; j < kept.size(); ++j)
      H(i, j) = slater_condon(kept[i], kept[j], ints.h1, ints.eri);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H);

  CHECK(active.energy + h.e_frozen ==
        doctest::Approx(es.eigenvalues()(0) + ints.e_nuclear).epsilon(1e-10));
}

TEST_CASE("casci: davidson agrees with dense diagonalization") {
  auto ints = qt::random_integrals(4, 77);
  auto spaces = OrbitalSpaces::cas(4, 4, 0, 0, 4);
  auto h = build_active_hamiltonian(ints, spaces);
  CasciOptions dense_opts;
  auto dense = casci_solve(h, spaces, dense_opts);
  CasciOptions dav_opts;
  dav_opts.dense_threshold = 1;  // force the iterative path
  auto dav = casci_solve(h, spaces, dav_opts);
  CHECK(dense.energy == doctest::Approx(dav.energy).epsilon(1e-10));
  CHECK(std::abs(std::abs(dense.ci.dot(dav.ci)) - 1.0) < 1e-8);
}

TEST_CASE("casci: refusal above the dimension budget names the dimension") {
  auto ints = qt::random_integrals(4, 13);
  auto spaces = OrbitalSpaces::cas(4, 4, 0, 0, 4);
  auto h = build_active_hamiltonian(ints, spaces);
  CasciOptions opts;
  opts.max_dimension = 3;
  CHECK_THROWS_WITH_AS(casci_solve(h, spaces, opts), doctest::Contains("36"),
                       std::runtime_error);
}

TEST_CASE("hf reference energy equals the qubit expectation") {
  auto ints = parse_fcidump_file(data_path("h4_sto3g_1.0.fcidump"));
  auto spaces = OrbitalSpaces::cas(ints.n_orbitals, ints.n_electrons, ints.ms2, 0, 4);
  auto h = build_active_hamiltonian(ints, spaces);
  auto hq = active_hamiltonian_qubit(h);
  StateVector hf(2 * h.n_active, reference_determinant(2, 2));
  CHECK(hf.expectation(hq) ==
        doctest::Approx(hartree_fock_active_energy(h, spaces)).epsilon(1e-10));
}

TEST_CASE("ci vector embeds as a normalized statevector") {
  auto ints = parse_fcidump_file(data_path("h2_sto3g_0.7354.fcidump"));
  auto spaces = OrbitalSpaces::cas(2, 2, 0, 0, 2);
  auto h = build_active_hamiltonian(ints, spaces);
  auto r = casci_solve(h, spaces);
  auto psi = ci_to_statevector(r);
  CHECK(std::abs(psi.norm() - 1.0) < 1e-12);
  auto hq = active_hamiltonian_qubit(h);
  CHECK(psi.expectation(hq) == doctest::Approx(r.energy).epsilon(1e-10));
}
