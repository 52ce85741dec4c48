#include <complex>

#include "doctest.h"
#include "qnevpt/fermion.hpp"
#include "qnevpt/pauli.hpp"
#include "support/dense.hpp"

using namespace qnevpt;
namespace qt = qnevpt::testing;

TEST_CASE("pauli word products and commutation") {
  auto X = PauliWord::parse("X");
  auto Y = PauliWord::parse("Y");
  auto Z = PauliWord::parse("Z");

  auto [xy, k1] = pauli_product(X, Y);
  CHECK(xy == Z);
  CHECK(k1 == 1);  // XY = iZ
  auto [yx, k2] = pauli_product(Y, X);
  CHECK(yx == Z);
  CHECK(k2 == 3);  // YX = -iZ

  CHECK(!X.commutes_with(Z));
  CHECK(X.commutes_with(X));
  CHECK(PauliWord::parse("XX").commutes_with(PauliWord::parse("YY")));
  CHECK(!PauliWord::parse("XX").qubitwise_commutes_with(PauliWord::parse("YY")));
  CHECK(PauliWord::parse("XI").qubitwise_commutes_with(PauliWord::parse("XZ")));

  CHECK(PauliWord::parse("IZZI").str(4) == "IZZI");
}

TEST_CASE("pauli sum algebra matches dense matrices") {
  std::mt19937_64 rng(7);
  const int nq = 3;
  auto random_sum = [&](int terms) {
    PauliSum s;
    for (int t = 0; t < terms; ++t) {
      PauliWord w{rng() & 7, rng() & 7};
      s.add(w, {(double)(rng() % 100) / 25.0 - 2.0, (double)(rng() % 100) / 25.0 - 2.0});
    }
    return s;
  };
  for (int rep = 0; rep < 5; ++rep) {
    PauliSum a = random_sum(4), b = random_sum(5);
    auto lhs = qt::pauli_sum_matrix(a * b, nq);
    qt::CMat rhs = qt::pauli_sum_matrix(a, nq) * qt::pauli_sum_matrix(b, nq);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
    qt::CMat sum = qt::pauli_sum_matrix(a + b, nq);
    CHECK((sum - qt::pauli_sum_matrix(a, nq) - qt::pauli_sum_matrix(b, nq))
              .cwiseAbs()
              .maxCoeff() < 1e-12);
  }
}

TEST_CASE("jordan-wigner of the number operator") {
  FermionOperator n00;
  n00.add_term(1.0, {{0, true}, {0, false}});
  PauliSum p = jordan_wigner(n00);
  CHECK(p.size() == 2);
  CHECK(p.coefficient(PauliWord{}).real() == doctest::Approx(0.5));
  CHECK(p.coefficient(PauliWord::parse("Z")).real() == doctest::Approx(-0.5));
}

TEST_CASE("jordan-wigner equals dense ladder matrices on 4 modes") {
  for (unsigned seed : {1u, 2u, 3u, 4u}) {
    auto f = qt::random_fermion_operator(4, 6, seed);
    auto jw = qt::pauli_sum_matrix(jordan_wigner(f), 4);
    auto direct = qt::fermion_matrix(f, 4);
    CHECK((jw - direct).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("jordan-wigner is a matrix homomorphism") {
  for (unsigned seed : {11u, 12u}) {
    auto a = qt::random_fermion_operator(4, 4, seed, 3);
    auto b = qt::random_fermion_operator(4, 4, seed + 100, 3);
    auto lhs = qt::pauli_sum_matrix(jordan_wigner(a * b), 4);
    qt::CMat rhs = qt::pauli_sum_matrix(jordan_wigner(a), 4) *
               qt::pauli_sum_matrix(jordan_wigner(b), 4);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-11);
  }
}

TEST_CASE("hermitian fermion operators map to real pauli sums") {
  for (unsigned seed : {21u, 22u, 23u}) {
    auto f = qt::random_fermion_operator(4, 5, seed);
    auto h = f + f.adjoint();
    PauliSum p = jordan_wigner(h);
    CHECK(p.max_imag() < 1e-12);
  }
}

TEST_CASE("normal ordering preserves the operator") {
  for (unsigned seed : {31u, 32u, 33u}) {
    auto f = qt::random_fermion_operator(3, 5, seed);
    auto no = f.normal_ordered();
    auto m1 = qt::fermion_matrix(f, 3);
    auto m2 = qt::fermion_matrix(no, 3);
    CHECK((m1 - m2).cwiseAbs().maxCoeff() < 1e-11);
  }
}

TEST_CASE("spin-traced excitation: rank-1 number operator") {
  // closed-shell determinant with spatial orbital 0 doubly occupied (2 modes)
  auto e00 = spin_traced_excitation({0}, {0}, 2);
  StateVector psi(4, 0b0011);  // spin orbitals 0,1 occupied
  CHECK(psi.fermion_expectation(e00).real() == doctest::Approx(2.0));
  auto e11 = spin_traced_excitation({1}, {1}, 2);
  CHECK(psi.fermion_expectation(e11).real() == doctest::Approx(0.0));
}

TEST_CASE("spin-traced excitation: rank-2 product identity") {
  // E^p_q E^r_s == E^{pr}_{qs} + delta_qr E^p_s on a 2-orbital register
  const int n = 2;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          qt::CMat lhs = qt::fermion_matrix(
              spin_traced_excitation({p}, {q}, n) * spin_traced_excitation({r}, {s}, n), 4);
          qt::CMat rhs = qt::fermion_matrix(spin_traced_excitation({p, r}, {q, s}, n), 4);
          if (q == r)
            rhs += qt::fermion_matrix(spin_traced_excitation({p}, {s}, n), 4);
          CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
        }
}

TEST_CASE("spin-traced excitation: rank 3 annihilates 2-electron states") {
  const int n = 2;
  std::mt19937_64 rng(5);
  // random 2-electron state on 4 spin orbitals
  StateVector psi(4);
  auto& amps = psi.amplitudes();
  amps[0b0011] = 0;
  for (std::uint64_t idx = 0; idx < 16; ++idx) {
    if (std::popcount(idx) != 2) continue;
    amps[idx] = {(double)(rng() % 100) / 50.0 - 1.0, (double)(rng() % 100) / 50.0 - 1.0};
  }
  psi.normalize();
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r) {
        auto e3 = spin_traced_excitation({p, q, r}, {r, q, p}, n);
        CHECK(std::abs(psi.fermion_expectation(e3)) < 1e-12);
      }
}

TEST_CASE("spin-traced excitation rejects bad indices") {
  CHECK_THROWS_AS(spin_traced_excitation({2}, {0}, 2), std::invalid_argument);
  CHECK_THROWS_AS(spin_traced_excitation({0, 1}, {0}, 2), std::invalid_argument);
}
