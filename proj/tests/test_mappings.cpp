#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "polariton/integrals.hpp"
#include "polariton/linalg.hpp"
#include "polariton/mappings.hpp"

using namespace polariton;

namespace {

constexpr double kR074 = 0.74 * kBohrPerAngstrom;

// isometry from the hybrid (determinant x photon) basis into the platform
// register; under the ascending-order JW convention all signs are +1
Mat physical_isometry(const HybridBasis& basis, const RegisterLayout& layout) {
  Mat v = Mat::Zero(layout.dim(), basis.size());
  for (int i = 0; i < basis.n_dets(); ++i)
    for (int n = 0; n <= basis.n_b_max(); ++n)
      v(layout.basis_index(basis.det(i), n), basis.index(i, n)) = 1.0;
  return v;
}

}  // namespace

TEST_CASE("jordan-wigner: canonical anticommutation on 4 and 6 qubits") {
  for (int nq : {4, 6}) {
    std::vector<Mat> ad(nq);
    for (int p = 0; p < nq; ++p) ad[p] = jw_creation_matrix(p, nq);
    const int dim = 1 << nq;
    for (int p = 0; p < nq; ++p)
      for (int q = 0; q < nq; ++q) {
        Mat acc = ad[p] * ad[q] + ad[q] * ad[p];
        CHECK(max_abs(acc) < 1e-13);
        Mat acd = ad[p].adjoint() * ad[q] + ad[q] * ad[p].adjoint();
        Mat expect = p == q ? Mat(Mat::Identity(dim, dim)) : Mat(Mat::Zero(dim, dim));
        CHECK(max_abs(acd - expect) < 1e-13);
      }
  }
}

TEST_CASE("jw pauli-term form matches the direct construction") {
  for (int nq : {1, 3, 4})
    for (int p = 0; p < nq; ++p)
      CHECK(max_abs(pauli_sum_matrix(jw_creation(p, nq)) - jw_creation_matrix(p, nq)) <
            1e-14);
  // p=0 on one qubit: (X - iY)/2 = |1><0|
  Mat m = pauli_sum_matrix(jw_creation(0, 1));
  CHECK(std::abs(m(1, 0) - 1.0) < 1e-15);
  CHECK(max_abs(m) == doctest::Approx(1.0));
  CHECK_THROWS_AS(jw_creation(2, 2), DomainError);
}

TEST_CASE("number operators are 0/1 diagonal") {
  for (int p = 0; p < 4; ++p) {
    Mat n = jw_creation_matrix(p, 4) * jw_creation_matrix(p, 4).adjoint();
    for (int i = 0; i < 16; ++i)
      for (int j = 0; j < 16; ++j) {
        if (i == j)
          CHECK((std::abs(n(i, i)) < 1e-15 || std::abs(n(i, i) - 1.0) < 1e-15));
        else
          CHECK(std::abs(n(i, j)) < 1e-15);
      }
  }
}

TEST_CASE("gell-mann matrices: hermitian, traceless, pauli limit, pair algebra") {
  for (int d = 2; d <= 8; ++d)
    for (int l = 0; l < d; ++l)
      for (int lp = l + 1; lp < d; ++lp) {
        Mat x = gellmann_x(d, l, lp), y = gellmann_y(d, l, lp);
        CHECK(max_abs(x - x.adjoint()) < 1e-15);
        CHECK(max_abs(y - y.adjoint()) < 1e-15);
        CHECK(std::abs(x.trace()) < 1e-15);
        CHECK(std::abs(y.trace()) < 1e-15);
        // restricted to span{|l>, |l'>}: X^2 + Y^2 = 2 I
        Mat sq = x * x + y * y;
        CHECK(std::abs(sq(l, l) - 2.0) < 1e-15);
        CHECK(std::abs(sq(lp, lp) - 2.0) < 1e-15);
        CHECK(std::abs(sq(l, lp)) < 1e-15);
      }
  // d = 2 reduces to Pauli X, Y
  Mat px(2, 2), py(2, 2);
  px << 0, 1, 1, 0;
  py << 0, cplx(0, -1), cplx(0, 1), 0;
  CHECK(max_abs(gellmann_x(2, 0, 1) - px) < 1e-15);
  CHECK(max_abs(gellmann_y(2, 0, 1) - py) < 1e-15);
}

TEST_CASE("one-hot boson map: hot-bit motion and ladder restriction") {
  const int nb = 2;
  Mat bdag = boson_creation_qubit(nb);
  RegisterLayout lay = RegisterLayout::make(Platform::Qubit, 0, nb);
  auto hot = [&](int n) { return 1 << (nb - n); };  // |100>=4, |010>=2, |001>=1
  // b^dag |100> = |010>
  CHECK(std::abs(bdag(hot(1), hot(0)) - 1.0) < 1e-13);
  // b^dag |010> = sqrt 2 |001>
  CHECK(std::abs(bdag(hot(2), hot(1)) - std::sqrt(2.0)) < 1e-13);
  // restriction to the one-hot subspace equals the truncated ladder exactly
  Mat ladder = truncated_ladder(nb + 1);
  for (int n = 0; n <= nb; ++n)
    for (int m = 0; m <= nb; ++m)
      CHECK(std::abs(bdag(hot(n), hot(m)) - ladder(n, m)) < 1e-13);
  (void)lay;
}

TEST_CASE("qudit boson map equals the truncated ladder; nilpotent at cutoff") {
  CHECK(max_abs(boson_creation_qudit(4) - truncated_ladder(4)) < 1e-14);
  // d=2: sigma^+ in level ordering |1><0|
  Mat sp = boson_creation_qudit(2);
  CHECK(std::abs(sp(1, 0) - 1.0) < 1e-15);
  CHECK(max_abs(sp) == doctest::Approx(1.0));
  for (int d : {2, 3, 5}) {
    Mat b = boson_creation_qudit(d);
    Mat power = Mat::Identity(d, d);
    for (int k = 0; k < d; ++k) power = b * power;
    CHECK(max_abs(power) < 1e-14);
  }
}

TEST_CASE("qumode ladder: commutator defect only at the cutoff corner") {
  const int nc = 6;
  Mat bdag = boson_creation_qumode(nc);
  Mat comm = bdag.adjoint() * bdag - bdag * bdag.adjoint();
  for (int n = 0; n < nc; ++n) CHECK(std::abs(comm(n, n) - 1.0) < 1e-14);
  CHECK(std::abs(comm(nc, nc) + double(nc)) < 1e-12);  // corner defect
  // b^dag |3> = 2 |4>
  CHECK(std::abs(truncated_ladder(16)(4, 3) - 2.0) < 1e-14);
  Mat nop = bdag * bdag.adjoint();
  for (int n = 0; n <= nc; ++n) CHECK(std::abs(nop(n, n) - double(n)) < 1e-13);
}

TEST_CASE("all three boson maps agree on the shared truncated subspace") {
  const int nb = 3;
  Mat ladder = truncated_ladder(nb + 1);
  CHECK(max_abs(boson_creation_qudit(nb + 1) - ladder) < 1e-14);
  Mat onehot = boson_creation_qubit(nb);
  for (int n = 0; n <= nb; ++n)
    for (int m = 0; m <= nb; ++m)
      CHECK(std::abs(onehot(1 << (nb - n), 1 << (nb - m)) - ladder(n, m)) < 1e-13);
  Mat qumode = boson_creation_qumode(15);
  CHECK(max_abs(qumode.topLeftCorner(nb + 1, nb + 1) -
                ladder) < 1e-14);
}

TEST_CASE("platform hamiltonians are unitarily equivalent to the oracle") {
  auto mi = h2_sto3g_integrals(kR074, 0.0);
  CavitySpec cav;
  cav.omega = 1.0;
  cav.lambda = 0.05;
  cav.n_b_max = 3;
  QedFci oracle(mi, cav);
  Mat h_oracle = oracle.hamiltonian().m;

  SUBCASE("qudit d=4") {
    RegisterLayout lay = RegisterLayout::make(Platform::Qudit, 4, 3);
    PlatformHamiltonian ph = assemble_platform_hamiltonian(mi, cav, lay);
    Mat v = physical_isometry(oracle.basis(), lay);
    Mat restricted = v.adjoint() * ph.dense().m * v;
    CHECK(max_abs(restricted - h_oracle) < 1e-10);
  }
  SUBCASE("qubit one-hot (8 qubits)") {
    RegisterLayout lay = RegisterLayout::make(Platform::Qubit, 4, 3);
    PlatformHamiltonian ph = assemble_platform_hamiltonian(mi, cav, lay);
    Mat v = physical_isometry(oracle.basis(), lay);
    Mat restricted = v.adjoint() * ph.dense().m * v;
    CHECK(max_abs(restricted - h_oracle) < 1e-10);
  }
  SUBCASE("qumode at lambda=0: FCI tensor 16-level ladder") {
    CavitySpec free = cav;
    free.lambda = 0.0;
    free.n_b_max = 15;
    QedFci oracle15(mi, free);
    RegisterLayout lay = RegisterLayout::make(Platform::Qumode, 4, 15, 15);
    CavitySpec cav_qm = free;
    cav_qm.n_b_max = 15;
    PlatformHamiltonian ph = assemble_platform_hamiltonian(mi, cav_qm, lay);
    Mat v = physical_isometry(oracle15.basis(), lay);
    Mat restricted = v.adjoint() * ph.dense().m * v;
    CHECK(max_abs(restricted - oracle15.hamiltonian().m) < 1e-10);
  }
}

TEST_CASE("platform hamiltonian commutes with mapped spin operators") {
  auto mi = h2_sto3g_integrals(kR074, 0.35);
  CavitySpec cav;
  cav.lambda = 0.1;
  cav.n_b_max = 3;
  for (Platform p : {Platform::Qubit, Platform::Qudit, Platform::Qumode}) {
    RegisterLayout lay = RegisterLayout::make(p, 4, 3, 7);
    PlatformHamiltonian ph = assemble_platform_hamiltonian(mi, cav, lay);
    PlatformObservables obs = platform_observables(lay);
    Mat h = ph.dense().m;
    CHECK(max_abs(h * obs.s2.m - obs.s2.m * h) < 1e-10);
    CHECK(max_abs(h * obs.sz.m - obs.sz.m * h) < 1e-10);
    CHECK(max_abs(h * obs.n_e.m - obs.n_e.m * h) < 1e-10);
  }
}

TEST_CASE("kron-factored expectation matches the dense matrix") {
  auto mi = h2_sto3g_integrals(1.3, 0.2);
  CavitySpec cav;
  cav.lambda = 0.12;
  cav.n_b_max = 3;
  RegisterLayout lay = RegisterLayout::make(Platform::Qudit, 4, 3);
  PlatformHamiltonian ph = assemble_platform_hamiltonian(mi, cav, lay);
  Mat dense = ph.dense().m;
  std::mt19937 rng(42);
  std::normal_distribution<double> dist;
  for (int trial = 0; trial < 5; ++trial) {
    Vec psi(lay.dim());
    for (int i = 0; i < lay.dim(); ++i) psi[i] = cplx(dist(rng), dist(rng));
    psi.normalize();
    double fast = ph.expectation(psi);
    double slow = std::real(cplx(psi.dot(dense * psi)));
    CHECK(fast == doctest::Approx(slow).epsilon(1e-12));
    Vec phi(lay.dim());
    for (int i = 0; i < lay.dim(); ++i) phi[i] = cplx(dist(rng), dist(rng));
    phi.normalize();
    cplx me_fast = ph.matrix_element(phi, psi);
    cplx me_slow = phi.dot(dense * psi);
    CHECK(std::abs(me_fast - me_slow) < 1e-12);
  }
}

TEST_CASE("configuration errors: cutoff and register mismatches") {
  auto mi = h2_sto3g_integrals(1.4, 0.0);
  CavitySpec cav;
  cav.n_b_max = 3;
  CHECK_THROWS_AS(
      assemble_platform_hamiltonian(mi, cav, RegisterLayout::make(Platform::Qudit, 4, 2)),
      ConfigError);
  CHECK_THROWS_AS(
      assemble_platform_hamiltonian(mi, cav, RegisterLayout::make(Platform::Qubit, 6, 3)),
      ConfigError);
  CHECK_THROWS_AS(assemble_platform_hamiltonian(
                      mi, cav, RegisterLayout::make(Platform::Qumode, 4, 3, 2)),
                  ConfigError);
}
