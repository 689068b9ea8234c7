#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>

#include "polariton/fcidump.hpp"
#include "polariton/integrals.hpp"

using namespace polariton;

namespace {

constexpr double kR074 = 0.74 * kBohrPerAngstrom;

// Independent 3-D grid quadrature of the product of two contracted 1s
// functions (brute-force overlap oracle).
double overlap_quadrature(double r_bohr) {
  const double exps[3] = {3.425250914, 0.6239137298, 0.1688554040};
  const double coefs[3] = {0.1543289673, 0.5353281423, 0.4446345422};
  auto contracted = [&](double x, double y, double z, double zc) {
    double r2 = x * x + y * y + (z - zc) * (z - zc);
    double v = 0.0;
    for (int k = 0; k < 3; ++k)
      v += coefs[k] * std::pow(2.0 * exps[k] / 3.14159265358979, 0.75) *
           std::exp(-exps[k] * r2);
    return v;
  };
  // normalize numerically, then integrate chi_1 * chi_2 on the same grid
  const double L = 7.0, h = 0.07;
  double self = 0.0, cross = 0.0;
  for (double x = -L; x <= L; x += h)
    for (double y = -L; y <= L; y += h)
      for (double z = -L; z <= L + r_bohr; z += h) {
        double f1 = contracted(x, y, z, r_bohr / 2);
        double f2 = contracted(x, y, z, -r_bohr / 2);
        self += f1 * f1;
        cross += f1 * f2;
      }
  return cross / self;
}

// 2x2 CI in the symmetry-determined MO basis: closed-form FCI ground energy
// for H2 in a minimal basis, independent of the determinant machinery.
double fci_2x2(const MolecularIntegrals& mi) {
  double h11 = 2 * mi.h(0, 0) + mi.g(0, 0, 0, 0);
  double h22 = 2 * mi.h(1, 1) + mi.g(1, 1, 1, 1);
  double h12 = mi.g(0, 1, 0, 1);  // exchange-type coupling K_gu
  double mid = 0.5 * (h11 + h22);
  double rad = std::sqrt(0.25 * (h11 - h22) * (h11 - h22) + h12 * h12);
  return mid - rad + mi.e_nuc;
}

}  // namespace

TEST_CASE("nuclear repulsion is Z1 Z2 / r") {
  Geometry g = Geometry::h2(kR074, 0.0);
  CHECK(g.nuclear_repulsion() == doctest::Approx(1.0 / kR074).epsilon(1e-12));
  CHECK(g.nuclear_repulsion() == doctest::Approx(0.715104).epsilon(1e-4));
  for (double r : {0.5, 1.0, 2.3, 7.7})
    CHECK(Geometry::h2(r, 0.3).nuclear_repulsion() == doctest::Approx(1.0 / r).epsilon(1e-12));
}

TEST_CASE("coincident nuclei rejected") {
  Geometry g;
  g.atoms = {{"H", 1.0, Vec3(0, 0, 0)}, {"H", 1.0, Vec3(0, 0, 0)}};
  CHECK_THROWS_AS(g.nuclear_repulsion(), DomainError);
}

TEST_CASE("contracted overlap: unit diagonal and quadrature oracle off-diagonal") {
  Geometry g = Geometry::h2(kR074, 0.0);
  AOIntegrals ao = compute_ao_integrals(g, BasisSpec::sto3g_hydrogen(g));
  CHECK(ao.overlap(0, 0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(ao.overlap(1, 1) == doctest::Approx(1.0).epsilon(1e-12));
  double s12 = overlap_quadrature(kR074);
  CHECK(ao.overlap(0, 1) == doctest::Approx(s12).epsilon(2e-4));
}

TEST_CASE("basis data matches the zeta-scaled Hehre-Stewart-Pople fit") {
  // unscaled STO-3G 1s exponents for zeta=1, scaled by 1.24^2
  const double unscaled[3] = {2.227660584, 0.405771156, 0.109818};
  const double zeta2 = 1.24 * 1.24;
  Geometry g = Geometry::h2(1.4, 0.0);
  BasisSpec b = BasisSpec::sto3g_hydrogen(g);
  REQUIRE(b.shells.size() == 2);
  REQUIRE(b.shells[0].exponents.size() == 3);
  for (int k = 0; k < 3; ++k)
    CHECK(b.shells[0].exponents[k] == doctest::Approx(unscaled[k] * zeta2).epsilon(1e-5));
}

TEST_CASE("non-s shells rejected") {
  Geometry g = Geometry::h2(1.4, 0.0);
  CHECK_THROWS_AS(BasisSpec::for_geometry(g, "shell p 1\n1.0 1.0\n"), DomainError);
}

TEST_CASE("RHF reproduces the textbook H2/STO-3G energy") {
  Geometry g = Geometry::h2(kR074, 0.0);
  AOIntegrals ao = compute_ao_integrals(g, BasisSpec::sto3g_hydrogen(g));
  RHFResult hf = run_rhf(ao, 2);
  CHECK(hf.energy == doctest::Approx(-1.1167).epsilon(1e-3));
  // bonding orbital symmetric across the two atoms up to sign
  CHECK(std::abs(hf.coefficients(0, 0)) ==
        doctest::Approx(std::abs(hf.coefficients(1, 0))).epsilon(1e-8));
  // orbitals S-orthonormal
  RMat ctsc = hf.coefficients.transpose() * ao.overlap * hf.coefficients;
  CHECK((ctsc - RMat::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-10);
  CHECK(hf.orbital_energies[0] < hf.orbital_energies[1]);
}

TEST_CASE("HF energy is monotone around the minimum and a variational bound") {
  double prev = 0.0;
  bool first = true;
  for (double r : {1.1, 1.2, 1.3, 1.39}) {
    Geometry g = Geometry::h2(r, 0.0);
    AOIntegrals ao = compute_ao_integrals(g, BasisSpec::sto3g_hydrogen(g));
    RHFResult hf = run_rhf(ao, 2);
    MolecularIntegrals mi = transform_to_mo(ao, hf.coefficients, 2, hf.energy);
    CHECK(hf.energy >= fci_2x2(mi) - 1e-12);  // variational bound
    if (!first) CHECK(hf.energy < prev);      // descending toward r_eq ~ 1.35
    prev = hf.energy;
    first = false;
  }
}

TEST_CASE("MO transform: identity coefficients echo the AO integrals") {
  Geometry g = Geometry::h2(1.4, 0.0);
  AOIntegrals ao = compute_ao_integrals(g, BasisSpec::sto3g_hydrogen(g));
  MolecularIntegrals mi = transform_to_mo(ao, RMat::Identity(2, 2), 2);
  CHECK((mi.h - (ao.kinetic + ao.nuclear)).cwiseAbs().maxCoeff() < 1e-14);
  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q)
      for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 2; ++s)
          CHECK(mi.g(p, q, r, s) == doctest::Approx(ao.eri(p, q, r, s)).epsilon(1e-14));
}

TEST_CASE("H2 dipole structure: axis component only, nuclear dipole zero") {
  Geometry g = Geometry::h2(kR074, 0.0);
  AOIntegrals ao = compute_ao_integrals(g, BasisSpec::sto3g_hydrogen(g));
  RHFResult hf = run_rhf(ao, 2);
  MolecularIntegrals mi = transform_to_mo(ao, hf.coefficients, 2, hf.energy);
  CHECK(mi.d_nuc.norm() < 1e-12);
  // molecule on z: x and y components vanish by parity
  CHECK(mi.d_e[0].cwiseAbs().maxCoeff() < 1e-10);
  CHECK(mi.d_e[1].cwiseAbs().maxCoeff() < 1e-10);
  // z component has a nonzero off-diagonal (transition dipole)
  CHECK(std::abs(mi.d_e[2](0, 1)) > 0.1);
  // gerade/ungerade symmetry kills the diagonal
  CHECK(std::abs(mi.d_e[2](0, 0)) < 1e-10);
}

TEST_CASE("rotating the geometry only rotates the dipole") {
  auto mi0 = h2_sto3g_integrals(kR074, 0.0);
  auto mi1 = h2_sto3g_integrals(kR074, 1.1);
  CHECK((mi0.h - mi1.h).cwiseAbs().maxCoeff() < 1e-10);
  CHECK(mi0.e_nuc == doctest::Approx(mi1.e_nuc).epsilon(1e-14));
  double gdiff = 0.0;
  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q)
      for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 2; ++s)
          gdiff = std::max(gdiff, std::abs(mi0.g(p, q, r, s) - mi1.g(p, q, r, s)));
  CHECK(gdiff < 1e-10);
  // dipole magnitude along the molecular axis is rotation invariant
  double m0 = std::abs(mi0.d_e[2](0, 1));
  double m1 = std::hypot(mi1.d_e[0](0, 1), mi1.d_e[2](0, 1));
  CHECK(m0 == doctest::Approx(m1).epsilon(1e-9));
}

TEST_CASE("ERI eight-fold permutation symmetry") {
  Geometry g = Geometry::h2(1.2, 0.4);
  AOIntegrals ao = compute_ao_integrals(g, BasisSpec::sto3g_hydrogen(g));
  double asym = 0.0;
  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q)
      for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 2; ++s) {
          double v = ao.eri(p, q, r, s);
          for (double w : {ao.eri(q, p, r, s), ao.eri(p, q, s, r), ao.eri(r, s, p, q),
                           ao.eri(s, r, q, p)})
            asym = std::max(asym, std::abs(v - w));
        }
  CHECK(asym < 1e-12);
}

TEST_CASE("Boys function branches agree at the seam and at known values") {
  CHECK(boys_f0(0.0) == doctest::Approx(1.0));
  CHECK(boys_f0(1e-12) == doctest::Approx(1.0).epsilon(1e-9));
  // erf-based closed form at x=1: 0.5 sqrt(pi) erf(1)
  CHECK(boys_f0(1.0) == doctest::Approx(0.5 * std::sqrt(kPi) * std::erf(1.0)).epsilon(1e-14));
  CHECK(boys_f0(2e-10) == doctest::Approx(boys_f0(5e-11)).epsilon(1e-9));
}

TEST_CASE("fcidump round trip and header echo") {
  auto mi = h2_sto3g_integrals(kR074, 0.0);
  auto tmp = std::filesystem::temp_directory_path();
  std::string fpath = (tmp / "polariton_test.fcidump").string();
  std::string dpath = (tmp / "polariton_test.dipole").string();
  write_fcidump(mi, fpath, dpath);
  MolecularIntegrals back = load_fcidump(fpath, dpath);
  CHECK(back.n_e == 2);
  CHECK(back.n_orb == 2);
  CHECK((back.h - mi.h).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(std::abs(back.e_nuc - mi.e_nuc) < 1e-12);
  double gdiff = 0.0;
  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q)
      for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 2; ++s)
          gdiff = std::max(gdiff, std::abs(back.g(p, q, r, s) - mi.g(p, q, r, s)));
  CHECK(gdiff < 1e-12);
  for (int c = 0; c < 3; ++c)
    CHECK((back.d_e[c] - mi.d_e[c]).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((back.d_nuc - mi.d_nuc).norm() < 1e-12);
  CHECK(has_dipole(back));

  MolecularIntegrals no_dip = load_fcidump(fpath, "");
  CHECK_FALSE(has_dipole(no_dip));
  CHECK_THROWS_AS(load_fcidump(fpath, (tmp / "missing.dipole").string()), ConfigError);
  std::remove(fpath.c_str());
  std::remove(dpath.c_str());
}

TEST_CASE("malformed fcidump line reports its number") {
  auto tmp = std::filesystem::temp_directory_path();
  std::string fpath = (tmp / "polariton_bad.fcidump").string();
  {
    std::ofstream f(fpath);
    f << "&FCI NORB=1,NELEC=2,MS2=0,\n&END\n1.0 1 1 0 0\nnot-a-number 1 1 1 1\n";
  }
  try {
    load_fcidump(fpath, "");
    CHECK(false);
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find(":4") != std::string::npos);
  }
  std::remove(fpath.c_str());
}
