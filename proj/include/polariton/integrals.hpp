#pragma once

#include <array>
#include <string>
#include <vector>

#include "polariton/common.hpp"

namespace polariton {

struct Atom {
  std::string element;
  double charge = 0.0;  // nuclear charge Z
  Vec3 position = Vec3::Zero();  // bohr
};

struct Geometry {
  std::vector<Atom> atoms;

  // Two hydrogens placed symmetrically about the origin along the axis
  // (sin(theta_z), 0, cos(theta_z)).
  static Geometry h2(double r_bohr, double theta_z);

  double nuclear_repulsion() const;
  Vec3 nuclear_dipole() const;  // +sum_A Z_A r_A
};

// Contracted s-type Gaussian shell attached to an atom.
struct Shell {
  int atom = 0;
  std::vector<double> exponents;
  std::vector<double> coefficients;  // for unit-normalized primitives
};

struct BasisSpec {
  std::vector<Shell> shells;

  // Parses the bundled shell format ("shell s <n>" followed by
  // exponent/coefficient rows) and replicates it on every atom.
  static BasisSpec for_geometry(const Geometry& geom, const std::string& shell_text);
  static BasisSpec sto3g_hydrogen(const Geometry& geom);

  void validate() const;
};

// Flat symmetric 4-index tensor in chemists' notation (pq|rs).
class Tensor4 {
 public:
  Tensor4() = default;
  explicit Tensor4(int n) : n_(n), data_(static_cast<size_t>(n) * n * n * n, 0.0) {}
  double& operator()(int p, int q, int r, int s) {
    return data_[idx(p, q, r, s)];
  }
  double operator()(int p, int q, int r, int s) const {
    return data_[idx(p, q, r, s)];
  }
  int dim() const { return n_; }

 private:
  size_t idx(int p, int q, int r, int s) const {
    return ((static_cast<size_t>(p) * n_ + q) * n_ + r) * n_ + s;
  }
  int n_ = 0;
  std::vector<double> data_;
};

struct AOIntegrals {
  RMat overlap;
  RMat kinetic;
  RMat nuclear;  // attraction, negative-definite-ish
  Tensor4 eri;   // (pq|rs)
  std::array<RMat, 3> dipole;  // <chi_p| r_c |chi_q>, c = x,y,z
  double e_nuc = 0.0;
  Vec3 d_nuc = Vec3::Zero();
  int n_ao = 0;
};

struct MolecularIntegrals {
  RMat h;        // core Hamiltonian in MO basis
  Tensor4 g;     // (pq|rs) in MO basis
  std::array<RMat, 3> d_e;  // electronic dipole integrals, sign -<p|r|q>
  Vec3 d_nuc = Vec3::Zero();
  double e_nuc = 0.0;
  int n_e = 0;
  int n_orb = 0;
  double hf_energy = 0.0;
};

struct RHFResult {
  RMat coefficients;  // columns = MOs, ascending orbital energy
  RVec orbital_energies;
  double energy = 0.0;  // total, incl. nuclear repulsion
  int cycles = 0;
};

// Boys function F0; erf closed form with a series branch near x = 0.
double boys_f0(double x);

AOIntegrals compute_ao_integrals(const Geometry& geom, const BasisSpec& basis);

RHFResult run_rhf(const AOIntegrals& ao, int n_e);

MolecularIntegrals transform_to_mo(const AOIntegrals& ao, const RMat& mo_coeffs,
                                   int n_e, double hf_energy = 0.0);

// Builds everything for the bundled H2/STO-3G path.
MolecularIntegrals h2_sto3g_integrals(double r_bohr, double theta_z);

}  // namespace polariton
