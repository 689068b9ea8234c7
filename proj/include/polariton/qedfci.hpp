#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "polariton/integrals.hpp"

namespace polariton {

struct CavitySpec {
  double omega = 1.0;        // Ha
  double lambda = 0.0;       // coupling magnitude, a.u.
  Vec3 direction = Vec3(0, 0, 1);
  int n_b_max = 3;           // photon cutoff

  void validate() const;
  Vec3 coupling_vector() const { return lambda * direction.normalized(); }
};

// Slater determinants are bitmasks over 2*n_orb spin orbitals with the
// interleaved convention: bit 2p = (p, up), bit 2p+1 = (p, down).
using Determinant = std::uint32_t;

// Determinant-major ordering with the photon index fastest:
// index(I, n) = I*(n_b_max+1) + n.
class HybridBasis {
 public:
  HybridBasis(int n_orb, int n_e, int n_b_max);

  int n_orb() const { return n_orb_; }
  int n_e() const { return n_e_; }
  int n_b_max() const { return n_b_max_; }
  int n_dets() const { return static_cast<int>(dets_.size()); }
  int size() const { return n_dets() * (n_b_max_ + 1); }

  Determinant det(int i) const { return dets_[i]; }
  int det_index(Determinant d) const { return det_index_.at(d); }
  int index(int det_i, int n_ph) const { return det_i * (n_b_max_ + 1) + n_ph; }
  const std::vector<Determinant>& dets() const { return dets_; }
  const std::unordered_map<Determinant, int>& det_map() const { return det_index_; }

 private:
  int n_orb_, n_e_, n_b_max_;
  std::vector<Determinant> dets_;
  std::unordered_map<Determinant, int> det_index_;
};

struct OperatorMatrix {
  Mat m;
  bool hermitian = false;
};

struct Spectrum {
  RVec energies;   // ascending
  Mat vectors;     // columns matching energies
};

// --- second-quantized operators over the N_e determinant sector ---

// sum_pq c_pq E_pq with E_pq = sum_sigma a^dag_{p sigma} a_{q sigma}
Mat one_body_operator_dets(const std::vector<Determinant>& dets,
                           const std::unordered_map<Determinant, int>& index, int n_orb,
                           const RMat& c);

// full electronic Hamiltonian of Eq-2 form on the determinant sector
Mat electronic_hamiltonian_dets(const std::vector<Determinant>& dets,
                                const std::unordered_map<Determinant, int>& index,
                                const MolecularIntegrals& mi);

struct SpinOperators {
  Mat sz;
  Mat s2;
  Mat n_e;
};
SpinOperators spin_operators_dets(const std::vector<Determinant>& dets,
                                  const std::unordered_map<Determinant, int>& index,
                                  int n_orb);

// --- hybrid-space assembly ---

class QedFci {
 public:
  QedFci(const MolecularIntegrals& mi, const CavitySpec& cav);

  const HybridBasis& basis() const { return basis_; }
  const MolecularIntegrals& integrals() const { return mi_; }
  const CavitySpec& cavity() const { return cav_; }

  OperatorMatrix hamiltonian() const;              // Pauli-Fierz, Eq-1 content
  OperatorMatrix photon_number() const;            // I (x) b^dag b
  OperatorMatrix photon_projector(int n) const;    // P_n
  OperatorMatrix spin_z() const;
  OperatorMatrix spin_squared() const;
  Mat electronic_dets() const;                     // H_e over determinants
  Mat coupling_dets() const;                       // (lambda . d) over determinants

 private:
  MolecularIntegrals mi_;
  CavitySpec cav_;
  HybridBasis basis_;
};

Spectrum diagonalize(const OperatorMatrix& h, int k,
                     const Mat* reference = nullptr, double degeneracy_tol = 1e-9);

// Lowest-k eigenpairs within the singlet (S^2 = 0) block: the coupling in
// Eq-1 is spin-free, so the Hamiltonian block-diagonalizes and the
// optically relevant polaritonic states are the singlet ones.  Realized by
// a spin penalty, exact for the S^2 = 0 eigenvalues.
Spectrum singlet_spectrum(const QedFci& solver, int k, const Mat* reference = nullptr);

double expectation(const OperatorMatrix& op, const Vec& state);

std::vector<double> photon_sector_profile(const Vec& state, const HybridBasis& basis);

// lowest-3 energies per cutoff; cutoffs must be ascending
std::vector<std::array<double, 3>> truncation_convergence(const MolecularIntegrals& mi,
                                                          CavitySpec cav,
                                                          const std::vector<int>& cutoffs);

}  // namespace polariton
