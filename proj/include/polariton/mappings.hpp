#pragma once

#include <string>
#include <vector>

#include "polariton/qedfci.hpp"

namespace polariton {

enum class Platform { Qubit, Qudit, Qumode };

std::string platform_name(Platform p);
Platform platform_from_name(const std::string& s);

// One Pauli string with a coefficient; letters[k] acts on qubit k.
struct PauliTerm {
  cplx coefficient;
  std::string letters;  // from {I,X,Y,Z}

  Mat to_matrix() const;  // dense on 2^n
};

Mat pauli_sum_matrix(const std::vector<PauliTerm>& terms);

// Jordan-Wigner image of a^dag_p on n qubits (qubit p <-> spin orbital p,
// interleaved (p up, p down) ordering matches the determinant convention).
std::vector<PauliTerm> jw_creation(int p, int n_qubits);
Mat jw_creation_matrix(int p, int n_qubits);  // direct construction

// Generalized Gell-Mann matrices on d levels, 0 <= l < l' <= d-1.
Mat gellmann_x(int d, int l, int lp);
Mat gellmann_y(int d, int l, int lp);

// Boson creation operators per platform.
std::vector<PauliTerm> boson_creation_qubit_terms(int n_b_max);
Mat boson_creation_qubit(int n_b_max);   // on 2^(n_b_max+1)
Mat boson_creation_qudit(int d);         // on d
Mat boson_creation_qumode(int n_cut);    // on n_cut+1
Mat truncated_ladder(int levels);        // reference b^dag on `levels` states

// Register description: fermionic qubit sites first, then the bosonic unit.
struct RegisterLayout {
  Platform platform = Platform::Qubit;
  int n_ferm = 4;      // fermionic qubits (spin orbitals)
  int n_b_max = 3;     // photon cutoff for qubit/qudit platforms
  int n_cut = 15;      // qumode Fock cutoff

  int boson_dim() const;
  int ferm_dim() const { return 1 << n_ferm; }
  int dim() const { return ferm_dim() * boson_dim(); }
  int n_boson_sites() const { return platform == Platform::Qubit ? n_b_max + 1 : 1; }
  // index of the basis state with fermionic occupation mask and boson level n
  int basis_index(Determinant ferm_mask, int level) const;

  static RegisterLayout make(Platform p, int n_ferm, int n_b_max, int n_cut = 15);
};

// Platform-side Hamiltonian split into its Kronecker factors
// H = F (x) 1 + G (x) C + 1 (x) B with
//   F = H_e + (lambda.d)^2/2,  G = -sqrt(omega/2)(lambda.d),
//   C = b^dag + b (mapped),    B = omega b^dag b (mapped).
struct PlatformHamiltonian {
  RegisterLayout layout;
  Mat ferm;       // F, dim 2^n_ferm
  Mat coupling;   // G
  Mat boson_c;    // C, boson_dim
  Mat boson_n;    // B

  OperatorMatrix dense() const;
  double expectation(const Vec& state) const;
  cplx matrix_element(const Vec& bra, const Vec& ket) const;
};

PlatformHamiltonian assemble_platform_hamiltonian(const MolecularIntegrals& mi,
                                                  const CavitySpec& cav,
                                                  const RegisterLayout& layout);

// fermionic observables mapped onto the register (JW), extended by identity
// over the boson unit
struct PlatformObservables {
  OperatorMatrix s2;
  OperatorMatrix sz;
  OperatorMatrix n_e;
  OperatorMatrix photon_number;
};
PlatformObservables platform_observables(const RegisterLayout& layout);

// amplitude mass outside the one-hot boson subspace (qubit platform)
double one_hot_leakage(const Vec& state, const RegisterLayout& layout);

}  // namespace polariton
