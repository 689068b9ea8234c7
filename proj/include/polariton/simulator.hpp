#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "polariton/mappings.hpp"

namespace polariton {

enum class GateKind {
  X, Z, H, RX, RY, RZ,
  CX, CRY, CRZ,
  GivensQubit, ControlledGivensQubit,
  GivensQudit, ControlledGivensQudit,
  Displacement, ControlledParity, ControlledDisplacement,
  FabricSingle, FabricPair,
};

enum class CGForm { Native, Fig2, PauliStrings };

// Controlled-Givens entangling tallies for the two compiled forms.
inline constexpr int kEntanglingGatesFig2 = 4;         // 2 CX + 2 CRY
inline constexpr int kEntanglingGatesPauliStrings = 6; // 4 CX + 2 CRZ

struct Gate {
  GateKind kind;
  std::vector<int> sites;   // site indices; semantics depend on kind
  int level = 0;            // qudit sublevel / one-hot transition base
  int slot = -1;            // parameter slot, -1 = fixed angle
  double scale = 1.0;       // angle = scale * theta[slot] + offset
  double offset = 0.0;
  CGForm form = CGForm::Native;

  double angle(const std::vector<double>& theta) const {
    return slot >= 0 ? scale * theta[slot] + offset : offset;
  }
};

Gate make_gate(GateKind kind, std::vector<int> sites, int slot = -1, double scale = 1.0,
               double offset = 0.0, int level = 0);

struct StateVector {
  RegisterLayout layout;
  Vec amps;
  std::vector<std::string> warnings;

  static StateVector basis_state(const RegisterLayout& layout, Determinant ferm_mask,
                                 int boson_level);
  double norm() const { return amps.norm(); }
};

// Matrix of the gate on its own sites (site order as listed, first slowest).
Mat gate_site_matrix(const Gate& g, double theta_value, const RegisterLayout& layout);

// Full-register unitary (tests / decomposition checks).
Mat gate_full_matrix(const Gate& g, const std::vector<double>& theta,
                     const RegisterLayout& layout);
Mat sequence_full_matrix(const std::vector<Gate>& gates, const std::vector<double>& theta,
                         const RegisterLayout& layout);

void apply_gate(StateVector& state, const Gate& g, const std::vector<double>& theta);

// Compiled realizations of the controlled-Givens on (c, q, q').
std::vector<Gate> compiled_controlled_givens_fig2(int c, int q, int qp, int slot,
                                                  double scale = 1.0, double offset = 0.0);
std::vector<Gate> compiled_controlled_givens_pauli(int c, int q, int qp, int slot,
                                                   double scale = 1.0, double offset = 0.0);

// Gate-Fabric generators (local JW on 4 contiguous fermionic qubits).
Mat fabric_single_generator();
Mat fabric_pair_generator();

}  // namespace polariton
