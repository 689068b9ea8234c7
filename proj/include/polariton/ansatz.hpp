#pragma once

#include "polariton/simulator.hpp"

namespace polariton {

enum class SlotKind { Fabric, Entangler };

struct Circuit {
  RegisterLayout layout;
  std::vector<Gate> gates;
  std::vector<SlotKind> slot_kinds;
  int n_layers = 0;

  int n_slots() const { return static_cast<int>(slot_kinds.size()); }
  StateVector apply(const StateVector& in, const std::vector<double>& theta) const;
};

struct ResourceReport {
  Platform platform;
  int layers = 0;
  int boson_units = 0;            // information units for the boson mode
  int entangling_per_layer = 0;   // electron-photon entangling gates
  int entangling_total = 0;
  int params_total = 0;
  int params_fabric = 0;
  int params_entangler = 0;
  int fabric_blocks_total = 0;
};

struct EnsembleSpec {
  int n_states = 3;
  std::vector<std::string> tags = {"A", "B", "C"};
  double weight() const { return 1.0 / n_states; }
};

// One layer = FabricSingle + FabricPair on the fermionic qubits, then the
// platform entangler ladder with spin-paired shared slots.
Circuit build_ansatz(Platform platform, int n_layers, const RegisterLayout& layout);

// psi_A = |HF> (x) |0 ph>, psi_B = (1/sqrt2) E_HL |HF> (x) |0 ph>,
// psi_C = |HF> (x) |1 ph>, with platform-correct boson encodings.
std::vector<StateVector> prepare_initial_states(const RegisterLayout& layout);

ResourceReport count_resources(const Circuit& circuit);

}  // namespace polariton
