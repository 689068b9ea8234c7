#include "polariton/ansatz.hpp"

#include <cmath>

namespace polariton {

StateVector Circuit::apply(const StateVector& in, const std::vector<double>& theta) const {
  if (static_cast<int>(theta.size()) != n_slots())
    throw DomainError("circuit apply: parameter vector size mismatch");
  StateVector out = in;
  for (const Gate& g : gates) apply_gate(out, g, theta);
  return out;
}

Circuit build_ansatz(Platform platform, int n_layers, const RegisterLayout& layout) {
  if (layout.platform != platform)
    throw ConfigError("build_ansatz: platform/layout mismatch");
  if (n_layers < 0) throw ConfigError("build_ansatz: negative layer count");
  if (layout.n_ferm != 4)
    throw ConfigError("build_ansatz: fabric blocks need a 2-orbital (4 qubit) register");

  Circuit c;
  c.layout = layout;
  c.n_layers = n_layers;
  const int nf = layout.n_ferm;
  const int first_boson = nf;

  for (int layer = 0; layer < n_layers; ++layer) {
    int single_slot = c.n_slots();
    c.slot_kinds.push_back(SlotKind::Fabric);
    c.gates.push_back(make_gate(GateKind::FabricSingle, {0, 1, 2, 3}, single_slot));
    int pair_slot = c.n_slots();
    c.slot_kinds.push_back(SlotKind::Fabric);
    c.gates.push_back(make_gate(GateKind::FabricPair, {0, 1, 2, 3}, pair_slot));

    // entangler ladder; (p up, p down) controls share one slot per transition
    if (platform == Platform::Qumode) {
      for (int p = 0; p < nf / 2; ++p) {
        int slot = c.n_slots();
        c.slot_kinds.push_back(SlotKind::Entangler);
        for (int sigma = 0; sigma < 2; ++sigma)
          c.gates.push_back(make_gate(GateKind::ControlledDisplacement,
                                      {2 * p + sigma, first_boson}, slot));
      }
    } else {
      const int n_trans = layout.n_b_max;
      std::vector<int> slots(static_cast<size_t>(nf / 2) * n_trans);
      for (int p = 0; p < nf / 2; ++p)
        for (int t = 0; t < n_trans; ++t) {
          slots[p * n_trans + t] = c.n_slots();
          c.slot_kinds.push_back(SlotKind::Entangler);
        }
      for (int s = 0; s < nf; ++s)
        for (int t = 0; t < n_trans; ++t) {
          int slot = slots[(s / 2) * n_trans + t];
          // pair order (t+1, t): the rotation then moves |n=t> toward
          // |n=t+1>, matching the qudit sublevel Givens direction
          if (platform == Platform::Qubit)
            c.gates.push_back(make_gate(GateKind::ControlledGivensQubit,
                                        {s, first_boson + t + 1, first_boson + t}, slot));
          else
            c.gates.push_back(make_gate(GateKind::ControlledGivensQudit, {s, first_boson},
                                        slot, 1.0, 0.0, t));
        }
    }
  }
  return c;
}

std::vector<StateVector> prepare_initial_states(const RegisterLayout& layout) {
  if (layout.n_ferm != 4)
    throw DomainError("initial states: 2-orbital, 2-electron sector required");
  const Determinant hf = 0b0011;       // orbital 0 doubly occupied
  const Determinant up_exc = 0b0110;   // 0-down + 1-up
  const Determinant dn_exc = 0b1001;   // 0-up + 1-down

  StateVector psi_a = StateVector::basis_state(layout, hf, 0);
  StateVector psi_c = StateVector::basis_state(layout, hf, 1);

  // (1/sqrt2) E_HL |HF>: JW signs give -|0d,1u> + |0u,1d>
  StateVector psi_b = StateVector::basis_state(layout, hf, 0);
  psi_b.amps.setZero();
  const double s = 1.0 / std::sqrt(2.0);
  psi_b.amps[layout.basis_index(up_exc, 0)] = -s;
  psi_b.amps[layout.basis_index(dn_exc, 0)] = s;

  return {psi_a, psi_b, psi_c};
}

ResourceReport count_resources(const Circuit& circuit) {
  ResourceReport r;
  r.platform = circuit.layout.platform;
  r.layers = circuit.n_layers;
  r.boson_units = circuit.layout.platform == Platform::Qubit ? circuit.layout.n_b_max + 1 : 1;
  for (const Gate& g : circuit.gates) {
    switch (g.kind) {
      case GateKind::ControlledGivensQubit:
        r.entangling_total += kEntanglingGatesFig2;  // 2 CX + 2 CRY each
        break;
      case GateKind::ControlledGivensQudit:
        r.entangling_total += 1;  // native entangling operation
        break;
      case GateKind::ControlledDisplacement:
        r.entangling_total += 2;  // two CR(pi) parity primitives
        break;
      case GateKind::FabricSingle:
      case GateKind::FabricPair:
        ++r.fabric_blocks_total;
        break;
      default:
        break;
    }
  }
  r.entangling_per_layer = circuit.n_layers > 0 ? r.entangling_total / circuit.n_layers : 0;
  for (SlotKind k : circuit.slot_kinds)
    (k == SlotKind::Fabric ? r.params_fabric : r.params_entangler) += 1;
  r.params_total = circuit.n_slots();
  return r;
}

}  // namespace polariton
