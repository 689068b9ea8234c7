#pragma once

#include <optional>

#include "polariton/ansatz.hpp"
#include "polariton/optim.hpp"

namespace polariton {

struct SAVQEOptions {
  double energy_tol = 1e-9;
  int max_evaluations = 5000;  // per restart
  int restarts = 5;
  std::uint64_t seed = 1234;
  double perturbation = 0.2;   // stddev of restart offsets
  std::vector<double> initial;  // warm start; empty = all-zero slots
  std::optional<double> target_energy;  // stop restarting once best <= target + tol
};

struct OptimizerTrace {
  int evaluations = 0;
  int restarts_run = 0;
  bool converged = false;
  std::vector<double> best_per_restart;
};

struct SAVQEResult {
  std::vector<double> theta;     // optimized parameters
  double sa_energy = 0.0;        // ensemble energy at theta
  Mat subspace;                  // H_kk' (N_S x N_S)
  std::vector<double> energies;  // resolved, ascending
  std::vector<Vec> states;       // rotated platform states
  std::vector<double> photon_numbers;
  OptimizerTrace trace;
};

struct Diagnostics {
  double delta_e_sa = 0.0;
  std::vector<double> delta_e_k;
  std::vector<double> infidelity;
  double delta_e12 = 0.0;
  double qumode_truncated_mass = 0.0;
};

double sa_energy(const Circuit& circuit, const std::vector<double>& theta,
                 const PlatformHamiltonian& h, const std::vector<StateVector>& initial,
                 const EnsembleSpec& ensemble = {});

SAVQEResult optimize(const Circuit& circuit, const PlatformHamiltonian& h,
                     const std::vector<StateVector>& initial, const SAVQEOptions& opts = {});

// classical 3x3 sub-block resolution at fixed parameters
void subspace_resolve(const Circuit& circuit, const std::vector<double>& theta,
                      const PlatformHamiltonian& h, const std::vector<StateVector>& initial,
                      SAVQEResult& result, const std::vector<Vec>* hybrid_refs = nullptr,
                      const HybridBasis* hybrid_basis = nullptr);

// re-index a platform state into hybrid (determinant x photon) amplitudes;
// trunc_mass collects valid amplitudes beyond the hybrid cutoff (qumode),
// leak_mass collects amplitude in unphysical sectors
Vec decode_to_hybrid(const Vec& platform_state, const RegisterLayout& layout,
                     const HybridBasis& basis, double* trunc_mass = nullptr,
                     double* leak_mass = nullptr);

Diagnostics diagnostics(const SAVQEResult& result, const Spectrum& oracle,
                        const RegisterLayout& layout, const HybridBasis& basis);

}  // namespace polariton
