#include "polariton/savqe.hpp"

#include <cmath>
#include <random>

namespace polariton {

double sa_energy(const Circuit& circuit, const std::vector<double>& theta,
                 const PlatformHamiltonian& h, const std::vector<StateVector>& initial,
                 const EnsembleSpec& ensemble) {
  if (static_cast<int>(initial.size()) != ensemble.n_states)
    throw DomainError("sa_energy: ensemble size mismatch");
  double e = 0.0;
  for (const StateVector& psi0 : initial) {
    StateVector psi = circuit.apply(psi0, theta);
    e += h.expectation(psi.amps);
  }
  return e * ensemble.weight();
}

SAVQEResult optimize(const Circuit& circuit, const PlatformHamiltonian& h,
                     const std::vector<StateVector>& initial, const SAVQEOptions& opts) {
  const int n = circuit.n_slots();
  std::vector<double> start =
      opts.initial.empty() ? std::vector<double>(n, 0.0) : opts.initial;
  if (static_cast<int>(start.size()) != n)
    throw DomainError("optimize: warm-start size mismatch");

  ObjectiveFn fn = [&](const std::vector<double>& th) {
    return sa_energy(circuit, th, h, initial);
  };

  MinimizeOptions mo;
  mo.max_evaluations = opts.max_evaluations;
  mo.f_tol = opts.energy_tol * 1e-3;
  mo.g_tol = 1e-8;

  SAVQEResult best;
  best.trace.converged = false;
  bool have_best = false;

  for (int r = 0; r < opts.restarts; ++r) {
    std::vector<double> x0 = start;
    if (r > 0) {
      std::mt19937_64 rng(opts.seed * 0x9e3779b97f4a7c15ull + static_cast<std::uint64_t>(r));
      std::normal_distribution<double> dist(0.0, opts.perturbation);
      for (double& v : x0) v += dist(rng);
    }
    MinimizeResult mr = minimize_lbfgs(fn, std::move(x0), mo);
    best.trace.evaluations += mr.evaluations;
    best.trace.restarts_run = r + 1;
    best.trace.best_per_restart.push_back(mr.f);
    if (!have_best || mr.f < best.sa_energy) {
      best.sa_energy = mr.f;
      best.theta = mr.x;
      best.trace.converged = mr.converged;
      have_best = true;
    }
    if (opts.target_energy && best.sa_energy <= *opts.target_energy + opts.energy_tol) break;
  }
  if (n == 0 && !have_best) {
    best.sa_energy = fn({});
    best.theta = {};
    best.trace.converged = true;
  }
  return best;
}

void subspace_resolve(const Circuit& circuit, const std::vector<double>& theta,
                      const PlatformHamiltonian& h, const std::vector<StateVector>& initial,
                      SAVQEResult& result, const std::vector<Vec>* hybrid_refs,
                      const HybridBasis* hybrid_basis) {
  const int ns = static_cast<int>(initial.size());
  std::vector<Vec> trial(ns);
  for (int k = 0; k < ns; ++k) trial[k] = circuit.apply(initial[k], theta).amps;

  Mat sub(ns, ns);
  for (int k = 0; k < ns; ++k)
    for (int kp = 0; kp < ns; ++kp) sub(k, kp) = h.matrix_element(trial[k], trial[kp]);
  sub = 0.5 * (sub + sub.adjoint().eval());  // clean hermiticity to roundoff

  Eigen::SelfAdjointEigenSolver<Mat> es(sub);
  RVec evals = es.eigenvalues();
  Mat rot = es.eigenvectors();

  std::vector<Vec> rotated(ns);
  for (int k = 0; k < ns; ++k) {
    rotated[k] = Vec::Zero(trial[0].size());
    for (int j = 0; j < ns; ++j) rotated[k] += rot(j, k) * trial[j];
  }

  // degenerate ties: align with hybrid-space references when supplied
  if (hybrid_refs && hybrid_basis) {
    int i = 0;
    while (i < ns) {
      int j = i + 1;
      while (j < ns && evals[j] - evals[j - 1] < 1e-9) ++j;
      int m = j - i;
      if (m > 1 && static_cast<int>(hybrid_refs->size()) >= j) {
        Mat cluster(trial[0].size(), m);
        for (int t = 0; t < m; ++t) cluster.col(t) = rotated[i + t];
        Mat overlap(m, m);
        for (int t = 0; t < m; ++t) {
          double tm, lm;
          Vec dec; // decoded cluster member in hybrid space
          dec = decode_to_hybrid(cluster.col(t), circuit.layout, *hybrid_basis, &tm, &lm);
          for (int rr = 0; rr < m; ++rr) overlap(rr, t) = (*hybrid_refs)[i + rr].dot(dec);
        }
        // rotate cluster members toward the references (polar alignment)
        Eigen::JacobiSVD<Mat> svd(overlap, Eigen::ComputeFullU | Eigen::ComputeFullV);
        Mat align = svd.matrixV() * svd.matrixU().adjoint();
        Mat aligned = cluster * align;
        for (int t = 0; t < m; ++t) rotated[i + t] = aligned.col(t);
      }
      i = j;
    }
  }

  // deterministic phase: largest-|amplitude| entry made real positive
  for (Vec& v : rotated) {
    Eigen::Index imax = 0;
    double mx = 0;
    for (Eigen::Index ii = 0; ii < v.size(); ++ii)
      if (std::abs(v[ii]) > mx + 1e-12) {
        mx = std::abs(v[ii]);
        imax = ii;
      }
    if (mx > 0) v *= std::conj(v[imax]) / std::abs(v[imax]);
  }

  result.subspace = sub;
  result.energies.assign(evals.data(), evals.data() + ns);
  result.states = std::move(rotated);

  PlatformObservables obs = platform_observables(circuit.layout);
  result.photon_numbers.clear();
  for (const Vec& v : result.states)
    result.photon_numbers.push_back(expectation(obs.photon_number, v));
}

Vec decode_to_hybrid(const Vec& platform_state, const RegisterLayout& layout,
                     const HybridBasis& basis, double* trunc_mass, double* leak_mass) {
  Vec out = Vec::Zero(basis.size());
  double captured = 0.0;
  for (int i = 0; i < basis.n_dets(); ++i) {
    Determinant d = basis.det(i);
    for (int n = 0; n <= basis.n_b_max(); ++n) {
      cplx a = platform_state[layout.basis_index(d, n)];
      out[basis.index(i, n)] = a;
      captured += std::norm(a);
    }
  }
  double total = platform_state.squaredNorm();
  // valid electron sector amplitudes that live beyond the hybrid cutoff
  double trunc = 0.0;
  if (layout.platform != Platform::Qubit && layout.boson_dim() > basis.n_b_max() + 1) {
    for (int i = 0; i < basis.n_dets(); ++i)
      for (int n = basis.n_b_max() + 1; n < layout.boson_dim(); ++n)
        trunc += std::norm(platform_state[layout.basis_index(basis.det(i), n)]);
  }
  double leak = total - captured - trunc;
  if (trunc_mass) *trunc_mass = trunc;
  if (leak_mass) *leak_mass = std::max(0.0, leak);
  if (leak > 1e-8)
    throw NumericError("decode_to_hybrid: leakage outside the physical subspace: " +
                       std::to_string(leak));
  return out;
}

Diagnostics diagnostics(const SAVQEResult& result, const Spectrum& oracle,
                        const RegisterLayout& layout, const HybridBasis& basis) {
  const int ns = static_cast<int>(result.energies.size());
  if (static_cast<int>(oracle.energies.size()) < ns)
    throw DomainError("diagnostics: oracle supplies fewer states than SA-VQE");

  Diagnostics d;
  double ens = 0.0;
  for (int k = 0; k < ns; ++k) ens += oracle.energies[k];
  ens /= ns;
  d.delta_e_sa = std::abs(result.sa_energy - ens);

  for (int k = 0; k < ns; ++k)
    d.delta_e_k.push_back(std::abs(result.energies[k] - oracle.energies[k]));

  double trunc_total = 0.0;
  for (int k = 0; k < ns; ++k) {
    double tm = 0.0, lm = 0.0;
    Vec dec = decode_to_hybrid(result.states[k], layout, basis, &tm, &lm);
    trunc_total += tm;
    // near-degenerate oracle states: compare against the degenerate cluster
    int lo = k, hi = k;
    while (lo > 0 && oracle.energies[lo] - oracle.energies[lo - 1] < 1e-8) --lo;
    while (hi + 1 < static_cast<int>(oracle.energies.size()) &&
           oracle.energies[hi + 1] - oracle.energies[hi] < 1e-8) ++hi;
    double fid = 0.0;
    for (int j = lo; j <= hi; ++j) fid += std::norm(oracle.vectors.col(j).dot(dec));
    d.infidelity.push_back(std::max(0.0, 1.0 - fid));
  }
  d.qumode_truncated_mass = trunc_total;

  if (ns >= 3) {
    double gap_vqe = result.energies[2] - result.energies[1];
    double gap_or = oracle.energies[2] - oracle.energies[1];
    d.delta_e12 = std::abs(gap_vqe - gap_or);
  }
  return d;
}

}  // namespace polariton
