#include "polariton/qedfci.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "polariton/linalg.hpp"

namespace polariton {

void CavitySpec::validate() const {
  if (!(omega > 0.0)) throw DomainError("cavity: omega must be > 0");
  if (lambda < 0.0) throw DomainError("cavity: lambda must be >= 0");
  if (n_b_max < 0) throw DomainError("cavity: photon cutoff must be >= 0");
  if (direction.norm() < 1e-12) throw DomainError("cavity: zero field direction");
}

HybridBasis::HybridBasis(int n_orb, int n_e, int n_b_max)
    : n_orb_(n_orb), n_e_(n_e), n_b_max_(n_b_max) {
  if (n_e < 0 || n_e > 2 * n_orb) throw DomainError("hybrid basis: bad electron count");
  if (n_b_max < 0) throw DomainError("hybrid basis: bad photon cutoff");
  const int n_so = 2 * n_orb;
  for (Determinant d = 0; d < (1u << n_so); ++d)
    if (std::popcount(d) == n_e) {
      det_index_[d] = static_cast<int>(dets_.size());
      dets_.push_back(d);
    }
  if (static_cast<long long>(dets_.size()) * (n_b_max + 1) > 1000000)
    throw DomainError("hybrid basis: size exceeds the 1e6 cap");
}

namespace {

// parity of occupied spin orbitals strictly below bit k
int jw_sign(Determinant d, int k) {
  Determinant below = d & ((1u << k) - 1u);
  return (std::popcount(below) % 2 == 0) ? 1 : -1;
}

// applies a^dag_p a_q (spin-orbital indices); returns false if annihilated
bool excite(Determinant d, int p, int q, Determinant& out, int& sign) {
  if (!(d & (1u << q))) return false;
  sign = jw_sign(d, q);
  Determinant mid = d & ~(1u << q);
  if (mid & (1u << p)) return false;
  sign *= jw_sign(mid, p);
  out = mid | (1u << p);
  return true;
}

}  // namespace

Mat one_body_operator_dets(const std::vector<Determinant>& dets,
                           const std::unordered_map<Determinant, int>& index, int n_orb,
                           const RMat& c) {
  const int nd = static_cast<int>(dets.size());
  Mat m = Mat::Zero(nd, nd);
  for (int j = 0; j < nd; ++j)
    for (int p = 0; p < n_orb; ++p)
      for (int q = 0; q < n_orb; ++q) {
        if (c(p, q) == 0.0) continue;
        for (int sigma = 0; sigma < 2; ++sigma) {
          Determinant out;
          int sign;
          if (excite(dets[j], 2 * p + sigma, 2 * q + sigma, out, sign))
            m(index.at(out), j) += sign * c(p, q);
        }
      }
  return m;
}

Mat electronic_hamiltonian_dets(const std::vector<Determinant>& dets,
                                const std::unordered_map<Determinant, int>& index,
                                const MolecularIntegrals& mi) {
  const int n = mi.n_orb;
  const int nd = static_cast<int>(dets.size());
  // spin-free one-body excitation matrices E_pq over the sector
  std::vector<Mat> e(static_cast<size_t>(n) * n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      RMat c = RMat::Zero(n, n);
      c(p, q) = 1.0;
      e[p * n + q] = one_body_operator_dets(dets, index, n, c);
    }
  Mat h = Mat::Zero(nd, nd);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) h += mi.h(p, q) * e[p * n + q];
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          double g = mi.g(p, q, r, s);
          if (g == 0.0) continue;
          Mat term = e[p * n + q] * e[r * n + s];
          if (q == r) term -= e[p * n + s];
          h += 0.5 * g * term;
        }
  h += mi.e_nuc * Mat::Identity(nd, nd);
  return h;
}

SpinOperators spin_operators_dets(const std::vector<Determinant>& dets,
                                  const std::unordered_map<Determinant, int>& index,
                                  int n_orb) {
  const int nd = static_cast<int>(dets.size());
  SpinOperators ops;
  ops.sz = Mat::Zero(nd, nd);
  ops.n_e = Mat::Zero(nd, nd);
  Mat splus = Mat::Zero(nd, nd);
  for (int j = 0; j < nd; ++j) {
    int up = 0, down = 0;
    for (int p = 0; p < n_orb; ++p) {
      if (dets[j] & (1u << (2 * p))) ++up;
      if (dets[j] & (1u << (2 * p + 1))) ++down;
    }
    ops.sz(j, j) = 0.5 * (up - down);
    ops.n_e(j, j) = up + down;
    for (int p = 0; p < n_orb; ++p) {
      Determinant out;
      int sign;
      if (excite(dets[j], 2 * p, 2 * p + 1, out, sign))
        splus(index.at(out), j) += sign;
    }
  }
  ops.s2 = splus.adjoint() * splus + ops.sz * (ops.sz + Mat::Identity(nd, nd));
  return ops;
}

QedFci::QedFci(const MolecularIntegrals& mi, const CavitySpec& cav)
    : mi_(mi), cav_(cav), basis_(mi.n_orb, mi.n_e, cav.n_b_max) {
  cav_.validate();
  if (!(mi_.d_e[0].size() > 0))
    throw DomainError("pauli-fierz: dipole integrals absent");
}

Mat QedFci::electronic_dets() const {
  return electronic_hamiltonian_dets(basis_.dets(), basis_.det_map(), mi_);
}

Mat QedFci::coupling_dets() const {
  Vec3 lam = cav_.coupling_vector();
  const int n = mi_.n_orb;
  // (lambda . d)_pq = lambda . d^e_pq + delta_pq lambda . d^nuc / N_e
  RMat c = RMat::Zero(n, n);
  for (int comp = 0; comp < 3; ++comp) c += lam[comp] * mi_.d_e[comp];
  if (mi_.n_e > 0)
    c += (lam.dot(mi_.d_nuc) / mi_.n_e) * RMat::Identity(n, n);
  return one_body_operator_dets(basis_.dets(), basis_.det_map(), n, c);
}

OperatorMatrix QedFci::hamiltonian() const {
  const int nb = cav_.n_b_max + 1;
  Mat he = electronic_dets();
  Mat id_det = Mat::Identity(basis_.n_dets(), basis_.n_dets());
  Mat id_ph = Mat::Identity(nb, nb);
  Mat b = boson_annihilation(nb);
  Mat nph = b.adjoint() * b;

  Mat h = kron(he, id_ph) + cav_.omega * kron(id_det, nph);
  if (cav_.lambda > 0.0) {
    Mat d = coupling_dets();
    h += -std::sqrt(cav_.omega / 2.0) * kron(d, Mat(b + b.adjoint()));
    h += 0.5 * kron(Mat(d * d), id_ph);
  }
  return {h, true};
}

OperatorMatrix QedFci::photon_number() const {
  const int nb = cav_.n_b_max + 1;
  Mat b = boson_annihilation(nb);
  return {kron(Mat::Identity(basis_.n_dets(), basis_.n_dets()), Mat(b.adjoint() * b)), true};
}

OperatorMatrix QedFci::photon_projector(int n) const {
  const int nb = cav_.n_b_max + 1;
  if (n < 0 || n >= nb) throw DomainError("photon projector: sector out of range");
  Mat p = Mat::Zero(nb, nb);
  p(n, n) = 1.0;
  return {kron(Mat::Identity(basis_.n_dets(), basis_.n_dets()), p), true};
}

OperatorMatrix QedFci::spin_z() const {
  auto ops = spin_operators_dets(basis_.dets(), basis_.det_map(), basis_.n_orb());
  return {kron(ops.sz, Mat::Identity(cav_.n_b_max + 1, cav_.n_b_max + 1)), true};
}

OperatorMatrix QedFci::spin_squared() const {
  auto ops = spin_operators_dets(basis_.dets(), basis_.det_map(), basis_.n_orb());
  return {kron(ops.s2, Mat::Identity(cav_.n_b_max + 1, cav_.n_b_max + 1)), true};
}

namespace {

void phase_fix(Mat& vecs) {
  for (Eigen::Index j = 0; j < vecs.cols(); ++j) {
    Eigen::Index imax = 0;
    double best = 0.0;
    for (Eigen::Index i = 0; i < vecs.rows(); ++i)
      if (std::abs(vecs(i, j)) > best + 1e-12) {
        best = std::abs(vecs(i, j));
        imax = i;
      }
    cplx z = vecs(imax, j);
    if (std::abs(z) > 0) vecs.col(j) *= std::conj(z) / std::abs(z);
  }
}

int argmax_abs(const Vec& v) {
  int imax = 0;
  double best = 0.0;
  for (int i = 0; i < v.size(); ++i)
    if (std::abs(v[i]) > best + 1e-12) {
      best = std::abs(v[i]);
      imax = i;
    }
  return imax;
}

}  // namespace

Spectrum diagonalize(const OperatorMatrix& h, int k, const Mat* reference,
                     double degeneracy_tol) {
  if (!h.hermitian) throw DomainError("diagonalize: operator not flagged hermitian");
  if (k > h.m.rows()) throw DomainError("diagonalize: k exceeds dimension");
  Eigen::SelfAdjointEigenSolver<Mat> es(h.m);
  if (es.info() != Eigen::Success) throw NumericError("diagonalize: eigensolver failed");

  RVec evals = es.eigenvalues().head(k);
  Mat evecs = es.eigenvectors().leftCols(k);

  // resolve degenerate clusters deterministically
  int i = 0;
  while (i < k) {
    int j = i + 1;
    while (j < k && evals[j] - evals[j - 1] < degeneracy_tol) ++j;
    int m = j - i;
    if (m > 1) {
      Mat cluster = evecs.middleCols(i, m);
      bool aligned = false;
      if (reference && reference->cols() >= j) {
        // project the matching reference states onto the cluster span
        Mat proj = cluster * (cluster.adjoint() * reference->middleCols(i, m));
        Eigen::HouseholderQR<Mat> qr(proj);
        Mat q = qr.householderQ() * Mat::Identity(proj.rows(), m);
        // keep only if the projection was non-singular
        if (std::abs(qr.matrixQR().diagonal().head(m).prod()) > 1e-6) {
          evecs.middleCols(i, m) = q;
          aligned = true;
        }
      }
      if (!aligned) {
        std::vector<int> order(m);
        for (int t = 0; t < m; ++t) order[t] = t;
        std::vector<int> key(m);
        for (int t = 0; t < m; ++t) key[t] = argmax_abs(cluster.col(t));
        std::sort(order.begin(), order.end(), [&](int a, int b) { return key[a] < key[b]; });
        Mat sorted(cluster.rows(), m);
        for (int t = 0; t < m; ++t) sorted.col(t) = cluster.col(order[t]);
        evecs.middleCols(i, m) = sorted;
      }
    }
    i = j;
  }
  phase_fix(evecs);
  return {evals, evecs};
}

Spectrum singlet_spectrum(const QedFci& solver, int k, const Mat* reference) {
  OperatorMatrix h = solver.hamiltonian();
  OperatorMatrix s2 = solver.spin_squared();
  const double penalty = 1e3;
  OperatorMatrix shifted{h.m + penalty * s2.m, true};
  Spectrum sp = diagonalize(shifted, k, reference);
  for (int j = 0; j < k; ++j) {
    double s2v = expectation(s2, Vec(sp.vectors.col(j)));
    if (std::abs(s2v) > 1e-8)
      throw NumericError("singlet_spectrum: requested more states than the singlet block holds");
  }
  return sp;
}

double expectation(const OperatorMatrix& op, const Vec& state) {
  if (!op.hermitian) throw DomainError("expectation: operator not flagged hermitian");
  cplx v = state.dot(op.m * state);
  if (std::abs(v.imag()) > 1e-10)
    throw NumericError("expectation: imaginary residue exceeds 1e-10");
  return v.real();
}

std::vector<double> photon_sector_profile(const Vec& state, const HybridBasis& basis) {
  if (state.size() != basis.size())
    throw DomainError("sector profile: state/basis dimension mismatch");
  std::vector<double> prof(basis.n_b_max() + 1, 0.0);
  for (int i = 0; i < basis.n_dets(); ++i)
    for (int n = 0; n <= basis.n_b_max(); ++n)
      prof[n] = std::max(prof[n], std::abs(state[basis.index(i, n)]));
  return prof;
}

std::vector<std::array<double, 3>> truncation_convergence(const MolecularIntegrals& mi,
                                                          CavitySpec cav,
                                                          const std::vector<int>& cutoffs) {
  std::vector<std::array<double, 3>> table;
  for (size_t i = 0; i < cutoffs.size(); ++i) {
    if (i > 0 && cutoffs[i] <= cutoffs[i - 1])
      throw DomainError("truncation_convergence: cutoffs must ascend");
    cav.n_b_max = cutoffs[i];
    QedFci solver(mi, cav);
    Spectrum s = singlet_spectrum(solver, 3);
    table.push_back({s.energies[0], s.energies[1], s.energies[2]});
  }
  return table;
}

}  // namespace polariton
