#include "polariton/simulator.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "polariton/linalg.hpp"

namespace polariton {

namespace {

struct SiteInfo {
  std::vector<int> dims;     // per site
  std::vector<int> strides;  // site 0 slowest
};

SiteInfo site_info(const RegisterLayout& layout) {
  SiteInfo si;
  for (int k = 0; k < layout.n_ferm; ++k) si.dims.push_back(2);
  if (layout.platform == Platform::Qubit)
    for (int k = 0; k <= layout.n_b_max; ++k) si.dims.push_back(2);
  else
    si.dims.push_back(layout.boson_dim());
  si.strides.assign(si.dims.size(), 1);
  for (int k = static_cast<int>(si.dims.size()) - 2; k >= 0; --k)
    si.strides[k] = si.strides[k + 1] * si.dims[k + 1];
  return si;
}

Mat mat2(cplx a, cplx b, cplx c, cplx d) {
  Mat m(2, 2);
  m << a, b, c, d;
  return m;
}

Mat ry_matrix(double a) {
  return mat2(std::cos(a / 2), -std::sin(a / 2), std::sin(a / 2), std::cos(a / 2));
}
Mat rx_matrix(double a) {
  cplx i(0, 1);
  return mat2(std::cos(a / 2), -i * std::sin(a / 2), -i * std::sin(a / 2), std::cos(a / 2));
}
Mat rz_matrix(double a) {
  return mat2(std::exp(cplx(0, -a / 2)), 0, 0, std::exp(cplx(0, a / 2)));
}

Mat controlled(const Mat& u) {
  const Eigen::Index d = u.rows();
  Mat m = Mat::Identity(2 * d, 2 * d);
  m.bottomRightCorner(d, d) = u;
  return m;
}

// two-qubit Givens with the action G|01> = cos t |01> + sin t |10>
Mat givens2_matrix(double t) {
  Mat g = Mat::Identity(4, 4);
  g(1, 1) = std::cos(t);
  g(2, 2) = std::cos(t);
  g(2, 1) = std::sin(t);
  g(1, 2) = -std::sin(t);
  return g;
}

// qudit Givens on sublevels (l, l+1): G|l> = cos t |l> + sin t |l+1>
Mat givens_qudit_matrix(int d, int l, double t) {
  if (l < 0 || l + 1 >= d) throw DomainError("qudit givens: sublevel out of range");
  Mat g = Mat::Identity(d, d);
  g(l, l) = std::cos(t);
  g(l + 1, l + 1) = std::cos(t);
  g(l + 1, l) = std::sin(t);
  g(l, l + 1) = -std::sin(t);
  return g;
}

// cached eigendecomposition of an anti-Hermitian generator K = W (-i L) W^dag;
// exp(t K) = W exp(-i t L) W^dag
struct ExpCache {
  Mat w;
  RVec lam;
  Mat at(double t) const {
    Vec d(lam.size());
    for (Eigen::Index i = 0; i < lam.size(); ++i) d[i] = std::exp(cplx(0, -t * lam[i]));
    return w * d.asDiagonal() * w.adjoint();
  }
};

ExpCache make_exp_cache(const Mat& antiherm) {
  Eigen::SelfAdjointEigenSolver<Mat> es(Mat(cplx(0, 1) * antiherm));
  return {es.eigenvectors(), es.eigenvalues()};
}

const ExpCache& displacement_cache(int levels) {
  thread_local std::map<int, ExpCache> cache;
  auto it = cache.find(levels);
  if (it == cache.end()) {
    Mat b = boson_annihilation(levels);
    it = cache.emplace(levels, make_exp_cache(Mat(b - b.adjoint()))).first;
  }
  return it->second;
}

Mat displacement_matrix(int levels, double t) {
  // memoize the most recent angles; paired gates share parameters
  thread_local int cached_levels[4] = {-1, -1, -1, -1};
  thread_local double cached_t[4];
  thread_local Mat cached[4];
  for (int k = 0; k < 4; ++k)
    if (cached_levels[k] == levels && cached_t[k] == t) return cached[k];
  thread_local int next = 0;
  Mat m = displacement_cache(levels).at(t);
  cached_levels[next] = levels;
  cached_t[next] = t;
  cached[next] = m;
  next = (next + 1) % 4;
  return m;
}

Mat controlled_parity_matrix(int levels) {
  // exp(-i pi |1><1| (x) n): parity flip on the mode when the qubit is set
  Mat m = Mat::Identity(2 * levels, 2 * levels);
  for (int n = 0; n < levels; ++n) m(levels + n, levels + n) = (n % 2 == 0) ? 1.0 : -1.0;
  return m;
}

Mat controlled_displacement_matrix(int levels, double t) {
  Mat m = Mat::Zero(2 * levels, 2 * levels);
  m.topLeftCorner(levels, levels) = displacement_matrix(levels, t);
  m.bottomRightCorner(levels, levels) = displacement_matrix(levels, -t);
  return m;
}

const ExpCache& fabric_cache(bool pair) {
  static ExpCache single_cache, pair_cache;
  static std::once_flag once;
  std::call_once(once, [] {
    single_cache = make_exp_cache(fabric_single_generator());
    pair_cache = make_exp_cache(fabric_pair_generator());
  });
  return pair ? pair_cache : single_cache;
}

}  // namespace

Mat fabric_single_generator() {
  // spin-free orbital rotation E_10 - E_01 on local qubits (0u,0d,1u,1d)
  auto ad = [](int k) { return jw_creation_matrix(k, 4); };
  Mat e10 = ad(2) * ad(0).adjoint() + ad(3) * ad(1).adjoint();
  return e10 - e10.adjoint();
}

Mat fabric_pair_generator() {
  // pair transfer P1^dag P0 - P0^dag P1 with P_p^dag = a^dag_{p,up} a^dag_{p,dn}
  auto ad = [](int k) { return jw_creation_matrix(k, 4); };
  Mat p0 = ad(0) * ad(1);
  Mat p1 = ad(2) * ad(3);
  Mat t = p1 * p0.adjoint();
  return t - t.adjoint();
}

Gate make_gate(GateKind kind, std::vector<int> sites, int slot, double scale, double offset,
               int level) {
  for (size_t i = 0; i < sites.size(); ++i)
    for (size_t j = i + 1; j < sites.size(); ++j)
      if (sites[i] == sites[j]) throw DomainError("gate definition: repeated site");
  Gate g;
  g.kind = kind;
  g.sites = std::move(sites);
  g.slot = slot;
  g.scale = scale;
  g.offset = offset;
  g.level = level;
  return g;
}

StateVector StateVector::basis_state(const RegisterLayout& layout, Determinant ferm_mask,
                                     int boson_level) {
  StateVector sv;
  sv.layout = layout;
  sv.amps = Vec::Zero(layout.dim());
  sv.amps[layout.basis_index(ferm_mask, boson_level)] = 1.0;
  return sv;
}

Mat gate_site_matrix(const Gate& g, double t, const RegisterLayout& layout) {
  const int bdim = layout.boson_dim();
  switch (g.kind) {
    case GateKind::X: return mat2(0, 1, 1, 0);
    case GateKind::Z: return mat2(1, 0, 0, -1);
    case GateKind::H: {
      double s = 1.0 / std::sqrt(2.0);
      return mat2(s, s, s, -s);
    }
    case GateKind::RX: return rx_matrix(t);
    case GateKind::RY: return ry_matrix(t);
    case GateKind::RZ: return rz_matrix(t);
    case GateKind::CX: return controlled(mat2(0, 1, 1, 0));
    case GateKind::CRY: return controlled(ry_matrix(t));
    case GateKind::CRZ: return controlled(rz_matrix(t));
    case GateKind::GivensQubit: return givens2_matrix(t);
    case GateKind::ControlledGivensQubit: return controlled(givens2_matrix(t));
    case GateKind::GivensQudit: return givens_qudit_matrix(bdim, g.level, t);
    case GateKind::ControlledGivensQudit:
      return controlled(givens_qudit_matrix(bdim, g.level, t));
    case GateKind::Displacement: return displacement_matrix(bdim, t);
    case GateKind::ControlledParity: return controlled_parity_matrix(bdim);
    case GateKind::ControlledDisplacement: return controlled_displacement_matrix(bdim, t);
    case GateKind::FabricSingle: return fabric_cache(false).at(t);
    case GateKind::FabricPair: return fabric_cache(true).at(t);
  }
  throw DomainError("gate_site_matrix: unknown kind");
}

namespace {

void apply_site_matrix(Vec& amps, const Mat& u, const std::vector<int>& sites,
                       const SiteInfo& si) {
  const int m = static_cast<int>(u.rows());
  std::vector<int> offsets(m, 0);
  // decompose each gate sub-index into site digits, first listed site slowest
  for (int j = 0; j < m; ++j) {
    int rem = j;
    for (int s = static_cast<int>(sites.size()) - 1; s >= 0; --s) {
      int d = si.dims[sites[s]];
      offsets[j] += (rem % d) * si.strides[sites[s]];
      rem /= d;
    }
  }
  // columns that act as the identity can be skipped; for a unitary the
  // non-trivial content is confined to the support block
  std::vector<int> support;
  support.reserve(m);
  for (int j = 0; j < m; ++j) {
    bool trivial = true;
    for (int i = 0; i < m && trivial; ++i)
      if (std::abs(u(i, j) - (i == j ? 1.0 : 0.0)) > 1e-14) trivial = false;
    if (!trivial) support.push_back(j);
  }
  const int ms = static_cast<int>(support.size());
  if (ms == 0) return;
  Mat block(ms, ms);
  for (int a = 0; a < ms; ++a)
    for (int b = 0; b < ms; ++b) block(a, b) = u(support[a], support[b]);
  std::vector<int> soff(ms);
  for (int a = 0; a < ms; ++a) soff[a] = offsets[support[a]];

  const int dim = static_cast<int>(amps.size());
  std::vector<cplx> scratch(ms);
  for (int base = 0; base < dim; ++base) {
    bool is_base = true;
    for (int s : sites)
      if ((base / si.strides[s]) % si.dims[s] != 0) {
        is_base = false;
        break;
      }
    if (!is_base) continue;
    for (int j = 0; j < ms; ++j) scratch[j] = amps[base + soff[j]];
    for (int j = 0; j < ms; ++j) {
      cplx acc = 0.0;
      for (int k = 0; k < ms; ++k) acc += block(j, k) * scratch[k];
      amps[base + soff[j]] = acc;
    }
  }
}

}  // namespace

void apply_gate(StateVector& state, const Gate& g, const std::vector<double>& theta) {
  const double t = g.angle(theta);
  if (g.kind == GateKind::ControlledGivensQubit && g.form != CGForm::Native) {
    auto seq = g.form == CGForm::Fig2
                   ? compiled_controlled_givens_fig2(g.sites[0], g.sites[1], g.sites[2],
                                                     g.slot, g.scale, g.offset)
                   : compiled_controlled_givens_pauli(g.sites[0], g.sites[1], g.sites[2],
                                                      g.slot, g.scale, g.offset);
    for (const Gate& sub : seq) apply_gate(state, sub, theta);
    return;
  }
  SiteInfo si = site_info(state.layout);
  Mat u = gate_site_matrix(g, t, state.layout);
  apply_site_matrix(state.amps, u, g.sites, si);

  if (g.kind == GateKind::Displacement || g.kind == GateKind::ControlledDisplacement) {
    // coherent tail beyond n_cut-2 signals an under-resolved qumode
    const int bd = state.layout.boson_dim();
    const int fd = state.layout.ferm_dim();
    double tail = 0.0;
    for (int f = 0; f < fd; ++f)
      for (int b = bd - 2; b < bd; ++b)
        tail += std::norm(state.amps[static_cast<Eigen::Index>(f) * bd + b]);
    if (tail > 1e-8)
      state.warnings.push_back("displacement: truncated coherent tail mass " +
                               std::to_string(tail));
  }
}

Mat gate_full_matrix(const Gate& g, const std::vector<double>& theta,
                     const RegisterLayout& layout) {
  if (g.kind == GateKind::ControlledGivensQubit && g.form != CGForm::Native) {
    auto seq = g.form == CGForm::Fig2
                   ? compiled_controlled_givens_fig2(g.sites[0], g.sites[1], g.sites[2],
                                                     g.slot, g.scale, g.offset)
                   : compiled_controlled_givens_pauli(g.sites[0], g.sites[1], g.sites[2],
                                                      g.slot, g.scale, g.offset);
    return sequence_full_matrix(seq, theta, layout);
  }
  SiteInfo si = site_info(layout);
  Mat u = gate_site_matrix(g, g.angle(theta), layout);
  const int dim = layout.dim();
  Mat full = Mat::Zero(dim, dim);
  // column-by-column embedding via the strided application
  for (int col = 0; col < dim; ++col) {
    Vec e = Vec::Zero(dim);
    e[col] = 1.0;
    apply_site_matrix(e, u, g.sites, si);
    full.col(col) = e;
  }
  return full;
}

Mat sequence_full_matrix(const std::vector<Gate>& gates, const std::vector<double>& theta,
                         const RegisterLayout& layout) {
  Mat m = Mat::Identity(layout.dim(), layout.dim());
  for (const Gate& g : gates) m = gate_full_matrix(g, theta, layout) * m;
  return m;
}

std::vector<Gate> compiled_controlled_givens_fig2(int c, int q, int qp, int slot,
                                                  double scale, double offset) {
  // CG(t) = RY_q(pi/2) . CX_{q->q'} . CRY_{c->q'}(-t) . CRY_{c->q}(t)
  //         . CX_{q->q'} . RY_q(-pi/2), exact with no residual phase
  std::vector<Gate> seq;
  seq.push_back(make_gate(GateKind::RY, {q}, -1, 0.0, -kPi / 2));
  seq.push_back(make_gate(GateKind::CX, {q, qp}));
  seq.push_back(make_gate(GateKind::CRY, {c, q}, slot, scale, offset));
  seq.push_back(make_gate(GateKind::CRY, {c, qp}, slot, -scale, -offset));
  seq.push_back(make_gate(GateKind::CX, {q, qp}));
  seq.push_back(make_gate(GateKind::RY, {q}, -1, 0.0, kPi / 2));
  return seq;
}

std::vector<Gate> compiled_controlled_givens_pauli(int c, int q, int qp, int slot,
                                                   double scale, double offset) {
  // commuting-string split exp(i t/2 n_c X Y) exp(-i t/2 n_c Y X); each factor
  // is a CX-conjugated controlled-RZ in the string's eigenbasis
  std::vector<Gate> seq;
  auto factor = [&](char pq, char pqp, double sign) {
    std::vector<Gate> pre;
    auto basis = [&](char p, int site) {
      if (p == 'X') pre.push_back(make_gate(GateKind::H, {site}));
      else pre.push_back(make_gate(GateKind::RX, {site}, -1, 0.0, kPi / 2));
    };
    basis(pq, q);
    basis(pqp, qp);
    for (const Gate& g : pre) seq.push_back(g);
    seq.push_back(make_gate(GateKind::CX, {q, qp}));
    seq.push_back(make_gate(GateKind::CRZ, {c, qp}, slot, sign * scale, sign * offset));
    seq.push_back(make_gate(GateKind::CX, {q, qp}));
    // undo the basis change
    for (auto it = pre.rbegin(); it != pre.rend(); ++it) {
      Gate g = *it;
      if (g.kind == GateKind::RX) g.offset = -g.offset;
      seq.push_back(g);  // H is self-inverse
    }
  };
  factor('X', 'Y', -1.0);  // exp(+i t/2 n_c X_q Y_q')
  factor('Y', 'X', 1.0);   // exp(-i t/2 n_c Y_q X_q')
  return seq;
}

}  // namespace polariton
