#include "polariton/mappings.hpp"

#include <cmath>

#include "polariton/linalg.hpp"

namespace polariton {

std::string platform_name(Platform p) {
  switch (p) {
    case Platform::Qubit: return "qubit";
    case Platform::Qudit: return "qudit";
    case Platform::Qumode: return "qumode";
  }
  return "?";
}

Platform platform_from_name(const std::string& s) {
  if (s == "qubit") return Platform::Qubit;
  if (s == "qudit") return Platform::Qudit;
  if (s == "qumode") return Platform::Qumode;
  throw ConfigError("unknown platform '" + s + "' (expected qubit|qudit|qumode)");
}

namespace {

Mat pauli_letter(char c) {
  Mat m(2, 2);
  switch (c) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, cplx(0, -1), cplx(0, 1), 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: throw DomainError(std::string("bad Pauli letter '") + c + "'");
  }
  return m;
}

}  // namespace

Mat PauliTerm::to_matrix() const {
  Mat m = Mat::Identity(1, 1);
  for (char c : letters) m = kron(m, pauli_letter(c));
  return coefficient * m;
}

Mat pauli_sum_matrix(const std::vector<PauliTerm>& terms) {
  if (terms.empty()) throw DomainError("pauli_sum_matrix: empty sum");
  Mat m = terms[0].to_matrix();
  for (size_t i = 1; i < terms.size(); ++i) m += terms[i].to_matrix();
  return m;
}

std::vector<PauliTerm> jw_creation(int p, int n_qubits) {
  if (p < 0 || p >= n_qubits) throw DomainError("jw_creation: index out of range");
  std::string zx(n_qubits, 'I'), zy(n_qubits, 'I');
  for (int k = 0; k < p; ++k) zx[k] = zy[k] = 'Z';
  zx[p] = 'X';
  zy[p] = 'Y';
  return {{cplx(0.5, 0.0), zx}, {cplx(0.0, -0.5), zy}};
}

Mat jw_creation_matrix(int p, int n_qubits) {
  // direct occupation-number construction; site 0 is the slowest index
  if (p < 0 || p >= n_qubits) throw DomainError("jw_creation_matrix: index out of range");
  const int dim = 1 << n_qubits;
  Mat m = Mat::Zero(dim, dim);
  for (int b = 0; b < dim; ++b) {
    int bit = (b >> (n_qubits - 1 - p)) & 1;
    if (bit) continue;
    int parity = 0;
    for (int k = 0; k < p; ++k) parity ^= (b >> (n_qubits - 1 - k)) & 1;
    int target = b | (1 << (n_qubits - 1 - p));
    m(target, b) = parity ? -1.0 : 1.0;
  }
  return m;
}

Mat gellmann_x(int d, int l, int lp) {
  if (!(0 <= l && l < lp && lp <= d - 1)) throw DomainError("gellmann: bad index pair");
  Mat m = Mat::Zero(d, d);
  m(l, lp) = 1.0;
  m(lp, l) = 1.0;
  return m;
}

Mat gellmann_y(int d, int l, int lp) {
  if (!(0 <= l && l < lp && lp <= d - 1)) throw DomainError("gellmann: bad index pair");
  Mat m = Mat::Zero(d, d);
  m(l, lp) = cplx(0, -1);
  m(lp, l) = cplx(0, 1);
  return m;
}

std::vector<PauliTerm> boson_creation_qubit_terms(int n_b_max) {
  if (n_b_max < 1) throw DomainError("boson_creation_qubit: need n_b_max >= 1");
  const int nq = n_b_max + 1;
  std::vector<PauliTerm> terms;
  for (int q = 0; q < n_b_max; ++q) {
    double w = 0.25 * std::sqrt(double(q + 1));
    // sigma^+ on site q+1 times sigma^- on site q moves the hot bit up
    auto put = [&](char a, char b, cplx coef) {
      std::string s(nq, 'I');
      s[q + 1] = a;
      s[q] = b;
      terms.push_back({coef, s});
    };
    put('X', 'X', w);
    put('X', 'Y', cplx(0, w));
    put('Y', 'X', cplx(0, -w));
    put('Y', 'Y', w);
  }
  return terms;
}

Mat boson_creation_qubit(int n_b_max) {
  return pauli_sum_matrix(boson_creation_qubit_terms(n_b_max));
}

Mat boson_creation_qudit(int d) {
  if (d < 2) throw DomainError("boson_creation_qudit: need d >= 2");
  Mat m = Mat::Zero(d, d);
  for (int l = 0; l + 1 < d; ++l)
    m += 0.5 * std::sqrt(double(l + 1)) *
         (gellmann_x(d, l, l + 1) - cplx(0, 1) * gellmann_y(d, l, l + 1));
  return m;
}

Mat boson_creation_qumode(int n_cut) {
  if (n_cut < 1) throw DomainError("boson_creation_qumode: need n_cut >= 1");
  return boson_annihilation(n_cut + 1).adjoint();
}

Mat truncated_ladder(int levels) { return boson_annihilation(levels).adjoint(); }

int RegisterLayout::boson_dim() const {
  switch (platform) {
    case Platform::Qubit: return 1 << (n_b_max + 1);
    case Platform::Qudit: return n_b_max + 1;
    case Platform::Qumode: return n_cut + 1;
  }
  return 0;
}

int RegisterLayout::basis_index(Determinant ferm_mask, int level) const {
  int f = 0;
  for (int k = 0; k < n_ferm; ++k)
    if (ferm_mask & (1u << k)) f |= 1 << (n_ferm - 1 - k);
  int b;
  if (platform == Platform::Qubit) {
    if (level > n_b_max) throw DomainError("basis_index: level beyond one-hot register");
    b = 1 << (n_b_max - level);  // hot bit at site `level`
  } else {
    if (level >= boson_dim()) throw DomainError("basis_index: level beyond cutoff");
    b = level;
  }
  return f * boson_dim() + b;
}

RegisterLayout RegisterLayout::make(Platform p, int n_ferm, int n_b_max, int n_cut) {
  RegisterLayout l;
  l.platform = p;
  l.n_ferm = n_ferm;
  l.n_b_max = n_b_max;
  l.n_cut = n_cut;
  return l;
}

namespace {

struct FermionOps {
  std::vector<Mat> e;  // E_pq, row-major p*n_orb+q
  int n_orb;
  Mat one_body(const RMat& c) const {
    Mat m = Mat::Zero(e[0].rows(), e[0].cols());
    for (int p = 0; p < n_orb; ++p)
      for (int q = 0; q < n_orb; ++q)
        if (c(p, q) != 0.0) m += c(p, q) * e[p * n_orb + q];
    return m;
  }
};

FermionOps jw_excitations(int n_orb) {
  const int nq = 2 * n_orb;
  std::vector<Mat> adag(nq);
  for (int k = 0; k < nq; ++k) adag[k] = jw_creation_matrix(k, nq);
  FermionOps ops;
  ops.n_orb = n_orb;
  ops.e.resize(static_cast<size_t>(n_orb) * n_orb);
  for (int p = 0; p < n_orb; ++p)
    for (int q = 0; q < n_orb; ++q) {
      Mat m = adag[2 * p] * adag[2 * q].adjoint() + adag[2 * p + 1] * adag[2 * q + 1].adjoint();
      ops.e[p * n_orb + q] = m;
    }
  return ops;
}

Mat mapped_boson_creation(const RegisterLayout& layout) {
  switch (layout.platform) {
    case Platform::Qubit: return boson_creation_qubit(layout.n_b_max);
    case Platform::Qudit: return boson_creation_qudit(layout.n_b_max + 1);
    case Platform::Qumode: return boson_creation_qumode(layout.n_cut);
  }
  throw DomainError("bad platform");
}

}  // namespace

OperatorMatrix PlatformHamiltonian::dense() const {
  Mat h = kron(ferm, Mat::Identity(boson_c.rows(), boson_c.cols())) +
          kron(coupling, boson_c) +
          kron(Mat::Identity(ferm.rows(), ferm.cols()), boson_n);
  return {h, true};
}

double PlatformHamiltonian::expectation(const Vec& state) const {
  cplx v = matrix_element(state, state);
  if (std::abs(v.imag()) > 1e-10)
    throw NumericError("platform expectation: imaginary residue exceeds 1e-10");
  return v.real();
}

cplx PlatformHamiltonian::matrix_element(const Vec& bra, const Vec& ket) const {
  const int fd = static_cast<int>(ferm.rows());
  const int bd = static_cast<int>(boson_c.rows());
  using RM = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  Eigen::Map<const RM> X(ket.data(), fd, bd);
  Eigen::Map<const RM> Y(bra.data(), fd, bd);
  RM acc = ferm * X;                             // (F (x) 1) ket
  acc += coupling * X * boson_c.transpose();     // (G (x) C) ket
  acc += X * boson_n.transpose();                // (1 (x) B) ket
  return (Y.conjugate().cwiseProduct(acc)).sum();
}

PlatformHamiltonian assemble_platform_hamiltonian(const MolecularIntegrals& mi,
                                                  const CavitySpec& cav,
                                                  const RegisterLayout& layout) {
  cav.validate();
  if (layout.n_ferm != 2 * mi.n_orb)
    throw ConfigError("platform hamiltonian: layout fermion count != 2*n_orb");
  if (layout.platform != Platform::Qumode && layout.n_b_max != cav.n_b_max)
    throw ConfigError("platform hamiltonian: photon cutoff mismatch between cavity and layout");
  if (layout.platform == Platform::Qumode && layout.n_cut < cav.n_b_max)
    throw ConfigError("platform hamiltonian: qumode cutoff below cavity cutoff");
  if (!(mi.d_e[0].size() > 0)) throw DomainError("platform hamiltonian: dipole absent");

  FermionOps ops = jw_excitations(mi.n_orb);
  const int fd = 1 << layout.n_ferm;

  Mat he = Mat::Zero(fd, fd);
  for (int p = 0; p < mi.n_orb; ++p)
    for (int q = 0; q < mi.n_orb; ++q) he += mi.h(p, q) * ops.e[p * mi.n_orb + q];
  for (int p = 0; p < mi.n_orb; ++p)
    for (int q = 0; q < mi.n_orb; ++q)
      for (int r = 0; r < mi.n_orb; ++r)
        for (int s = 0; s < mi.n_orb; ++s) {
          double g = mi.g(p, q, r, s);
          if (g == 0.0) continue;
          Mat term = ops.e[p * mi.n_orb + q] * ops.e[r * mi.n_orb + s];
          if (q == r) term -= ops.e[p * mi.n_orb + s];
          he += 0.5 * g * term;
        }
  he += mi.e_nuc * Mat::Identity(fd, fd);

  Vec3 lam = cav.coupling_vector();
  RMat c = RMat::Zero(mi.n_orb, mi.n_orb);
  for (int comp = 0; comp < 3; ++comp) c += lam[comp] * mi.d_e[comp];
  if (mi.n_e > 0) c += (lam.dot(mi.d_nuc) / mi.n_e) * RMat::Identity(mi.n_orb, mi.n_orb);
  Mat d = ops.one_body(c);

  Mat bdag = mapped_boson_creation(layout);
  PlatformHamiltonian ph;
  ph.layout = layout;
  ph.ferm = he + 0.5 * d * d;
  ph.coupling = -std::sqrt(cav.omega / 2.0) * d;
  ph.boson_c = bdag + bdag.adjoint();
  ph.boson_n = cav.omega * (bdag * bdag.adjoint());
  return ph;
}

PlatformObservables platform_observables(const RegisterLayout& layout) {
  const int n_orb = layout.n_ferm / 2;
  FermionOps ops = jw_excitations(n_orb);
  const int fd = 1 << layout.n_ferm;
  Mat idb = Mat::Identity(layout.boson_dim(), layout.boson_dim());

  Mat sz = Mat::Zero(fd, fd), ne = Mat::Zero(fd, fd), splus = Mat::Zero(fd, fd);
  for (int p = 0; p < n_orb; ++p) {
    Mat nup = jw_creation_matrix(2 * p, layout.n_ferm) *
              jw_creation_matrix(2 * p, layout.n_ferm).adjoint();
    Mat ndn = jw_creation_matrix(2 * p + 1, layout.n_ferm) *
              jw_creation_matrix(2 * p + 1, layout.n_ferm).adjoint();
    sz += 0.5 * (nup - ndn);
    ne += nup + ndn;
    splus += jw_creation_matrix(2 * p, layout.n_ferm) *
             jw_creation_matrix(2 * p + 1, layout.n_ferm).adjoint();
  }
  Mat s2 = splus.adjoint() * splus + sz * (sz + Mat::Identity(fd, fd));

  Mat bdag = mapped_boson_creation(layout);
  Mat idf = Mat::Identity(fd, fd);

  PlatformObservables obs;
  obs.s2 = {kron(s2, idb), true};
  obs.sz = {kron(sz, idb), true};
  obs.n_e = {kron(ne, idb), true};
  obs.photon_number = {kron(idf, Mat(bdag * bdag.adjoint())), true};
  return obs;
}

double one_hot_leakage(const Vec& state, const RegisterLayout& layout) {
  if (layout.platform != Platform::Qubit) return 0.0;
  const int bd = layout.boson_dim();
  const int fd = layout.ferm_dim();
  double leak = 0.0;
  for (int f = 0; f < fd; ++f)
    for (int b = 0; b < bd; ++b) {
      bool one_hot = b != 0 && (b & (b - 1)) == 0;
      if (!one_hot) leak += std::norm(state[static_cast<Eigen::Index>(f) * bd + b]);
    }
  return leak;
}

}  // namespace polariton
