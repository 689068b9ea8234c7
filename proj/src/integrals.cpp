#include "polariton/integrals.hpp"

#include <cmath>
#include <sstream>

namespace polariton {

Geometry Geometry::h2(double r_bohr, double theta_z) {
  if (!(r_bohr > 0.0)) throw DomainError("h2 geometry: bond length must be > 0");
  Vec3 axis(std::sin(theta_z), 0.0, std::cos(theta_z));
  Geometry g;
  g.atoms = {{"H", 1.0, 0.5 * r_bohr * axis}, {"H", 1.0, -0.5 * r_bohr * axis}};
  return g;
}

double Geometry::nuclear_repulsion() const {
  double e = 0.0;
  for (size_t a = 0; a < atoms.size(); ++a)
    for (size_t b = a + 1; b < atoms.size(); ++b) {
      double r = (atoms[a].position - atoms[b].position).norm();
      if (r < 1e-12) throw DomainError("coincident nuclei");
      e += atoms[a].charge * atoms[b].charge / r;
    }
  return e;
}

Vec3 Geometry::nuclear_dipole() const {
  Vec3 d = Vec3::Zero();
  for (const auto& a : atoms) d += a.charge * a.position;
  return d;
}

BasisSpec BasisSpec::for_geometry(const Geometry& geom, const std::string& shell_text) {
  Shell proto;
  std::istringstream in(shell_text);
  std::string line;
  int remaining = -1;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "shell") {
      std::string kind;
      if (!(ls >> kind >> remaining)) throw ConfigError("basis: malformed shell header");
      if (kind != "s") throw DomainError("unsupported basis: only s-type shells");
    } else {
      if (remaining <= 0) throw ConfigError("basis: primitive row outside shell");
      double e = std::stod(tok), c;
      if (!(ls >> c)) throw ConfigError("basis: missing coefficient");
      proto.exponents.push_back(e);
      proto.coefficients.push_back(c);
      --remaining;
    }
  }
  if (proto.exponents.empty()) throw ConfigError("basis: no primitives parsed");
  BasisSpec b;
  for (size_t a = 0; a < geom.atoms.size(); ++a) {
    Shell s = proto;
    s.atom = static_cast<int>(a);
    b.shells.push_back(std::move(s));
  }
  b.validate();
  return b;
}

namespace {
// Bundled STO-3G hydrogen shell; generated from data/sto-3g.hydrogen.
#include "sto3g_hydrogen_data.inc"
}  // namespace

BasisSpec BasisSpec::sto3g_hydrogen(const Geometry& geom) {
  return for_geometry(geom, kSto3gHydrogenData);
}

void BasisSpec::validate() const {
  for (const auto& s : shells) {
    if (s.exponents.size() != s.coefficients.size())
      throw ConfigError("basis: exponent/coefficient length mismatch");
    for (double e : s.exponents)
      if (!(e > 0.0)) throw DomainError("basis: exponents must be positive");
  }
}

double boys_f0(double x) {
  if (x < 1e-10) return 1.0 - x / 3.0 + x * x / 10.0;
  double s = std::sqrt(x);
  return 0.5 * std::sqrt(kPi) * std::erf(s) / s;
}

namespace {

double prim_norm(double a) { return std::pow(2.0 * a / kPi, 0.75); }

struct PrimPair {
  double p;       // a + b
  double k;       // exp(-ab/(a+b) |A-B|^2)
  Vec3 center;    // (aA + bB)/(a+b)
};

PrimPair pair_data(double a, const Vec3& A, double b, const Vec3& B) {
  PrimPair pp;
  pp.p = a + b;
  pp.k = std::exp(-a * b / pp.p * (A - B).squaredNorm());
  pp.center = (a * A + b * B) / pp.p;
  return pp;
}

double prim_overlap(double a, const Vec3& A, double b, const Vec3& B) {
  PrimPair pp = pair_data(a, A, b, B);
  return std::pow(kPi / pp.p, 1.5) * pp.k;
}

double prim_kinetic(double a, const Vec3& A, double b, const Vec3& B) {
  double mu = a * b / (a + b);
  double r2 = (A - B).squaredNorm();
  return mu * (3.0 - 2.0 * mu * r2) * prim_overlap(a, A, b, B);
}

double prim_nuclear(double a, const Vec3& A, double b, const Vec3& B, const Vec3& C) {
  PrimPair pp = pair_data(a, A, b, B);
  return -2.0 * kPi / pp.p * pp.k * boys_f0(pp.p * (pp.center - C).squaredNorm());
}

double prim_eri(double a, const Vec3& A, double b, const Vec3& B, double c,
                const Vec3& C, double d, const Vec3& D) {
  PrimPair ab = pair_data(a, A, b, B);
  PrimPair cd = pair_data(c, C, d, D);
  double denom = ab.p * cd.p * std::sqrt(ab.p + cd.p);
  double x = ab.p * cd.p / (ab.p + cd.p) * (ab.center - cd.center).squaredNorm();
  return 2.0 * std::pow(kPi, 2.5) / denom * ab.k * cd.k * boys_f0(x);
}

}  // namespace

AOIntegrals compute_ao_integrals(const Geometry& geom, const BasisSpec& basis) {
  if (geom.atoms.empty()) throw DomainError("compute_ao_integrals: no atoms");
  basis.validate();
  const int n = static_cast<int>(basis.shells.size());

  // Contracted coefficients including primitive norms, then rescaled so the
  // contracted self-overlap is exactly 1.
  std::vector<std::vector<double>> coef(n);
  std::vector<Vec3> center(n);
  for (int i = 0; i < n; ++i) {
    const Shell& s = basis.shells[i];
    center[i] = geom.atoms[s.atom].position;
    coef[i].resize(s.exponents.size());
    for (size_t k = 0; k < s.exponents.size(); ++k)
      coef[i][k] = s.coefficients[k] * prim_norm(s.exponents[k]);
    double self = 0.0;
    for (size_t k = 0; k < s.exponents.size(); ++k)
      for (size_t l = 0; l < s.exponents.size(); ++l)
        self += coef[i][k] * coef[i][l] *
                prim_overlap(s.exponents[k], center[i], s.exponents[l], center[i]);
    double scale = 1.0 / std::sqrt(self);
    for (double& c : coef[i]) c *= scale;
  }

  AOIntegrals ao;
  ao.n_ao = n;
  ao.overlap = RMat::Zero(n, n);
  ao.kinetic = RMat::Zero(n, n);
  ao.nuclear = RMat::Zero(n, n);
  for (auto& d : ao.dipole) d = RMat::Zero(n, n);
  ao.eri = Tensor4(n);
  ao.e_nuc = geom.nuclear_repulsion();
  ao.d_nuc = geom.nuclear_dipole();

  for (int i = 0; i < n; ++i) {
    const Shell& si = basis.shells[i];
    for (int j = 0; j < n; ++j) {
      const Shell& sj = basis.shells[j];
      for (size_t ki = 0; ki < si.exponents.size(); ++ki)
        for (size_t kj = 0; kj < sj.exponents.size(); ++kj) {
          double a = si.exponents[ki], b = sj.exponents[kj];
          double cc = coef[i][ki] * coef[j][kj];
          double s = prim_overlap(a, center[i], b, center[j]);
          ao.overlap(i, j) += cc * s;
          ao.kinetic(i, j) += cc * prim_kinetic(a, center[i], b, center[j]);
          for (const auto& atom : geom.atoms)
            ao.nuclear(i, j) +=
                cc * atom.charge * prim_nuclear(a, center[i], b, center[j], atom.position);
          // s-Gaussian moment about the origin: product center times overlap
          Vec3 P = pair_data(a, center[i], b, center[j]).center;
          for (int c = 0; c < 3; ++c) ao.dipole[c](i, j) += cc * s * P[c];
        }
    }
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double v = 0.0;
          const Shell &si = basis.shells[i], &sj = basis.shells[j];
          const Shell &sk = basis.shells[k], &sl = basis.shells[l];
          for (size_t pi = 0; pi < si.exponents.size(); ++pi)
            for (size_t pj = 0; pj < sj.exponents.size(); ++pj)
              for (size_t pk = 0; pk < sk.exponents.size(); ++pk)
                for (size_t pl = 0; pl < sl.exponents.size(); ++pl)
                  v += coef[i][pi] * coef[j][pj] * coef[k][pk] * coef[l][pl] *
                       prim_eri(si.exponents[pi], center[i], sj.exponents[pj], center[j],
                                sk.exponents[pk], center[k], sl.exponents[pl], center[l]);
          ao.eri(i, j, k, l) = v;
        }

  return ao;
}

RHFResult run_rhf(const AOIntegrals& ao, int n_e) {
  if (n_e % 2 != 0) throw DomainError("run_rhf: closed-shell only (even n_e)");
  if (n_e > 2 * ao.n_ao) throw DomainError("run_rhf: too many electrons for basis");
  const int n = ao.n_ao;
  const int nocc = n_e / 2;

  Eigen::SelfAdjointEigenSolver<RMat> ses(ao.overlap);
  if (ses.eigenvalues().minCoeff() < 1e-10)
    throw NumericError("run_rhf: overlap matrix not positive definite");
  RMat x = ses.operatorInverseSqrt();

  RMat hcore = ao.kinetic + ao.nuclear;
  auto build_fock = [&](const RMat& dens) {
    RMat f = hcore;
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        double v = 0.0;
        for (int r = 0; r < n; ++r)
          for (int s = 0; s < n; ++s)
            v += dens(r, s) * (ao.eri(p, q, s, r) - 0.5 * ao.eri(p, r, s, q));
        f(p, q) += v;
      }
    return f;
  };
  auto density_from = [&](const RMat& c) {
    return RMat(2.0 * c.leftCols(nocc) * c.leftCols(nocc).transpose());
  };

  RMat dens = RMat::Zero(n, n);
  RMat coeffs;
  RVec eps;
  const double damping = 0.5;
  const int max_cycles = 200;
  int cycle = 0;
  for (; cycle < max_cycles; ++cycle) {
    RMat f = build_fock(dens);
    Eigen::SelfAdjointEigenSolver<RMat> fs(x.transpose() * f * x);
    coeffs = x * fs.eigenvectors();
    eps = fs.eigenvalues();
    RMat fresh = density_from(coeffs);
    double change = (fresh - dens).cwiseAbs().maxCoeff();
    dens = cycle == 0 ? fresh : RMat(damping * dens + (1.0 - damping) * fresh);
    if (change < 1e-10) break;
  }
  if (cycle == max_cycles) throw NumericError("run_rhf: SCF did not converge in 200 cycles");

  // settle on the pure (undamped) converged density for the final energy
  dens = density_from(coeffs);
  RMat f = build_fock(dens);
  double e_el = 0.5 * (dens.array() * (hcore + f).array()).sum();

  RHFResult out;
  out.coefficients = coeffs;
  out.orbital_energies = eps;
  out.energy = e_el + ao.e_nuc;
  out.cycles = cycle + 1;
  return out;
}

MolecularIntegrals transform_to_mo(const AOIntegrals& ao, const RMat& c, int n_e,
                                   double hf_energy) {
  if (c.rows() != ao.n_ao) throw DomainError("transform_to_mo: dimension mismatch");
  const int n = ao.n_ao;
  const int m = static_cast<int>(c.cols());

  MolecularIntegrals mi;
  mi.n_orb = m;
  mi.n_e = n_e;
  mi.e_nuc = ao.e_nuc;
  mi.d_nuc = ao.d_nuc;
  mi.hf_energy = hf_energy;
  mi.h = c.transpose() * (ao.kinetic + ao.nuclear) * c;
  for (int comp = 0; comp < 3; ++comp)
    mi.d_e[comp] = -(c.transpose() * ao.dipole[comp] * c);

  if (m != n) throw DomainError("transform_to_mo: coefficient matrix must be square");

  // four-index transform, one index at a time
  std::vector<double> t0(static_cast<size_t>(n) * n * n * n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s)
          t0[((static_cast<size_t>(p) * n + q) * n + r) * n + s] = ao.eri(p, q, r, s);

  auto contract = [&](const std::vector<double>& in, int nin) {
    // rotates the first index and cycles it to the back
    std::vector<double> out(static_cast<size_t>(m) * nin * nin * nin, 0.0);
    for (int a = 0; a < m; ++a)
      for (int q = 0; q < nin; ++q)
        for (int r = 0; r < nin; ++r)
          for (int s = 0; s < nin; ++s) {
            double v = 0.0;
            for (int p = 0; p < nin; ++p)
              v += c(p, a) * in[((static_cast<size_t>(p) * nin + q) * nin + r) * nin + s];
            out[((static_cast<size_t>(q) * nin + r) * nin + s) * m + a] = v;
          }
    return out;
  };
  // n == m for square transforms; after four cycles indices return in order
  std::vector<double> t = t0;
  for (int rep = 0; rep < 4; ++rep) t = contract(t, n);
  mi.g = Tensor4(m);
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q)
      for (int r = 0; r < m; ++r)
        for (int s = 0; s < m; ++s)
          mi.g(p, q, r, s) = t[((static_cast<size_t>(p) * m + q) * m + r) * m + s];
  return mi;
}

MolecularIntegrals h2_sto3g_integrals(double r_bohr, double theta_z) {
  Geometry geom = Geometry::h2(r_bohr, theta_z);
  BasisSpec basis = BasisSpec::sto3g_hydrogen(geom);
  AOIntegrals ao = compute_ao_integrals(geom, basis);
  RHFResult hf = run_rhf(ao, 2);
  return transform_to_mo(ao, hf.coefficients, 2, hf.energy);
}

}  // namespace polariton
