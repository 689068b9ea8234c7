#include "polariton/fcidump.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace polariton {

bool has_dipole(const MolecularIntegrals& mi) {
  return mi.d_e[0].size() > 0;
}

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return buf;
}

[[noreturn]] void parse_fail(const std::string& path, int line_no, const std::string& what) {
  throw ConfigError("fcidump parse error at " + path + ":" + std::to_string(line_no) +
                    ": " + what);
}

}  // namespace

void write_fcidump(const MolecularIntegrals& mi, const std::string& path,
                   const std::string& dipole_path) {
  const int n = mi.n_orb;
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open for writing: " + path);
  out << "&FCI NORB=" << n << ",NELEC=" << mi.n_e << ",MS2=0,\n&END\n";
  for (int p = 0; p < n; ++p)
    for (int q = 0; q <= p; ++q)
      for (int r = 0; r <= p; ++r)
        for (int s = 0; s <= (r == p ? q : r); ++s)
          out << fmt(mi.g(p, q, r, s)) << ' ' << p + 1 << ' ' << q + 1 << ' ' << r + 1
              << ' ' << s + 1 << '\n';
  for (int p = 0; p < n; ++p)
    for (int q = 0; q <= p; ++q)
      out << fmt(mi.h(p, q)) << ' ' << p + 1 << ' ' << q + 1 << " 0 0\n";
  out << fmt(mi.e_nuc) << " 0 0 0 0\n";

  if (dipole_path.empty()) return;
  std::ofstream dp(dipole_path);
  if (!dp) throw ConfigError("cannot open for writing: " + dipole_path);
  const char* tags = "xyz";
  for (int c = 0; c < 3; ++c)
    for (int p = 0; p < n; ++p)
      for (int q = 0; q <= p; ++q)
        dp << tags[c] << ' ' << fmt(mi.d_e[c](p, q)) << ' ' << p + 1 << ' ' << q + 1 << '\n';
  dp << "nuc " << fmt(mi.d_nuc[0]) << ' ' << fmt(mi.d_nuc[1]) << ' ' << fmt(mi.d_nuc[2])
     << '\n';
}

MolecularIntegrals load_fcidump(const std::string& path, const std::string& dipole_path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open fcidump: " + path);

  MolecularIntegrals mi;
  std::string line;
  int line_no = 0;
  int norb = -1, nelec = -1;
  // header: accept one or more lines up to &END, scanning KEY=value pairs
  while (std::getline(in, line)) {
    ++line_no;
    std::string up;
    for (char ch : line) up.push_back(static_cast<char>(std::toupper(ch)));
    for (const char* key : {"NORB", "NELEC", "MS2"}) {
      auto pos = up.find(key);
      if (pos == std::string::npos) continue;
      pos = up.find('=', pos);
      if (pos == std::string::npos) parse_fail(path, line_no, "missing '=' after header key");
      int v = std::atoi(up.c_str() + pos + 1);
      if (std::string(key) == "NORB") norb = v;
      if (std::string(key) == "NELEC") nelec = v;
    }
    if (up.find("&END") != std::string::npos) break;
    if (line_no > 64) parse_fail(path, line_no, "header never terminated with &END");
  }
  if (norb <= 0 || nelec < 0) parse_fail(path, line_no, "header lacks NORB/NELEC");
  mi.n_orb = norb;
  mi.n_e = nelec;
  mi.h = RMat::Zero(norb, norb);
  mi.g = Tensor4(norb);

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    double v;
    int i, j, k, l;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!(ls >> v >> i >> j >> k >> l)) parse_fail(path, line_no, "expected 'value i j k l'");
    if (i == 0 && j == 0 && k == 0 && l == 0) {
      mi.e_nuc = v;
    } else if (k == 0 && l == 0) {
      if (i < 1 || i > norb || j < 1 || j > norb) parse_fail(path, line_no, "index out of range");
      mi.h(i - 1, j - 1) = v;
      mi.h(j - 1, i - 1) = v;
    } else {
      if (i < 1 || i > norb || j < 1 || j > norb || k < 1 || k > norb || l < 1 || l > norb)
        parse_fail(path, line_no, "index out of range");
      int p = i - 1, q = j - 1, r = k - 1, s = l - 1;
      for (auto [a, b, c, d] : {std::array<int, 4>{p, q, r, s}, {q, p, r, s}, {p, q, s, r},
                                {q, p, s, r}, {r, s, p, q}, {s, r, p, q}, {r, s, q, p},
                                {s, r, q, p}})
        mi.g(a, b, c, d) = v;
    }
  }

  if (!dipole_path.empty()) {
    std::ifstream dp(dipole_path);
    if (!dp) throw ConfigError("dipole file absent: " + dipole_path);
    for (auto& m : mi.d_e) m = RMat::Zero(norb, norb);
    line_no = 0;
    while (std::getline(dp, line)) {
      ++line_no;
      std::istringstream ls(line);
      std::string tag;
      if (!(ls >> tag)) continue;
      if (tag == "nuc") {
        if (!(ls >> mi.d_nuc[0] >> mi.d_nuc[1] >> mi.d_nuc[2]))
          parse_fail(dipole_path, line_no, "expected 'nuc x y z'");
        continue;
      }
      int c = tag == "x" ? 0 : tag == "y" ? 1 : tag == "z" ? 2 : -1;
      if (c < 0) parse_fail(dipole_path, line_no, "unknown component tag '" + tag + "'");
      double v;
      int i, j;
      if (!(ls >> v >> i >> j)) parse_fail(dipole_path, line_no, "expected 'c value i j'");
      if (i < 1 || i > norb || j < 1 || j > norb)
        parse_fail(dipole_path, line_no, "index out of range");
      mi.d_e[c](i - 1, j - 1) = v;
      mi.d_e[c](j - 1, i - 1) = v;
    }
  }
  return mi;
}

}  // namespace polariton
