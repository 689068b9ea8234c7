#include "polariton/optim.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace polariton {

namespace {

struct Counter {
  const ObjectiveFn& fn;
  int evals = 0;
  double operator()(const std::vector<double>& x) {
    ++evals;
    return fn(x);
  }
};

std::vector<double> gradient(Counter& f, const std::vector<double>& x, double h) {
  std::vector<double> g(x.size());
  std::vector<double> xp = x;
  for (size_t i = 0; i < x.size(); ++i) {
    double xi = x[i];
    xp[i] = xi + h;
    double fp = f(xp);
    xp[i] = xi - h;
    double fm = f(xp);
    xp[i] = xi;
    g[i] = (fp - fm) / (2.0 * h);
  }
  return g;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double inf_norm(const std::vector<double>& a) {
  double s = 0.0;
  for (double v : a) s = std::max(s, std::abs(v));
  return s;
}

struct LinePoint {
  double a, f, g;  // step, value, directional derivative
};

}  // namespace

MinimizeResult minimize_lbfgs(const ObjectiveFn& fn, std::vector<double> x0,
                              const MinimizeOptions& opts) {
  Counter f{fn};
  const size_t n = x0.size();
  MinimizeResult res;
  res.x = std::move(x0);
  res.f = f(res.x);
  if (n == 0) {
    res.converged = true;
    res.evaluations = f.evals;
    return res;
  }

  std::deque<std::vector<double>> s_hist, y_hist;
  std::deque<double> rho_hist;
  std::vector<double> g = gradient(f, res.x, opts.fd_step);

  const double c1 = 1e-4, c2 = 0.4;
  for (int iter = 0; f.evals < opts.max_evaluations; ++iter) {
    res.iterations = iter;
    if (inf_norm(g) < opts.g_tol) {
      res.converged = true;
      break;
    }

    // two-loop recursion
    std::vector<double> d(g);
    std::vector<double> alpha(s_hist.size());
    for (int i = static_cast<int>(s_hist.size()) - 1; i >= 0; --i) {
      alpha[i] = rho_hist[i] * dot(s_hist[i], d);
      for (size_t k = 0; k < n; ++k) d[k] -= alpha[i] * y_hist[i][k];
    }
    if (!s_hist.empty()) {
      double gamma = dot(s_hist.back(), y_hist.back()) / dot(y_hist.back(), y_hist.back());
      for (double& v : d) v *= gamma;
    }
    for (size_t i = 0; i < s_hist.size(); ++i) {
      double beta = rho_hist[i] * dot(y_hist[i], d);
      for (size_t k = 0; k < n; ++k) d[k] += (alpha[i] - beta) * s_hist[i][k];
    }
    for (double& v : d) v = -v;

    double dg0 = dot(d, g);
    if (dg0 >= 0.0) {  // not a descent direction; reset to steepest descent
      s_hist.clear();
      y_hist.clear();
      rho_hist.clear();
      for (size_t k = 0; k < n; ++k) d[k] = -g[k];
      dg0 = dot(d, g);
      if (dg0 >= 0.0) {
        res.converged = true;  // gradient numerically zero
        break;
      }
    }

    // strong-Wolfe line search (bracket + zoom with bisection/interpolation)
    auto phi = [&](double a) {
      std::vector<double> xt(n);
      for (size_t k = 0; k < n; ++k) xt[k] = res.x[k] + a * d[k];
      return f(xt);
    };
    auto phi_grad = [&](double a, std::vector<double>& g_out) {
      std::vector<double> xt(n);
      for (size_t k = 0; k < n; ++k) xt[k] = res.x[k] + a * d[k];
      g_out = gradient(f, xt, opts.fd_step);
      return dot(g_out, d);
    };

    const double f0 = res.f;
    double a_prev = 0.0, f_prev = f0;
    double a = 1.0;
    double a_lo = -1.0, a_hi = -1.0, f_lo = 0.0;
    std::vector<double> g_trial;
    bool bracketed = false;
    double a_star = 0.0, f_star = f0;
    bool found = false;
    for (int ls = 0; ls < 12 && f.evals < opts.max_evaluations; ++ls) {
      double fa = phi(a);
      if (fa > f0 + c1 * a * dg0 || (ls > 0 && fa >= f_prev)) {
        a_lo = a_prev;
        f_lo = f_prev;
        a_hi = a;
        bracketed = true;
        break;
      }
      double ga = phi_grad(a, g_trial);
      if (std::abs(ga) <= -c2 * dg0) {
        a_star = a;
        f_star = fa;
        found = true;
        break;
      }
      if (ga >= 0.0) {
        a_lo = a;
        f_lo = fa;
        a_hi = a_prev;
        bracketed = true;
        break;
      }
      a_prev = a;
      f_prev = fa;
      a *= 2.5;
    }
    if (!found && bracketed) {
      for (int z = 0; z < 20 && f.evals < opts.max_evaluations; ++z) {
        double am = 0.5 * (a_lo + a_hi);
        double fm = phi(am);
        if (fm > f0 + c1 * am * dg0 || fm >= f_lo) {
          a_hi = am;
        } else {
          double gm = phi_grad(am, g_trial);
          if (std::abs(gm) <= -c2 * dg0) {
            a_star = am;
            f_star = fm;
            found = true;
            break;
          }
          if (gm * (a_hi - a_lo) >= 0.0) a_hi = a_lo;
          a_lo = am;
          f_lo = fm;
        }
        if (std::abs(a_hi - a_lo) < 1e-14) break;
      }
      if (!found && a_lo > 0.0 && f_lo < f0) {  // accept best bracketed point
        a_star = a_lo;
        f_star = f_lo;
        phi_grad(a_star, g_trial);
        found = true;
      }
    }
    if (!found || a_star <= 0.0) {
      res.converged = inf_norm(g) < 100 * opts.g_tol;
      break;  // line search failed; stationary to working precision
    }

    std::vector<double> x_new(n), s(n), y(n);
    for (size_t k = 0; k < n; ++k) {
      x_new[k] = res.x[k] + a_star * d[k];
      s[k] = x_new[k] - res.x[k];
    }
    std::vector<double> g_new = g_trial.empty() ? gradient(f, x_new, opts.fd_step) : g_trial;
    for (size_t k = 0; k < n; ++k) y[k] = g_new[k] - g[k];

    double f_old = res.f;
    res.x = std::move(x_new);
    res.f = f_star;
    g = std::move(g_new);

    if (dot(s, y) > 1e-14) {
      s_hist.push_back(std::move(s));
      y_hist.push_back(std::move(y));
      rho_hist.push_back(1.0 / dot(s_hist.back(), y_hist.back()));
      if (static_cast<int>(s_hist.size()) > opts.history) {
        s_hist.pop_front();
        y_hist.pop_front();
        rho_hist.pop_front();
      }
    }

    if (std::abs(f_old - res.f) < opts.f_tol * (std::abs(f_old) + 1e-12)) {
      res.converged = true;
      break;
    }
  }
  res.evaluations = f.evals;
  return res;
}

}  // namespace polariton
