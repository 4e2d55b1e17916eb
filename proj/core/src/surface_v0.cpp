#include "parab/surface_v0.hpp"

#include <cmath>
#include <stdexcept>

#include "parab/sphere.hpp"

namespace parab {

WeightV0::WeightV0(int d_, double beta_, double gamma_) : d(d_), beta(beta_), gamma(gamma_) {
  if (d < 2) throw std::invalid_argument("WeightV0: require d >= 2");
  if (!(beta > -0.5 * (d + 1)) || !(gamma > -1.0))
    throw std::invalid_argument("WeightV0: require beta > -(d+1)/2 and gamma > -1");
  b_bg = beta_const(alpha(), gamma) / omega_d(d);
}

double basis_Q_eval(int n, int m, int ell, const WeightV0& w, const SurfacePoint& p) {
  if (m < 0 || m > n) throw std::invalid_argument("basis_Q_eval: need 0 <= m <= n");
  const HarmonicIndex idx(w.d, m, ell);
  return jacobi_eval(n - m, JacobiParams(w.alpha() + m, w.gamma), 1.0 - 2.0 * p.t) *
         std::pow(std::sqrt(p.t), m) * sph_eval(idx, p.xi);
}

double basis_Q_norm(int n, int m, const WeightV0& w) {
  if (m < 0 || m > n) throw std::invalid_argument("basis_Q_norm: need 0 <= m <= n");
  return beta_const(w.alpha(), w.gamma) / beta_const(w.alpha() + m, w.gamma) *
         jacobi_norm(n - m, JacobiParams(w.alpha() + m, w.gamma));
}

size_t v0_coeff_count(int d, int N) {
  size_t c = 0;
  for (int n = 0; n <= N; ++n)
    for (int m = 0; m <= n; ++m) c += dim_harmonics(d, m);
  return c;
}

size_t v0_coeff_index(int d, int n, int m, int ell) {
  // offset of block n, then the (m, ell) position inside it
  size_t off = 0;
  for (int nn = 0; nn < n; ++nn)
    for (int mm = 0; mm <= nn; ++mm) off += dim_harmonics(d, mm);
  for (int mm = 0; mm < m; ++mm) off += dim_harmonics(d, mm);
  return off + (ell - 1);
}

void basis_Q_eval_all(int N, const WeightV0& w, const SurfacePoint& p, std::vector<double>& out) {
  out.clear();
  out.reserve(v0_coeff_count(w.d, N));
  std::vector<double> yvals;
  sph_eval_all(w.d, N, p.xi, yvals);
  std::vector<size_t> yoff(static_cast<size_t>(N) + 2, 0);
  for (int m = 0; m <= N; ++m) yoff[m + 1] = yoff[m] + dim_harmonics(w.d, m);

  const double s = 1.0 - 2.0 * p.t;
  const double st = std::sqrt(p.t);
  std::vector<std::vector<double>> jac(static_cast<size_t>(N) + 1);
  std::vector<double> tpow(static_cast<size_t>(N) + 1);
  double tp = 1.0;
  for (int m = 0; m <= N; ++m) {
    jacobi_eval_all(N - m, JacobiParams(w.alpha() + m, w.gamma), s, jac[m]);
    tpow[m] = tp;
    tp *= st;
  }
  for (int n = 0; n <= N; ++n)
    for (int m = 0; m <= n; ++m) {
      const double radial = jac[m][n - m] * tpow[m];
      for (size_t j = yoff[m]; j < yoff[m + 1]; ++j) out.push_back(radial * yvals[j]);
    }
}

double transfer_T(const USlice& g, const WeightV0& w, const SurfacePoint& p,
                  const SurfacePoint& q, int quad_degree) {
  if (w.beta < -0.5)
    throw std::invalid_argument("transfer_T: defined for beta >= -1/2");
  const double c = dot(p.xi, q.xi);
  const double ss = std::sqrt(q.t);
  if (w.beta == -0.5) return g(p.t, UPoint(ss * c, q.t));

  const int npts = points_for_degree(quad_degree) + 2;
  const Rule1D z1r = gauss_jacobi_prob(npts, 0.5 * (w.d - 2), w.beta - 0.5);
  const Rule1D z2r = gauss_jacobi_prob(npts, w.beta, w.beta);
  double acc = 0.0;
  for (size_t i = 0; i < z1r.nodes.size(); ++i) {
    const double z1 = z1r.nodes[i];
    double inner = 0.0;
    for (size_t j = 0; j < z2r.nodes.size(); ++j) {
      const double arg = 0.5 * (1.0 - z1) * c + 0.5 * (1.0 + z1) * z2r.nodes[j];
      inner += z2r.weights[j] * g(p.t, UPoint(ss * arg, q.t));
    }
    acc += z1r.weights[i] * inner;
  }
  return acc;
}

double kernel_P_v0(int n, const WeightV0& w, const SurfacePoint& p, const SurfacePoint& q) {
  const WeightU wu = w.u_weight();
  const USlice slice = [&](double t, const UPoint& z) { return kernel_P_boundary(n, wu, t, z); };
  return transfer_T(slice, w, p, q, n);
}

double kernel_P_v0_direct(int n, const WeightV0& w, const SurfacePoint& p, const SurfacePoint& q) {
  std::vector<double> bp, bq;
  basis_Q_eval_all(n, w, p, bp);
  basis_Q_eval_all(n, w, q, bq);
  double acc = 0.0;
  for (int m = 0; m <= n; ++m) {
    const double h = basis_Q_norm(n, m, w);
    for (int ell = 1; ell <= dim_harmonics(w.d, m); ++ell) {
      const size_t idx = v0_coeff_index(w.d, n, m, ell);
      acc += bp[idx] * bq[idx] / h;
    }
  }
  return acc;
}

double kernel_K_boundary(int n, const WeightV0& w, std::span<const double> xi,
                         const SurfacePoint& q) {
  if (w.beta != -0.5)
    throw std::invalid_argument("kernel_K_boundary: closed form stated for beta = -1/2");
  const WeightU wu = w.u_weight();
  const double c = dot(xi, q.xi);
  return kernel_K_at_one(n, wu, UPoint(std::sqrt(q.t) * c, q.t));
}

double cesaro_kernel_v0_boundary(const CesaroSpec& spec, const WeightV0& w,
                                 std::span<const double> xi, const SurfacePoint& q) {
  const WeightU wu = w.u_weight();
  const SurfacePoint p(std::vector<double>(xi.begin(), xi.end()), 1.0);
  const USlice slice = [&](double, const UPoint& z) { return cesaro_kernel_at_one(spec, wu, z); };
  return transfer_T(slice, w, p, q, spec.n);
}

double ode_residual(int n, int m, const WeightV0& w, double t) {
  if (w.beta != -0.5)
    throw std::invalid_argument("ode_residual: the paper's operator requires beta = -1/2");
  if (!(t > 0.0) || !(t < 1.0))
    throw std::invalid_argument("ode_residual: t must lie in (0,1)");
  const double alpha = 0.5 * (w.d - 2);
  const double gamma = w.gamma;
  const JacobiParams pm(alpha + m, gamma);
  const double s = 1.0 - 2.0 * t;
  const double J = jacobi_eval(n - m, pm, s);
  const double Jp = -2.0 * jacobi_deriv(n - m, pm, s);
  const double Jpp = 4.0 * jacobi_deriv2(n - m, pm, s);
  const double hm = 0.5 * m;
  const double T = std::pow(t, hm);
  const double Tp = (m == 0) ? 0.0 : hm * std::pow(t, hm - 1.0);
  const double Tpp = (m == 0) ? 0.0 : hm * (hm - 1.0) * std::pow(t, hm - 2.0);
  const double f = J * T;
  const double fp = Jp * T + J * Tp;
  const double fpp = Jpp * T + 2.0 * Jp * Tp + J * Tpp;
  const double eig = n * (n + alpha + gamma + 1.0) - 0.5 * m * (2.0 * n + 2.0 * alpha + gamma);
  return t * (1.0 - t) * fpp + (1.0 + alpha - (2.0 + alpha + gamma) * t) * fp -
         m * (m + 2.0 * alpha) * (1.0 - t) / (4.0 * t) * f + eig * f;
}

double V0Expansion::proj_eval(int m, const SurfacePoint& p) const {
  double acc = 0.0;
  for (int mm = 0; mm <= m; ++mm)
    for (int ell = 1; ell <= dim_harmonics(weight.d, mm); ++ell)
      acc += at(m, mm, ell) * basis_Q_eval(m, mm, ell, weight, p);
  return acc;
}

double V0Expansion::partial_sum(int n, const SurfacePoint& p) const {
  std::vector<double> bp;
  basis_Q_eval_all(n, weight, p, bp);
  double acc = 0.0;
  const size_t cnt = v0_coeff_count(weight.d, n);
  for (size_t j = 0; j < cnt; ++j) acc += coeff[j] * bp[j];
  return acc;
}

double V0Expansion::cesaro_mean(const CesaroSpec& spec, const SurfacePoint& p) const {
  const std::vector<double> cw = cesaro_weights_proj(spec);
  std::vector<double> bp;
  basis_Q_eval_all(spec.n, weight, p, bp);
  double acc = 0.0;
  size_t j = 0;
  for (int n = 0; n <= spec.n; ++n) {
    double proj = 0.0;
    for (int m = 0; m <= n; ++m)
      for (int ell = 1; ell <= dim_harmonics(weight.d, m); ++ell, ++j)
        proj += coeff[j] * bp[j];
    acc += cw[n] * proj;
  }
  return acc;
}

V0Expansion expand_v0(const std::function<double(const SurfacePoint&)>& f, int N,
                      const WeightV0& w, const ProductRule& rule) {
  if (rule.domain != DomainTag::V0)
    throw std::invalid_argument("expand_v0: rule must live on the surface");
  V0Expansion e{w, N, std::vector<double>(v0_coeff_count(w.d, N), 0.0)};
  std::vector<double> bp;
  for (size_t i = 0; i < rule.size(); ++i) {
    const SurfacePoint p = rule.surface_point(i);
    const double fw = rule.weights[i] * f(p);
    basis_Q_eval_all(N, w, p, bp);
    for (size_t j = 0; j < e.coeff.size(); ++j) e.coeff[j] += fw * bp[j];
  }
  size_t j = 0;
  for (int n = 0; n <= N; ++n)
    for (int m = 0; m <= n; ++m) {
      const double h = basis_Q_norm(n, m, w);
      for (int ell = 1; ell <= dim_harmonics(w.d, m); ++ell, ++j) e.coeff[j] /= h;
    }
  return e;
}

double cesaro_mean_v0_kernel(const CesaroSpec& spec, const WeightV0& w,
                             const std::function<double(const SurfacePoint&)>& f,
                             std::span<const double> xi, const ProductRule& rule) {
  double acc = 0.0;
  for (size_t i = 0; i < rule.size(); ++i) {
    const SurfacePoint q = rule.surface_point(i);
    acc += rule.weights[i] * f(q) * cesaro_kernel_v0_boundary(spec, w, xi, q);
  }
  return acc;
}

}  // namespace parab
