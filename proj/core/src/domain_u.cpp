#include "parab/domain_u.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

#include "parab/sphere.hpp"

namespace parab {

WeightU::WeightU(double a_, double b_) : a(a_), b(b_) {
  if (!(a > -1.0) || !(b > -0.5))
    throw std::invalid_argument("WeightU: require a > -1 and b > -1/2");
  d_ab = beta_const_shifted(b - 0.5, b - 0.5) * beta_const(b, a);
}

double WeightU::density(const UPoint& x) const {
  return std::pow(1.0 - x.x2, a) * std::pow(x.x2 - x.x1 * x.x1, b - 0.5);
}

double basis_eval(int k, int n, const WeightU& w, const UPoint& x) {
  if (k < 0 || k > n) throw std::invalid_argument("basis_eval: need 0 <= k <= n");
  return jacobi_eval(n - k, JacobiParams(w.b + k, w.a), 1.0 - 2.0 * x.x2) *
         jacobi_sym_homog(k, w.b - 0.5, x.x1, x.x2);
}

void basis_eval_all(int N, const WeightU& w, const UPoint& x, std::vector<double>& out) {
  out.assign(static_cast<size_t>(N + 1) * (N + 2) / 2, 0.0);
  std::vector<double> jac;
  const double s = 1.0 - 2.0 * x.x2;
  for (int k = 0; k <= N; ++k) {
    const double hk = jacobi_sym_homog(k, w.b - 0.5, x.x1, x.x2);
    jacobi_eval_all(N - k, JacobiParams(w.b + k, w.a), s, jac);
    for (int n = k; n <= N; ++n)
      out[static_cast<size_t>(n) * (n + 1) / 2 + k] = jac[n - k] * hk;
  }
}

double basis_norm(int k, int n, const WeightU& w) {
  if (k < 0 || k > n) throw std::invalid_argument("basis_norm: need 0 <= k <= n");
  return beta_const(w.b, w.a) / beta_const(w.b + k, w.a) *
         jacobi_norm(n - k, JacobiParams(w.b + k, w.a)) *
         jacobi_norm(k, JacobiParams(w.b - 0.5, w.b - 0.5));
}

double kernel_P(int n, const WeightU& w, const UPoint& x, const UPoint& y) {
  double acc = 0.0;
  for (int k = 0; k <= n; ++k)
    acc += basis_eval(k, n, w, x) * basis_eval(k, n, w, y) / basis_norm(k, n, w);
  return acc;
}

double kernel_P_boundary(int n, const WeightU& w, double x2, const UPoint& y) {
  if (x2 < 0.0 || x2 > 1.0 + kDomainTol)
    throw std::invalid_argument("kernel_P_boundary: x2 outside [0,1]");
  const double cba = beta_const(w.b, w.a);
  const double s1 = 1.0 - 2.0 * x2;
  const double s2 = 1.0 - 2.0 * y.x2;
  double acc = 0.0;
  double x2_pow = 1.0;  // x2^{m/2} accumulated as sqrt(x2)^m
  const double sx2 = std::sqrt(x2);
  for (int m = 0; m <= n; ++m) {
    const JacobiParams pm(w.b + m, w.a);
    const double jp = jacobi_eval(n - m, pm, s1) * jacobi_eval(n - m, pm, s2);
    acc += beta_const(w.b + m, w.a) / cba * jp / jacobi_norm(n - m, pm) * x2_pow *
           zonal_homog(m, w.b, y.x1, y.x2);
    x2_pow *= sx2;
  }
  return acc;
}

double z_map(const UPoint& x, double t) {
  const double z = 1.0 - (1.0 - t * t) * (1.0 - x.x1) - 0.5 * (1.0 - t) * (1.0 - t) * (1.0 - x.x2);
  assert(std::abs(z) <= 1.0 + 1e-12);
  return std::clamp(z, -1.0, 1.0);
}

double kernel_K_at_one(int n, const WeightU& w, const UPoint& x) {
  const JacobiParams p(w.a + w.b + 1.0, w.b);
  const Rule1D t_rule = gauss_jacobi_prob(points_for_degree(3 * n) + 2, p.alpha, p.beta);
  double integral = 0.0;
  for (size_t i = 0; i < t_rule.nodes.size(); ++i)
    integral += t_rule.weights[i] * jacobi_eval(n, p, z_map(x, t_rule.nodes[i]));
  const double pn1 = pochhammer(p.alpha + 1.0, n) / pochhammer(1.0, n);
  return pn1 / jacobi_norm(n, p) * integral;
}

double cesaro_kernel(const CesaroSpec& spec, const WeightU& w, const UPoint& x, const UPoint& y) {
  const std::vector<double> cw = cesaro_weights(spec);
  std::vector<double> bx, by;
  basis_eval_all(spec.n, w, x, bx);
  basis_eval_all(spec.n, w, y, by);
  double acc = 0.0, partial = 0.0;
  for (int m = 0; m <= spec.n; ++m) {
    double proj = 0.0;
    for (int k = 0; k <= m; ++k) {
      const size_t idx = static_cast<size_t>(m) * (m + 1) / 2 + k;
      proj += bx[idx] * by[idx] / basis_norm(k, m, w);
    }
    partial += proj;            // K_m = sum_{j<=m} P_j
    acc += cw[m] * partial;
  }
  return acc;
}

double cesaro_kernel_at_one(const CesaroSpec& spec, const WeightU& w, const UPoint& x) {
  const JacobiParams p(w.a + w.b + 1.0, w.b);
  const std::vector<double> cw = cesaro_weights(spec);
  std::vector<double> pn1_over_h(static_cast<size_t>(spec.n) + 1);
  for (int m = 0; m <= spec.n; ++m)
    pn1_over_h[m] = pochhammer(p.alpha + 1.0, m) / pochhammer(1.0, m) / jacobi_norm(m, p);
  const Rule1D t_rule = gauss_jacobi_prob(points_for_degree(3 * spec.n) + 2, p.alpha, p.beta);
  std::vector<double> jac;
  double acc = 0.0;
  for (size_t i = 0; i < t_rule.nodes.size(); ++i) {
    jacobi_eval_all(spec.n, p, z_map(x, t_rule.nodes[i]), jac);
    double kernel_sum = 0.0, partial = 0.0;
    for (int m = 0; m <= spec.n; ++m) {
      partial += pn1_over_h[m] * jac[m];  // K_m(1, z) built from projection kernels
      kernel_sum += cw[m] * partial;
    }
    acc += t_rule.weights[i] * kernel_sum;
  }
  return acc;
}

double UExpansion::proj_eval(int m, const UPoint& x) const {
  double acc = 0.0;
  for (int k = 0; k <= m; ++k) acc += at(m, k) * basis_eval(k, m, weight, x);
  return acc;
}

double UExpansion::partial_sum(int n, const UPoint& x) const {
  std::vector<double> bx;
  basis_eval_all(n, weight, x, bx);
  double acc = 0.0;
  for (int m = 0; m <= n; ++m)
    for (int k = 0; k <= m; ++k)
      acc += at(m, k) * bx[static_cast<size_t>(m) * (m + 1) / 2 + k];
  return acc;
}

double UExpansion::cesaro_mean(const CesaroSpec& spec, const UPoint& x) const {
  const std::vector<double> cw = cesaro_weights_proj(spec);
  std::vector<double> bx;
  basis_eval_all(spec.n, weight, x, bx);
  double acc = 0.0;
  for (int m = 0; m <= spec.n; ++m) {
    double proj = 0.0;
    for (int k = 0; k <= m; ++k)
      proj += at(m, k) * bx[static_cast<size_t>(m) * (m + 1) / 2 + k];
    acc += cw[m] * proj;
  }
  return acc;
}

double UExpansion::cesaro_mean_from_partials(const CesaroSpec& spec, const UPoint& x) const {
  const std::vector<double> cw = cesaro_weights(spec);
  std::vector<double> bx;
  basis_eval_all(spec.n, weight, x, bx);
  double acc = 0.0, partial = 0.0;
  for (int m = 0; m <= spec.n; ++m) {
    double proj = 0.0;
    for (int k = 0; k <= m; ++k)
      proj += at(m, k) * bx[static_cast<size_t>(m) * (m + 1) / 2 + k];
    partial += proj;
    acc += cw[m] * partial;
  }
  return acc;
}

UExpansion expand(const std::function<double(const UPoint&)>& f, int N, const WeightU& w,
                  const ProductRule& rule) {
  if (rule.domain != DomainTag::U) throw std::invalid_argument("expand: rule must live on U");
  UExpansion e{w, N, std::vector<double>(static_cast<size_t>(N + 1) * (N + 2) / 2, 0.0)};
  std::vector<double> bx;
  for (size_t i = 0; i < rule.size(); ++i) {
    const UPoint p = rule.upoint(i);
    const double fw = rule.weights[i] * f(p);
    basis_eval_all(N, w, p, bx);
    for (size_t j = 0; j < e.coeff.size(); ++j) e.coeff[j] += fw * bx[j];
  }
  for (int n = 0; n <= N; ++n)
    for (int k = 0; k <= n; ++k) e.at(n, k) /= basis_norm(k, n, w);
  return e;
}

}  // namespace parab
