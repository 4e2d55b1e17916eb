#include "parab/solid_v.hpp"

#include <cmath>
#include <stdexcept>

#include "parab/sphere.hpp"

namespace parab {

WeightV::WeightV(int d_, double beta_, double gamma_, double mu_)
    : d(d_), beta(beta_), gamma(gamma_), mu(mu_) {
  if (d < 2) throw std::invalid_argument("WeightV: require d >= 2");
  if (!(beta > -0.5 * (d + 1)) || !(gamma > -1.0) || !(mu > -0.5))
    throw std::invalid_argument("WeightV: parameter out of range");
  if (!(alpha() > -1.0))
    throw std::invalid_argument("WeightV: beta + mu + (d-1)/2 must exceed -1");
  b_bgm = ball_norm_const(mu, d) * beta_const(alpha(), gamma);
}

int ball_basis_dim(int d, int m) {
  long long v = 1;
  for (int i = 1; i <= m; ++i) v = v * (d - 1 + i) / i;
  return static_cast<int>(v);
}

BallBasis::BallBasis(int d, double mu, int max_degree) : d_(d), mu_(mu), maxdeg_(max_degree) {
  if (d != 2 && d != 3) throw std::invalid_argument("BallBasis: d must be 2 or 3");
  if (!(mu > -0.5)) throw std::invalid_argument("BallBasis: require mu > -1/2");
  elems_.resize(static_cast<size_t>(maxdeg_) + 1);
  for (int m = 0; m <= maxdeg_; ++m) {
    for (int j = 0; 2 * j <= m; ++j) {
      const int k = m - 2 * j;
      for (int ell = 1; ell <= dim_harmonics(d_, k); ++ell)
        elems_[m].push_back({j, ell, 1.0});
    }
    if (static_cast<int>(elems_[m].size()) != ball_basis_dim(d_, m))
      throw std::logic_error("BallBasis: element count mismatch");
  }
  const ProductRule rule = rule_ball(d_, mu_, 2 * maxdeg_ + 2);
  for (int m = 0; m <= maxdeg_; ++m) {
    for (Element& el : elems_[m]) {
      double nrm2 = 0.0;
      for (size_t i = 0; i < rule.size(); ++i) {
        const double v = raw_homog(m, el, rule.point(i), 1.0);
        nrm2 += rule.weights[i] * v * v;
      }
      el.norm = 1.0 / std::sqrt(nrm2);
    }
  }
}

double BallBasis::raw_homog(int m, const Element& el, std::span<const double> x, double t) const {
  const int k = m - 2 * el.j;
  const double v = norm2(x);
  const double radial = jacobi_homog(el.j, JacobiParams(mu_ - 0.5, k + 0.5 * (d_ - 2)), v, t);
  return radial * solid_harmonic(d_, k, el.ell, x);
}

double BallBasis::eval(int m, int kappa, std::span<const double> x) const {
  const Element& el = elems_.at(m).at(kappa);
  return el.norm * raw_homog(m, el, x, 1.0);
}

double BallBasis::eval_homog(int m, int kappa, std::span<const double> x, double t) const {
  const Element& el = elems_.at(m).at(kappa);
  return el.norm * raw_homog(m, el, x, t);
}

void BallBasis::eval_homog_all(std::span<const double> x, double t, std::vector<double>& out) const {
  out.clear();
  for (int m = 0; m <= maxdeg_; ++m)
    for (const Element& el : elems_[m]) out.push_back(el.norm * raw_homog(m, el, x, t));
}

namespace {

// endpoint-average limit replacing c_{mu-1/2} int f (1-u^2)^{mu-1} du at mu = 0
template <class F>
double mu_average(double mu, int degree, F&& f) {
  if (mu == 0.0) return 0.5 * (f(1.0) + f(-1.0));
  const Rule1D ur = gauss_jacobi_prob(points_for_degree(degree) + 2, mu - 1.0, mu - 1.0);
  double acc = 0.0;
  for (size_t i = 0; i < ur.nodes.size(); ++i) acc += ur.weights[i] * f(ur.nodes[i]);
  return acc;
}

}  // namespace

double ball_kernel(int d, double mu, int n, std::span<const double> x, std::span<const double> y) {
  if (!(mu >= 0.0)) throw std::invalid_argument("ball_kernel: addition formula needs mu >= 0");
  const double lam = mu + 0.5 * (d - 1);
  const double rx = std::sqrt(std::max(0.0, 1.0 - norm2(x)));
  const double ry = std::sqrt(std::max(0.0, 1.0 - norm2(y)));
  const double xy = dot(x, y);
  return mu_average(mu, n, [&](double u) {
    const double arg = std::clamp(xy + u * rx * ry, -1.0, 1.0);
    return gegenbauer_Z(n, lam, arg);
  });
}

double ball_kernel_direct(const BallBasis& basis, int n, std::span<const double> x,
                          std::span<const double> y) {
  double acc = 0.0;
  for (int kappa = 0; kappa < basis.dim(n); ++kappa)
    acc += basis.eval(n, kappa, x) * basis.eval(n, kappa, y);
  return acc;
}

double xi0_map(std::span<const double> x, double t, std::span<const double> y, double s,
               double u) {
  const double nx = norm2(x), ny = norm2(y);
  const double inner = (t > 0.0 && s > 0.0) ? dot(x, y) / std::sqrt(s * t) : 0.0;
  const double rx = (t > 0.0) ? std::sqrt(std::max(0.0, 1.0 - nx / t)) : 1.0;
  const double ry = (s > 0.0) ? std::sqrt(std::max(0.0, 1.0 - ny / s)) : 1.0;
  return std::clamp(inner + u * rx * ry, -1.0, 1.0);
}

double xi_map(std::span<const double> x, double t, std::span<const double> y, double s, double z1,
              double z2, double u) {
  return 0.5 * (1.0 - z1) * xi0_map(x, t, y, s, u) + 0.5 * (1.0 + z1) * z2;
}

double basis_bQ_eval_raw(int n, int m, int kappa, const WeightV& w, const BallBasis& basis,
                         std::span<const double> x, double t) {
  if (m < 0 || m > n) throw std::invalid_argument("basis_bQ_eval: need 0 <= m <= n");
  return jacobi_eval(n - m, JacobiParams(w.alpha() + m, w.gamma), 1.0 - 2.0 * t) *
         basis.eval_homog(m, kappa, x, t);
}

double basis_bQ_eval(int n, int m, int kappa, const WeightV& w, const BallBasis& basis,
                     const SolidPoint& p) {
  return basis_bQ_eval_raw(n, m, kappa, w, basis, p.x, p.t);
}

double basis_bQ_norm(int n, int m, const WeightV& w) {
  if (m < 0 || m > n) throw std::invalid_argument("basis_bQ_norm: need 0 <= m <= n");
  return beta_const(w.alpha(), w.gamma) / beta_const(w.alpha() + m, w.gamma) *
         jacobi_norm(n - m, JacobiParams(w.alpha() + m, w.gamma));
}

size_t v_coeff_count(int d, int N) {
  size_t c = 0;
  for (int n = 0; n <= N; ++n)
    for (int m = 0; m <= n; ++m) c += ball_basis_dim(d, m);
  return c;
}

size_t v_coeff_index(int d, int n, int m, int kappa) {
  size_t off = 0;
  for (int nn = 0; nn < n; ++nn)
    for (int mm = 0; mm <= nn; ++mm) off += ball_basis_dim(d, mm);
  for (int mm = 0; mm < m; ++mm) off += ball_basis_dim(d, mm);
  return off + kappa;
}

void basis_bQ_eval_all(int N, const WeightV& w, const BallBasis& basis, const SolidPoint& p,
                       std::vector<double>& out) {
  out.clear();
  out.reserve(v_coeff_count(w.d, N));
  std::vector<double> ball;
  basis.eval_homog_all(p.x, p.t, ball);
  std::vector<size_t> boff(static_cast<size_t>(N) + 2, 0);
  for (int m = 0; m <= N; ++m) boff[m + 1] = boff[m] + basis.dim(m);

  const double s = 1.0 - 2.0 * p.t;
  std::vector<std::vector<double>> jac(static_cast<size_t>(N) + 1);
  for (int m = 0; m <= N; ++m)
    jacobi_eval_all(N - m, JacobiParams(w.alpha() + m, w.gamma), s, jac[m]);
  for (int n = 0; n <= N; ++n)
    for (int m = 0; m <= n; ++m) {
      const double radial = jac[m][n - m];
      for (size_t j = boff[m]; j < boff[m + 1]; ++j) out.push_back(radial * ball[j]);
    }
}

double transfer_T_solid(const USlice& g, const WeightV& w, const SolidPoint& p,
                        const SolidPoint& q, int quad_degree) {
  if (w.beta < 0.0 || w.mu < 0.0)
    throw std::invalid_argument("transfer_T_solid: defined for beta >= 0 and mu >= 0");
  const double ss = std::sqrt(q.t);
  if (w.beta == 0.0) {
    return mu_average(w.mu, quad_degree, [&](double u) {
      return g(p.t, UPoint(ss * xi0_map(p.x, p.t, q.x, q.t, u), q.t));
    });
  }
  const int npts = points_for_degree(quad_degree) + 2;
  const Rule1D z1r = gauss_jacobi_prob(npts, w.mu + 0.5 * (w.d - 1), w.beta - 1.0);
  const Rule1D z2r = gauss_jacobi_prob(npts, w.beta - 0.5, w.beta - 0.5);
  return mu_average(w.mu, quad_degree, [&](double u) {
    const double xi0 = xi0_map(p.x, p.t, q.x, q.t, u);
    double acc = 0.0;
    for (size_t i = 0; i < z1r.nodes.size(); ++i) {
      const double z1 = z1r.nodes[i];
      double inner = 0.0;
      for (size_t j = 0; j < z2r.nodes.size(); ++j) {
        const double arg = 0.5 * (1.0 - z1) * xi0 + 0.5 * (1.0 + z1) * z2r.nodes[j];
        inner += z2r.weights[j] * g(p.t, UPoint(ss * arg, q.t));
      }
      acc += z1r.weights[i] * inner;
    }
    return acc;
  });
}

double kernel_P_v(int n, const WeightV& w, const SolidPoint& p, const SolidPoint& q) {
  const WeightU wu = w.u_weight();
  const USlice slice = [&](double t, const UPoint& z) { return kernel_P_boundary(n, wu, t, z); };
  return transfer_T_solid(slice, w, p, q, n);
}

double kernel_P_v_direct(int n, const WeightV& w, const BallBasis& basis, const SolidPoint& p,
                         const SolidPoint& q) {
  std::vector<double> bp, bq;
  basis_bQ_eval_all(n, w, basis, p, bp);
  basis_bQ_eval_all(n, w, basis, q, bq);
  double acc = 0.0;
  for (int m = 0; m <= n; ++m) {
    const double h = basis_bQ_norm(n, m, w);
    for (int kappa = 0; kappa < basis.dim(m); ++kappa) {
      const size_t idx = v_coeff_index(w.d, n, m, kappa);
      acc += bp[idx] * bq[idx] / h;
    }
  }
  return acc;
}

double kernel_K_top(int n, const WeightV& w, std::span<const double> x, const SolidPoint& q) {
  if (w.beta != 0.0)
    throw std::invalid_argument("kernel_K_top: closed form stated for beta = 0");
  const double tau = w.mu + 0.5 * (w.d - 1);
  const JacobiParams pv(w.gamma + tau + 1.0, tau);
  const Rule1D v_rule = gauss_jacobi_prob(points_for_degree(3 * n) + 2, pv.alpha, pv.beta);
  const double pn1 = pochhammer(pv.alpha + 1.0, n) / pochhammer(1.0, n);
  const double ss = std::sqrt(q.t);
  const double integral = mu_average(w.mu, n, [&](double u) {
    const double y1 = ss * xi0_map(x, 1.0, q.x, q.t, u);
    const UPoint z(y1, q.t);
    double inner = 0.0;
    for (size_t i = 0; i < v_rule.nodes.size(); ++i)
      inner += v_rule.weights[i] * jacobi_eval(n, pv, z_map(z, v_rule.nodes[i]));
    return inner;
  });
  return pn1 / jacobi_norm(n, pv) * integral;
}

double cesaro_kernel_v_top(const CesaroSpec& spec, const WeightV& w, std::span<const double> x,
                           const SolidPoint& q) {
  const WeightU wu = w.u_weight();
  const SolidPoint p(std::vector<double>(x.begin(), x.end()), 1.0);
  const USlice slice = [&](double, const UPoint& z) { return cesaro_kernel_at_one(spec, wu, z); };
  return transfer_T_solid(slice, w, p, q, spec.n);
}

double ode_eigenvalue_solid(int n, int m, const WeightV& w) {
  return -(n * (n + w.mu + w.gamma + 0.5 * (w.d + 1)) - m * (n + w.mu + 0.5 * (w.gamma + w.d)));
}

double ode_residual_solid(int n, int m, int kappa, const WeightV& w, const BallBasis& basis,
                          std::span<const double> x, double t, double h) {
  if (w.beta != 0.0)
    throw std::invalid_argument("ode_residual_solid: the paper's operator requires beta = 0");
  const int d = w.d;
  std::vector<double> xp(x.begin(), x.end());
  const auto u = [&](const std::vector<double>& xx, double tt) {
    return basis_bQ_eval_raw(n, m, kappa, w, basis, xx, tt);
  };
  const double u0 = u(xp, t);
  const double utp = u(xp, t + h), utm = u(xp, t - h);
  const double ut = (utp - utm) / (2.0 * h);
  const double utt = (utp - 2.0 * u0 + utm) / (h * h);

  double lap = 0.0, xgrad = 0.0, xgradt = 0.0;
  for (int i = 0; i < d; ++i) {
    xp[i] = x[i] + h;
    const double up = u(xp, t);
    const double up_tp = u(xp, t + h), up_tm = u(xp, t - h);
    xp[i] = x[i] - h;
    const double um = u(xp, t);
    const double um_tp = u(xp, t + h), um_tm = u(xp, t - h);
    xp[i] = x[i];
    lap += (up - 2.0 * u0 + um) / (h * h);
    xgrad += x[i] * (up - um) / (2.0 * h);
    xgradt += x[i] * (up_tp - up_tm - um_tp + um_tm) / (4.0 * h * h);
  }

  const double L = t * (1.0 - t) * utt + (1.0 - t) * xgradt + 0.25 * (1.0 - t) * lap +
                   (w.mu + 0.5 * (d + 1)) * (1.0 - t) * ut -
                   0.5 * (w.gamma + 1.0) * (2.0 * t * ut + xgrad);
  return L - ode_eigenvalue_solid(n, m, w) * u0;
}

std::pair<double, double> euler_identities_check(int m, int kappa, const BallBasis& basis,
                                                 std::span<const double> x, double t, double h) {
  const int d = basis.d();
  std::vector<double> xp(x.begin(), x.end());
  const auto H = [&](const std::vector<double>& xx, double tt) {
    return basis.eval_homog(m, kappa, xx, tt);
  };
  const double h0 = H(xp, t);
  const double htp = H(xp, t + h), htm = H(xp, t - h);
  const double ht = (htp - htm) / (2.0 * h);
  const double htt = (htp - 2.0 * h0 + htm) / (h * h);
  double xgrad = 0.0, xgradt = 0.0;
  for (int i = 0; i < d; ++i) {
    xp[i] = x[i] + h;
    const double hp = H(xp, t), hp_tp = H(xp, t + h), hp_tm = H(xp, t - h);
    xp[i] = x[i] - h;
    const double hm = H(xp, t), hm_tp = H(xp, t + h), hm_tm = H(xp, t - h);
    xp[i] = x[i];
    xgrad += x[i] * (hp - hm) / (2.0 * h);
    xgradt += x[i] * (hp_tp - hp_tm - hm_tp + hm_tm) / (4.0 * h * h);
  }
  const double r1 = 2.0 * t * ht + xgrad - m * h0;
  const double r2 = 2.0 * t * htt + xgradt - (m - 2.0) * ht;
  return {r1, r2};
}

double VExpansion::partial_sum(int n, const SolidPoint& p) const {
  std::vector<double> bp;
  basis_bQ_eval_all(n, weight, *basis, p, bp);
  double acc = 0.0;
  const size_t cnt = v_coeff_count(weight.d, n);
  for (size_t j = 0; j < cnt; ++j) acc += coeff[j] * bp[j];
  return acc;
}

double VExpansion::cesaro_mean(const CesaroSpec& spec, const SolidPoint& p) const {
  const std::vector<double> cw = cesaro_weights_proj(spec);
  std::vector<double> bp;
  basis_bQ_eval_all(spec.n, weight, *basis, p, bp);
  double acc = 0.0;
  size_t j = 0;
  for (int n = 0; n <= spec.n; ++n) {
    double proj = 0.0;
    for (int m = 0; m <= n; ++m)
      for (int kappa = 0; kappa < basis->dim(m); ++kappa, ++j) proj += coeff[j] * bp[j];
    acc += cw[n] * proj;
  }
  return acc;
}

VExpansion expand_v(const std::function<double(const SolidPoint&)>& f, int N, const WeightV& w,
                    std::shared_ptr<const BallBasis> basis, const ProductRule& rule) {
  if (rule.domain != DomainTag::V)
    throw std::invalid_argument("expand_v: rule must live on the solid paraboloid");
  if (!basis || basis->max_degree() < N || basis->d() != w.d)
    throw std::invalid_argument("expand_v: ball basis does not cover the expansion");
  VExpansion e{w, N, std::move(basis), std::vector<double>(v_coeff_count(w.d, N), 0.0)};
  std::vector<double> bp;
  for (size_t i = 0; i < rule.size(); ++i) {
    const SolidPoint p = rule.solid_point(i);
    const double fw = rule.weights[i] * f(p);
    basis_bQ_eval_all(N, w, *e.basis, p, bp);
    for (size_t j = 0; j < e.coeff.size(); ++j) e.coeff[j] += fw * bp[j];
  }
  size_t j = 0;
  for (int n = 0; n <= N; ++n)
    for (int m = 0; m <= n; ++m) {
      const double h = basis_bQ_norm(n, m, w);
      for (int kappa = 0; kappa < e.basis->dim(m); ++kappa, ++j) e.coeff[j] /= h;
    }
  return e;
}

double cesaro_mean_v_kernel(const CesaroSpec& spec, const WeightV& w,
                            const std::function<double(const SolidPoint&)>& f,
                            std::span<const double> x, const ProductRule& rule) {
  double acc = 0.0;
  for (size_t i = 0; i < rule.size(); ++i) {
    const SolidPoint q = rule.solid_point(i);
    acc += rule.weights[i] * f(q) * cesaro_kernel_v_top(spec, w, x, q);
  }
  return acc;
}

}  // namespace parab
