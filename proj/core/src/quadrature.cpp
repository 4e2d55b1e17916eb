#include "parab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "parab/specfun.hpp"

namespace parab {

namespace {

// Eigenvalues of a symmetric tridiagonal matrix together with the first
// component of each normalized eigenvector (QL with implicit shifts; the
// rotation sequence is applied to a single accumulated row).
void tridiag_eig_first(std::vector<double>& d, std::vector<double>& e, std::vector<double>& z) {
  const int n = static_cast<int>(d.size());
  if (n == 1) return;
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m = 0;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
      }
      if (m != l) {
        if (iter++ == 64)
          throw std::runtime_error("gauss_jacobi: tridiagonal QL failed to converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i = m - 1;
        for (; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          f = z[i + 1];
          z[i + 1] = s * z[i] + c * f;
          z[i] = c * z[i] - s * f;
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace

int points_for_degree(int degree) {
  if (degree < 0) degree = 0;
  return (degree + 2) / 2 + 2;
}

Rule1D gauss_jacobi(int n_points, double alpha, double beta) {
  if (n_points < 1) throw std::invalid_argument("gauss_jacobi: need n_points >= 1");
  if (!(alpha > -1.0) || !(beta > -1.0))
    throw std::invalid_argument("gauss_jacobi: require alpha > -1 and beta > -1");

  const int n = n_points;
  const double apb = alpha + beta;
  std::vector<double> diag(n), sub(n, 0.0), z(n, 0.0);
  diag[0] = (beta - alpha) / (apb + 2.0);
  for (int k = 1; k < n; ++k) {
    const double t = 2.0 * k + apb;
    diag[k] = (beta * beta - alpha * alpha) / (t * (t + 2.0));
  }
  for (int k = 1; k < n; ++k) {
    double b2;
    if (k == 1) {
      b2 = 4.0 * (alpha + 1.0) * (beta + 1.0) / ((apb + 2.0) * (apb + 2.0) * (apb + 3.0));
    } else {
      const double t = 2.0 * k + apb;
      b2 = 4.0 * k * (k + alpha) * (k + beta) * (k + apb) / (t * t * (t + 1.0) * (t - 1.0));
    }
    sub[k - 1] = std::sqrt(b2);
  }
  z[0] = 1.0;
  tridiag_eig_first(diag, sub, z);

  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int i, int j) { return diag[i] < diag[j]; });

  const double mu0 = 1.0 / beta_const_shifted(alpha, beta);
  Rule1D rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  rule.exactness = 2 * n - 1;
  rule.weight_desc = "jacobi(alpha=" + std::to_string(alpha) + ",beta=" + std::to_string(beta) + ")";
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = diag[order[i]];
    rule.weights[i] = mu0 * z[order[i]] * z[order[i]];
  }
  if (alpha == beta) {
    // exact symmetry for symmetric weights
    for (int i = 0, j = n - 1; i < j; ++i, --j) {
      const double x = 0.5 * (rule.nodes[j] - rule.nodes[i]);
      rule.nodes[i] = -x;
      rule.nodes[j] = x;
      const double w = 0.5 * (rule.weights[i] + rule.weights[j]);
      rule.weights[i] = w;
      rule.weights[j] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  }
  return rule;
}

Rule1D gauss_jacobi_prob(int n_points, double alpha, double beta) {
  Rule1D rule = gauss_jacobi(n_points, alpha, beta);
  const double c = beta_const_shifted(alpha, beta);
  for (double& w : rule.weights) w *= c;
  return rule;
}

Rule1D gauss_jacobi01(int n_points, double p, double q) {
  Rule1D base = gauss_jacobi(n_points, q, p);
  Rule1D rule;
  rule.exactness = base.exactness;
  rule.weight_desc = "jacobi01(p=" + std::to_string(p) + ",q=" + std::to_string(q) + ")";
  rule.nodes.resize(base.nodes.size());
  rule.weights.resize(base.weights.size());
  const double scale = std::exp2(-(p + q + 1.0));
  for (size_t i = 0; i < base.nodes.size(); ++i) {
    rule.nodes[i] = 0.5 * (1.0 + base.nodes[i]);
    rule.weights[i] = scale * base.weights[i];
  }
  return rule;
}

Rule1D gauss_jacobi01_prob(int n_points, double p, double q) {
  Rule1D rule = gauss_jacobi01(n_points, p, q);
  const double c = beta_const(p, q);
  for (double& w : rule.weights) w *= c;
  return rule;
}

Rule1D gauss_legendre(int n_points) { return gauss_jacobi(n_points, 0.0, 0.0); }

double omega_d(int d) {
  return 2.0 * std::pow(std::numbers::pi, 0.5 * d) / std::tgamma(0.5 * d);
}

double ball_norm_const(double mu, int d) {
  return std::exp(std::lgamma(mu + 0.5 * (d + 1)) - 0.5 * d * std::log(std::numbers::pi) -
                  std::lgamma(mu + 0.5));
}

UPoint ProductRule::upoint(size_t i) const {
  auto p = point(i);
  return UPoint(p[0], p[1]);
}

SurfacePoint ProductRule::surface_point(size_t i) const {
  auto p = point(i);
  return SurfacePoint(std::vector<double>(p.begin(), p.end() - 1), p.back());
}

SolidPoint ProductRule::solid_point(size_t i) const {
  auto p = point(i);
  return SolidPoint(std::vector<double>(p.begin(), p.end() - 1), p.back());
}

ProductRule rule_u(double a, double b, int level) {
  if (!(a > -1.0) || !(b > -0.5))
    throw std::invalid_argument("rule_u: require a > -1 and b > -1/2");
  if (level < 1) throw std::invalid_argument("rule_u: need level >= 1");

  const Rule1D u_rule = gauss_jacobi(level, b - 0.5, b - 0.5);
  const Rule1D x2_rule = gauss_jacobi01(level, b, a);
  const double d_ab = beta_const_shifted(b - 0.5, b - 0.5) * beta_const(b, a);

  ProductRule rule;
  rule.domain = DomainTag::U;
  rule.d = 2;
  rule.point_dim = 2;
  rule.exactness = 2 * level - 1;
  rule.coords.reserve(2 * u_rule.nodes.size() * x2_rule.nodes.size());
  rule.weights.reserve(u_rule.nodes.size() * x2_rule.nodes.size());
  for (size_t i = 0; i < x2_rule.nodes.size(); ++i) {
    const double x2 = x2_rule.nodes[i];
    const double sx2 = std::sqrt(x2);
    for (size_t j = 0; j < u_rule.nodes.size(); ++j) {
      rule.coords.push_back(u_rule.nodes[j] * sx2);
      rule.coords.push_back(x2);
      rule.weights.push_back(d_ab * x2_rule.weights[i] * u_rule.weights[j]);
    }
  }
  return rule;
}

ProductRule rule_sphere(int d, int degree) {
  if (d != 2 && d != 3) throw std::invalid_argument("rule_sphere: d must be 2 or 3");
  if (degree < 0) degree = 0;
  const int m_azim = 2 * (degree / 2) + 4;  // even, > degree

  ProductRule rule;
  rule.domain = DomainTag::Sphere;
  rule.d = d;
  rule.point_dim = d;
  rule.exactness = degree;
  if (d == 2) {
    rule.coords.reserve(2 * m_azim);
    rule.weights.assign(m_azim, 1.0 / m_azim);
    for (int j = 0; j < m_azim; ++j) {
      const double th = 2.0 * std::numbers::pi * j / m_azim;
      rule.coords.push_back(std::cos(th));
      rule.coords.push_back(std::sin(th));
    }
  } else {
    const Rule1D gl = gauss_legendre(points_for_degree(degree));
    rule.coords.reserve(3 * gl.nodes.size() * m_azim);
    rule.weights.reserve(gl.nodes.size() * m_azim);
    for (size_t i = 0; i < gl.nodes.size(); ++i) {
      const double u = gl.nodes[i];
      const double su = std::sqrt(std::max(0.0, 1.0 - u * u));
      const double w = 0.5 * gl.weights[i] / m_azim;
      for (int j = 0; j < m_azim; ++j) {
        const double ph = 2.0 * std::numbers::pi * j / m_azim;
        rule.coords.push_back(su * std::cos(ph));
        rule.coords.push_back(su * std::sin(ph));
        rule.coords.push_back(u);
        rule.weights.push_back(w);
      }
    }
  }
  return rule;
}

ProductRule rule_v0(int d, double beta, double gamma, int degree) {
  if (!(beta > -0.5 * (d + 1)) || !(gamma > -1.0))
    throw std::invalid_argument("rule_v0: require beta > -(d+1)/2 and gamma > -1");
  const ProductRule sph = rule_sphere(d, degree);
  const Rule1D t_rule = gauss_jacobi01_prob(points_for_degree(degree), beta + 0.5 * (d - 1), gamma);

  ProductRule rule;
  rule.domain = DomainTag::V0;
  rule.d = d;
  rule.point_dim = d + 1;
  rule.exactness = degree;
  rule.coords.reserve((d + 1) * sph.size() * t_rule.nodes.size());
  rule.weights.reserve(sph.size() * t_rule.nodes.size());
  for (size_t i = 0; i < t_rule.nodes.size(); ++i) {
    for (size_t j = 0; j < sph.size(); ++j) {
      auto xi = sph.point(j);
      rule.coords.insert(rule.coords.end(), xi.begin(), xi.end());
      rule.coords.push_back(t_rule.nodes[i]);
      rule.weights.push_back(t_rule.weights[i] * sph.weights[j]);
    }
  }
  return rule;
}

ProductRule rule_ball(int d, double mu, int degree) {
  if (!(mu > -0.5)) throw std::invalid_argument("rule_ball: require mu > -1/2");
  const ProductRule sph = rule_sphere(d, degree);
  const Rule1D v_rule = gauss_jacobi01(points_for_degree(degree), 0.5 * d - 1.0, mu - 0.5);
  const double c = ball_norm_const(mu, d) * omega_d(d) * 0.5;

  ProductRule rule;
  rule.domain = DomainTag::Ball;
  rule.d = d;
  rule.point_dim = d;
  rule.exactness = degree;
  rule.coords.reserve(d * sph.size() * v_rule.nodes.size());
  rule.weights.reserve(sph.size() * v_rule.nodes.size());
  for (size_t i = 0; i < v_rule.nodes.size(); ++i) {
    const double r = std::sqrt(v_rule.nodes[i]);
    for (size_t j = 0; j < sph.size(); ++j) {
      auto xi = sph.point(j);
      for (double cthis : xi) rule.coords.push_back(r * cthis);
      rule.weights.push_back(c * v_rule.weights[i] * sph.weights[j]);
    }
  }
  return rule;
}

ProductRule rule_v(int d, double beta, double gamma, double mu, int degree) {
  const double p = beta + mu + 0.5 * (d - 1);
  if (!(p > -1.0) || !(gamma > -1.0) || !(mu > -0.5))
    throw std::invalid_argument("rule_v: invalid weight parameters");
  const ProductRule ball = rule_ball(d, mu, degree);
  const Rule1D t_rule = gauss_jacobi01_prob(points_for_degree(degree), p, gamma);

  ProductRule rule;
  rule.domain = DomainTag::V;
  rule.d = d;
  rule.point_dim = d + 1;
  rule.exactness = degree;
  rule.coords.reserve((d + 1) * ball.size() * t_rule.nodes.size());
  rule.weights.reserve(ball.size() * t_rule.nodes.size());
  for (size_t i = 0; i < t_rule.nodes.size(); ++i) {
    const double t = t_rule.nodes[i];
    const double st = std::sqrt(t);
    for (size_t j = 0; j < ball.size(); ++j) {
      auto y = ball.point(j);
      for (double c : y) rule.coords.push_back(st * c);
      rule.coords.push_back(t);
      rule.weights.push_back(t_rule.weights[i] * ball.weights[j]);
    }
  }
  return rule;
}

}  // namespace parab
