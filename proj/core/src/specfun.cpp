#include "parab/specfun.hpp"

#include <cmath>
#include <limits>

namespace parab {

double pochhammer(double x, int n) {
  double v = 1.0;
  for (int i = 0; i < n; ++i) v *= x + i;
  return v;
}

double jacobi_eval(int n, const JacobiParams& p, double t) {
  if (n < 0) throw std::invalid_argument("jacobi_eval: degree must be >= 0");
  const double a = p.alpha, b = p.beta;
  if (n == 0) return 1.0;
  double pm1 = 1.0;
  double pc = 0.5 * ((a + b + 2.0) * t + (a - b));
  for (int k = 2; k <= n; ++k) {
    const double s = 2.0 * k + a + b;
    const double c1 = 2.0 * k * (k + a + b) * (s - 2.0);
    const double c2 = (s - 1.0) * (a * a - b * b);
    const double c3 = (s - 1.0) * s * (s - 2.0);
    const double c4 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
    const double next = ((c2 + c3 * t) * pc - c4 * pm1) / c1;
    pm1 = pc;
    pc = next;
  }
  return pc;
}

void jacobi_eval_all(int nmax, const JacobiParams& p, double t, std::vector<double>& out) {
  out.resize(static_cast<size_t>(nmax) + 1);
  const double a = p.alpha, b = p.beta;
  out[0] = 1.0;
  if (nmax == 0) return;
  out[1] = 0.5 * ((a + b + 2.0) * t + (a - b));
  for (int k = 2; k <= nmax; ++k) {
    const double s = 2.0 * k + a + b;
    const double c1 = 2.0 * k * (k + a + b) * (s - 2.0);
    const double c2 = (s - 1.0) * (a * a - b * b);
    const double c3 = (s - 1.0) * s * (s - 2.0);
    const double c4 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
    out[k] = ((c2 + c3 * t) * out[k - 1] - c4 * out[k - 2]) / c1;
  }
}

double jacobi_deriv(int n, const JacobiParams& p, double t) {
  if (n <= 0) return 0.0;
  return 0.5 * (n + p.alpha + p.beta + 1.0) *
         jacobi_eval(n - 1, JacobiParams(p.alpha + 1.0, p.beta + 1.0), t);
}

double jacobi_deriv2(int n, const JacobiParams& p, double t) {
  if (n <= 1) return 0.0;
  return 0.25 * (n + p.alpha + p.beta + 1.0) * (n + p.alpha + p.beta + 2.0) *
         jacobi_eval(n - 2, JacobiParams(p.alpha + 2.0, p.beta + 2.0), t);
}

double jacobi_norm(int n, const JacobiParams& p) {
  if (n < 0) throw std::invalid_argument("jacobi_norm: degree must be >= 0");
  if (n == 0) return 1.0;
  const double a = p.alpha, b = p.beta;
  return pochhammer(a + 1.0, n) * pochhammer(b + 1.0, n) * (a + b + n + 1.0) /
         (pochhammer(1.0, n) * pochhammer(a + b + 2.0, n) * (a + b + 2.0 * n + 1.0));
}

double beta_const(double a, double b) {
  if (!(a > -1.0) || !(b > -1.0))
    throw std::invalid_argument("beta_const: require a > -1 and b > -1");
  return std::exp(std::lgamma(a + b + 2.0) - std::lgamma(a + 1.0) - std::lgamma(b + 1.0));
}

double beta_const_shifted(double a, double b) {
  return std::exp2(-(a + b + 1.0)) * beta_const(a, b);
}

double c_lambda(double lambda) {
  if (!(lambda > -0.5)) throw std::invalid_argument("c_lambda: require lambda > -1/2");
  return std::exp(std::lgamma(lambda + 1.0) - std::lgamma(0.5) - std::lgamma(lambda + 0.5));
}

double gegenbauer_Z(int n, double lambda, double t) {
  if (n < 0) throw std::invalid_argument("gegenbauer_Z: degree must be >= 0");
  if (lambda < 0.0) throw std::invalid_argument("gegenbauer_Z: require lambda >= 0");
  if (n == 0) return 1.0;
  if (lambda == 0.0) {
    double tm1 = 1.0, tc = t;
    for (int k = 2; k <= n; ++k) {
      const double next = 2.0 * t * tc - tm1;
      tm1 = tc;
      tc = next;
    }
    return 2.0 * tc;
  }
  double cm1 = 1.0, cc = 2.0 * lambda * t;
  for (int k = 2; k <= n; ++k) {
    const double next = (2.0 * (k + lambda - 1.0) * t * cc - (k + 2.0 * lambda - 2.0) * cm1) / k;
    cm1 = cc;
    cc = next;
  }
  return (n + lambda) / lambda * cc;
}

double jacobi_sym_homog(int k, double lambda, double u, double v) {
  if (k < 0) throw std::invalid_argument("jacobi_sym_homog: degree must be >= 0");
  if (k == 0) return 1.0;
  double hm1 = 1.0;
  double hc = (lambda + 1.0) * u;
  for (int j = 2; j <= k; ++j) {
    const double s = 2.0 * j + 2.0 * lambda;
    const double aj = (s - 1.0) * s / (2.0 * j * (j + 2.0 * lambda));
    const double cj = (j + lambda - 1.0) * (j + lambda - 1.0) * s /
                      (j * (j + 2.0 * lambda) * (s - 2.0));
    const double next = aj * u * hc - cj * v * hm1;
    hm1 = hc;
    hc = next;
  }
  return hc;
}

double jacobi_homog(int n, const JacobiParams& p, double v, double t) {
  if (n < 0) throw std::invalid_argument("jacobi_homog: degree must be >= 0");
  if (n == 0) return 1.0;
  const double a = p.alpha, b = p.beta;
  const double s1 = 2.0 * v - t;
  double gm1 = 1.0;
  double gc = 0.5 * ((a + b + 2.0) * s1 + (a - b) * t);
  for (int j = 2; j <= n; ++j) {
    const double s = 2.0 * j + a + b;
    const double c1 = 2.0 * j * (j + a + b);
    const double aj = (s - 1.0) * s / c1;
    const double bj = (s - 1.0) * (a * a - b * b) / (c1 * (s - 2.0));
    const double cj = (j + a - 1.0) * (j + b - 1.0) * s / (0.5 * c1 * (s - 2.0));
    const double next = (aj * s1 + bj * t) * gc - cj * t * t * gm1;
    gm1 = gc;
    gc = next;
  }
  return gc;
}

namespace {

struct LogGamma {
  double logabs;
  int sign;    // 0 marks a pole
};

LogGamma lgamma_signed(double x) {
  if (x > 0.0) return {std::lgamma(x), 1};
  if (x == std::floor(x)) return {std::numeric_limits<double>::infinity(), 0};
  const long long fl = static_cast<long long>(std::floor(x));
  return {std::lgamma(x), (fl % 2 == 0) ? 1 : -1};
}

}  // namespace

double binom_real(double x, long k) {
  if (k < 0) return 0.0;
  if (k == 0) return 1.0;
  const LogGamma num = lgamma_signed(x + 1.0);
  const LogGamma den = lgamma_signed(x - static_cast<double>(k) + 1.0);
  if (num.sign == 0) {
    // both Gamma factors sit on poles; the ratio is the finite falling factorial
    double v = 1.0;
    for (long j = 1; j <= k; ++j) v *= (x - static_cast<double>(k) + j) / j;
    return v;
  }
  if (den.sign == 0) return 0.0;
  const double logk = std::lgamma(static_cast<double>(k) + 1.0);
  return num.sign * den.sign * std::exp(num.logabs - logk - den.logabs);
}

std::vector<double> cesaro_weights(const CesaroSpec& spec) {
  std::vector<double> w(static_cast<size_t>(spec.n) + 1);
  const double denom = binom_real(spec.n + spec.delta, spec.n);
  for (int m = 0; m <= spec.n; ++m)
    w[m] = binom_real(spec.n - m + spec.delta - 1.0, spec.n - m) / denom;
  return w;
}

std::vector<double> cesaro_weights_proj(const CesaroSpec& spec) {
  std::vector<double> w(static_cast<size_t>(spec.n) + 1);
  const double denom = binom_real(spec.n + spec.delta, spec.n);
  for (int m = 0; m <= spec.n; ++m)
    w[m] = binom_real(spec.n - m + spec.delta, spec.n - m) / denom;
  return w;
}

NormTable::NormTable(const JacobiParams& p, int nmax) : c_ab(beta_const(p.alpha, p.beta)) {
  h.resize(static_cast<size_t>(nmax) + 1);
  for (int n = 0; n <= nmax; ++n) h[n] = jacobi_norm(n, p);
}

}  // namespace parab
