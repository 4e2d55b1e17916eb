#include "parab/sphere.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "parab/points.hpp"
#include "parab/quadrature.hpp"
#include "parab/specfun.hpp"

namespace parab {

namespace {

long long ibinom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long long v = 1;
  for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
  return v;
}

// r^{m-q} * P_m^q(z/r) / (1 - (z/r)^2)^{q/2}: polynomial in (z, r2 = r^2),
// positive convention (no Condon-Shortley phase).
double legendre_reduced_homog(int m, int q, double z, double r2) {
  double pqq = 1.0;
  for (int i = 1; i <= q; ++i) pqq *= 2.0 * i - 1.0;
  if (m == q) return pqq;
  double pk_1 = pqq;
  double pk = (2.0 * q + 1.0) * z * pqq;
  for (int k = q + 2; k <= m; ++k) {
    const double next = ((2.0 * k - 1.0) * z * pk - (k + q - 1.0) * r2 * pk_1) / (k - q);
    pk_1 = pk;
    pk = next;
  }
  return pk;
}

double d3_norm(int m, int q) {
  double ratio = 1.0;  // (m-q)! / (m+q)!
  for (int j = m - q + 1; j <= m + q; ++j) ratio /= j;
  const double n = std::sqrt((2.0 * m + 1.0) * ratio);
  return q > 0 ? std::sqrt(2.0) * n : n;
}

}  // namespace

int dim_harmonics(int d, int n) {
  if (d < 2 || n < 0) throw std::invalid_argument("dim_harmonics: need d >= 2 and n >= 0");
  const long long v = ibinom(n + d - 1, n) - (n >= 2 ? ibinom(n + d - 3, n - 2) : 0);
  return static_cast<int>(v);
}

HarmonicIndex::HarmonicIndex(int d_, int m_, int ell_) : d(d_), m(m_), ell(ell_) {
  if (ell < 1 || ell > dim_harmonics(d, m))
    throw std::invalid_argument("HarmonicIndex: ell outside the dimension bound");
}

double solid_harmonic(int d, int m, int ell, std::span<const double> x) {
  if (m == 0) return 1.0;
  if (d == 2) {
    std::complex<double> w(x[0], x[1]), pw(1.0, 0.0);
    for (int i = 0; i < m; ++i) pw *= w;
    const double v = (ell == 1) ? pw.real() : pw.imag();
    return std::sqrt(2.0) * v;
  }
  if (d == 3) {
    // ell = 1 -> order 0; ell = 2q -> cos branch; ell = 2q+1 -> sin branch
    const int q = ell / 2;
    const double r2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
    const double leg = legendre_reduced_homog(m, q, x[2], r2);
    if (q == 0) return d3_norm(m, 0) * leg;
    std::complex<double> w(x[0], x[1]), pw(1.0, 0.0);
    for (int i = 0; i < q; ++i) pw *= w;
    const double azim = (ell % 2 == 0) ? pw.real() : pw.imag();
    return d3_norm(m, q) * leg * azim;
  }
  throw std::invalid_argument("solid_harmonic: explicit bases only for d in {2,3}");
}

double sph_eval(const HarmonicIndex& idx, std::span<const double> xi) {
  if (idx.d != 2 && idx.d != 3)
    throw std::invalid_argument("sph_eval: explicit bases only for d in {2,3}");
  if (static_cast<int>(xi.size()) != idx.d)
    throw std::invalid_argument("sph_eval: point dimension mismatch");
  if (std::abs(std::sqrt(norm2(xi)) - 1.0) > kDomainTol)
    throw std::domain_error("sph_eval: xi is not a unit vector");
  return solid_harmonic(idx.d, idx.m, idx.ell, xi);
}

void sph_eval_all(int d, int mmax, std::span<const double> xi, std::vector<double>& out) {
  out.clear();
  if (d == 2) {
    // cos/sin recurrences in the polar angle
    const double c = xi[0], s = xi[1];
    out.push_back(1.0);
    double cm = 1.0, sm = 0.0;
    const double r = std::sqrt(2.0);
    for (int m = 1; m <= mmax; ++m) {
      const double cn = cm * c - sm * s;
      const double sn = sm * c + cm * s;
      cm = cn;
      sm = sn;
      out.push_back(r * cm);
      out.push_back(r * sm);
    }
    return;
  }
  if (d == 3) {
    for (int m = 0; m <= mmax; ++m)
      for (int ell = 1; ell <= 2 * m + 1; ++ell)
        out.push_back(solid_harmonic(3, m, ell, xi));
    return;
  }
  throw std::invalid_argument("sph_eval_all: explicit bases only for d in {2,3}");
}

double zonal_kernel(int d, int m, double c) {
  if (d < 2) throw std::invalid_argument("zonal_kernel: need d >= 2");
  return gegenbauer_Z(m, 0.5 * (d - 2), c);
}

double zonal_homog(int m, double lambda, double s1, double s2) {
  const double lam = lambda - 0.5;
  const double p1 = pochhammer(lam + 1.0, m) / pochhammer(1.0, m);  // P_m^{(lam,lam)}(1)
  return p1 * jacobi_sym_homog(m, lam, s1, s2) / jacobi_norm(m, JacobiParams(lam, lam));
}

double raise_index_Z(double lambda, double sigma, int m, double t) {
  if (lambda < 0.0) throw std::invalid_argument("raise_index_Z: require lambda >= 0");
  if (!(sigma > 0.0)) throw std::invalid_argument("raise_index_Z: require sigma > 0");
  const int npts = points_for_degree(m);
  const Rule1D z1r = gauss_jacobi_prob(npts, lambda, sigma - 1.0);
  const Rule1D z2r = gauss_jacobi_prob(npts, sigma - 0.5, sigma - 0.5);
  double acc = 0.0;
  for (size_t i = 0; i < z1r.nodes.size(); ++i) {
    const double z1 = z1r.nodes[i];
    double inner = 0.0;
    for (size_t j = 0; j < z2r.nodes.size(); ++j) {
      const double arg = 0.5 * (1.0 - z1) * t + 0.5 * (1.0 + z1) * z2r.nodes[j];
      inner += z2r.weights[j] * gegenbauer_Z(m, lambda + sigma, arg);
    }
    acc += z1r.weights[i] * inner;
  }
  return acc;
}

}  // namespace parab
