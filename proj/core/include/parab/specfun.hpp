#pragma once

#include <stdexcept>
#include <vector>

namespace parab {

// Parameters (alpha, beta) of a Jacobi weight (1-t)^alpha (1+t)^beta on [-1,1].
struct JacobiParams {
  double alpha;
  double beta;
  JacobiParams(double a, double b) : alpha(a), beta(b) {
    if (!(a > -1.0) || !(b > -1.0))
      throw std::invalid_argument("JacobiParams: require alpha > -1 and beta > -1");
  }
};

double pochhammer(double x, int n);

// P_n^{(alpha,beta)}(t) by three-term recurrence; valid for any real t.
double jacobi_eval(int n, const JacobiParams& p, double t);
// P_0 .. P_nmax at one point, sharing the recurrence.
void jacobi_eval_all(int nmax, const JacobiParams& p, double t, std::vector<double>& out);
double jacobi_deriv(int n, const JacobiParams& p, double t);
double jacobi_deriv2(int n, const JacobiParams& p, double t);

// h_n^{(alpha,beta)}: squared norm of P_n against the normalized weight on [-1,1].
double jacobi_norm(int n, const JacobiParams& p);

// c_{a,b} = Gamma(a+b+2) / (Gamma(a+1) Gamma(b+1)): normalizes t^a (1-t)^b on [0,1].
double beta_const(double a, double b);
// c'_{a,b} = 2^{-a-b-1} c_{a,b}: normalizes (1-t)^a (1+t)^b on [-1,1].
double beta_const_shifted(double a, double b);
// c_lambda = 1 / int_{-1}^{1} (1-t^2)^{lambda-1/2} dt.
double c_lambda(double lambda);

// Z_n^lambda(t) = ((n+lambda)/lambda) C_n^lambda(t); lambda = 0 taken in the
// Chebyshev limit: Z_0^0 = 1, Z_n^0 = 2 T_n for n >= 1.
double gegenbauer_Z(int n, double lambda, double t);

// v^{k/2} P_k^{(lambda,lambda)}(u / sqrt(v)), expanded as a polynomial in (u, v).
// Regular at v = 0.
double jacobi_sym_homog(int k, double lambda, double u, double v);

// t^n P_n^{(alpha,beta)}((2v - t) / t), a polynomial in (v, t); regular at t = 0.
double jacobi_homog(int n, const JacobiParams& p, double v, double t);

// binom(x, k) for real x and integer k >= 0, via log-gamma with sign tracking.
double binom_real(double x, long k);

// Truncation order and summability index of a (C,delta) mean.
struct CesaroSpec {
  int n;
  double delta;
  CesaroSpec(int n_, double delta_) : n(n_), delta(delta_) {
    if (n < 0) throw std::invalid_argument("CesaroSpec: n must be >= 0");
    if (!(delta > -1.0)) throw std::invalid_argument("CesaroSpec: delta must be > -1");
  }
};

// Weights on the partial-sum kernels K_m: binom(n-m+delta-1, n-m) / binom(n+delta, n).
// delta = 0 collapses to the plain partial sum.
std::vector<double> cesaro_weights(const CesaroSpec& spec);
// Weights on the projections: binom(n-k+delta, n-k) / binom(n+delta, n).
std::vector<double> cesaro_weights_proj(const CesaroSpec& spec);

// h_0..h_nmax for one parameter pair, plus the interval normalizer.
struct NormTable {
  std::vector<double> h;
  double c_ab;
  NormTable(const JacobiParams& p, int nmax);
};

}  // namespace parab
