#pragma once

#include <functional>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "parab/domain_u.hpp"
#include "parab/points.hpp"
#include "parab/quadrature.hpp"
#include "parab/specfun.hpp"
#include "parab/surface_v0.hpp"

namespace parab {

// Weight W_{beta,gamma,mu}(x,t) = t^beta (1-t)^gamma (t-|x|^2)^{mu-1/2}.
struct WeightV {
  int d;
  double beta;
  double gamma;
  double mu;
  double b_bgm;
  WeightV(int d_, double beta_, double gamma_, double mu_);
  double alpha() const { return beta + mu + 0.5 * (d - 1); }
  WeightU u_weight() const { return WeightU(gamma, alpha()); }
};

int ball_basis_dim(int d, int m);  // binom(m+d-1, m)

// Orthonormal parity basis of V_m(B^d, varpi_mu), d in {2,3}: radial Jacobi
// factors times solid harmonics, normalized numerically against rule_ball.
class BallBasis {
 public:
  BallBasis(int d, double mu, int max_degree);

  int d() const { return d_; }
  double mu() const { return mu_; }
  int max_degree() const { return maxdeg_; }
  int dim(int m) const { return ball_basis_dim(d_, m); }

  double eval(int m, int kappa, std::span<const double> x) const;
  // t^{m/2} P_kappa^m(x / sqrt(t)) in polynomial form; regular at t = 0.
  double eval_homog(int m, int kappa, std::span<const double> x, double t) const;
  // all degrees m <= max_degree at once, packed degree by degree
  void eval_homog_all(std::span<const double> x, double t, std::vector<double>& out) const;

 private:
  struct Element {
    int j;        // radial Jacobi degree; harmonic degree is m - 2j
    int ell;      // solid harmonic index
    double norm;  // 1 / L2 norm under the normalized ball measure
  };
  double raw_homog(int m, const Element& el, std::span<const double> x, double t) const;

  int d_;
  double mu_;
  int maxdeg_;
  std::vector<std::vector<Element>> elems_;
};

// Addition formula: the degree-n reproducing kernel of V_n(B^d, varpi_mu) as a
// single integral of the zonal polynomial; mu = 0 via the endpoint average.
double ball_kernel(int d, double mu, int n, std::span<const double> x, std::span<const double> y);
double ball_kernel_direct(const BallBasis& basis, int n, std::span<const double> x,
                          std::span<const double> y);

// xi0 and xi maps of the solid kernel identities; both stay in [-1,1].
double xi0_map(std::span<const double> x, double t, std::span<const double> y, double s, double u);
double xi_map(std::span<const double> x, double t, std::span<const double> y, double s, double z1,
              double z2, double u);

// Basis bQ_{m,kappa}^n(x,t) = P_{n-m}^{(m+alpha,gamma)}(1-2t) t^{m/2} P_kappa^m(x/sqrt(t)).
double basis_bQ_eval(int n, int m, int kappa, const WeightV& w, const BallBasis& basis,
                     const SolidPoint& p);
// same polynomial without the domain check, for finite differencing
double basis_bQ_eval_raw(int n, int m, int kappa, const WeightV& w, const BallBasis& basis,
                         std::span<const double> x, double t);
double basis_bQ_norm(int n, int m, const WeightV& w);

size_t v_coeff_count(int d, int N);
size_t v_coeff_index(int d, int n, int m, int kappa);
void basis_bQ_eval_all(int N, const WeightV& w, const BallBasis& basis, const SolidPoint& p,
                       std::vector<double>& out);

// Transfer operator T_{beta,gamma,mu}: single u-integral for beta = 0, the
// (z1, z2, u) triple integral for beta > 0; mu = 0 via the endpoint average.
double transfer_T_solid(const USlice& g, const WeightV& w, const SolidPoint& p,
                        const SolidPoint& q, int quad_degree);

// Reproducing kernel via the transfer of the U boundary kernel (beta >= 0, mu >= 0).
double kernel_P_v(int n, const WeightV& w, const SolidPoint& p, const SolidPoint& q);
double kernel_P_v_direct(int n, const WeightV& w, const BallBasis& basis, const SolidPoint& p,
                         const SolidPoint& q);

// Closed (u,v) double-integral form of the partial-sum kernel at the top face
// (x, 1), stated for beta = 0.
double kernel_K_top(int n, const WeightV& w, std::span<const double> x, const SolidPoint& q);

// Cesaro kernel at the top face via the transfer of the U Cesaro closed form.
double cesaro_kernel_v_top(const CesaroSpec& spec, const WeightV& w, std::span<const double> x,
                           const SolidPoint& q);

// Residual of the full (x,t) differential operator applied to bQ (beta = 0),
// centered finite differences of step h at an interior point.
double ode_residual_solid(int n, int m, int kappa, const WeightV& w, const BallBasis& basis,
                          std::span<const double> x, double t, double h = 1e-4);
double ode_eigenvalue_solid(int n, int m, const WeightV& w);

// Residuals of the two Euler identities for H(x,t) = t^{m/2} P_kappa^m(x/sqrt(t)).
std::pair<double, double> euler_identities_check(int m, int kappa, const BallBasis& basis,
                                                 std::span<const double> x, double t,
                                                 double h = 1e-4);

struct VExpansion {
  WeightV weight;
  int N;
  std::shared_ptr<const BallBasis> basis;
  std::vector<double> coeff;

  double at(int n, int m, int kappa) const { return coeff[v_coeff_index(weight.d, n, m, kappa)]; }
  double partial_sum(int n, const SolidPoint& p) const;
  double cesaro_mean(const CesaroSpec& spec, const SolidPoint& p) const;
};

VExpansion expand_v(const std::function<double(const SolidPoint&)>& f, int N, const WeightV& w,
                    std::shared_ptr<const BallBasis> basis, const ProductRule& rule);

// Cesaro mean at the top-face point (x, 1) through the kernel/transfer route.
double cesaro_mean_v_kernel(const CesaroSpec& spec, const WeightV& w,
                            const std::function<double(const SolidPoint&)>& f,
                            std::span<const double> x, const ProductRule& rule);

}  // namespace parab
