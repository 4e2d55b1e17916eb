#pragma once

#include <functional>
#include <span>
#include <vector>

#include "parab/domain_u.hpp"
#include "parab/points.hpp"
#include "parab/quadrature.hpp"
#include "parab/specfun.hpp"

namespace parab {

// Weight varpi_{beta,gamma}(t) = t^beta (1-t)^gamma on the paraboloid surface.
struct WeightV0 {
  int d;
  double beta;
  double gamma;
  double b_bg;
  WeightV0(int d_, double beta_, double gamma_);
  double alpha() const { return beta + 0.5 * (d - 1); }
  // U-side weight the transfer operator maps into
  WeightU u_weight() const { return WeightU(gamma, alpha()); }
};

// Basis Q_{m,ell}^n(x,t) = P_{n-m}^{(beta+m+(d-1)/2, gamma)}(1-2t) t^{m/2} Y_ell^m(xi).
double basis_Q_eval(int n, int m, int ell, const WeightV0& w, const SurfacePoint& p);
double basis_Q_norm(int n, int m, const WeightV0& w);

// packed layout of the (n, m, ell) index triangle
size_t v0_coeff_count(int d, int N);
size_t v0_coeff_index(int d, int n, int m, int ell);
void basis_Q_eval_all(int N, const WeightV0& w, const SurfacePoint& p, std::vector<double>& out);

// Kernel-slice functions g((sqrt(t), t); z) fed to the transfer operator.
using USlice = std::function<double(double t, const UPoint& z)>;

// Transfer operator T_{beta,gamma}; beta = -1/2 is the plain substitution,
// beta > -1/2 the (z1, z2) probability double integral. quad_degree sizes the
// rules for the slice's polynomial degree.
double transfer_T(const USlice& g, const WeightV0& w, const SurfacePoint& p,
                  const SurfacePoint& q, int quad_degree);

// Reproducing kernel via the transfer of the U boundary kernel.
double kernel_P_v0(int n, const WeightV0& w, const SurfacePoint& p, const SurfacePoint& q);
// Same kernel by direct summation over the explicit basis (d in {2,3}).
double kernel_P_v0_direct(int n, const WeightV0& w, const SurfacePoint& p, const SurfacePoint& q);

// Closed integral form of the partial-sum kernel at the rim (xi, 1), beta = -1/2.
double kernel_K_boundary(int n, const WeightV0& w, std::span<const double> xi,
                         const SurfacePoint& q);

// Cesaro kernel at the rim via the transfer of the U Cesaro closed form.
double cesaro_kernel_v0_boundary(const CesaroSpec& spec, const WeightV0& w,
                                 std::span<const double> xi, const SurfacePoint& q);

// Residual of the radial differential equation satisfied by the basis
// (beta = -1/2 only); analytic Jacobi derivatives, t in (0,1).
double ode_residual(int n, int m, const WeightV0& w, double t);

struct V0Expansion {
  WeightV0 weight;
  int N;
  std::vector<double> coeff;

  double at(int n, int m, int ell) const { return coeff[v0_coeff_index(weight.d, n, m, ell)]; }
  double proj_eval(int m, const SurfacePoint& p) const;
  double partial_sum(int n, const SurfacePoint& p) const;
  double cesaro_mean(const CesaroSpec& spec, const SurfacePoint& p) const;
};

V0Expansion expand_v0(const std::function<double(const SurfacePoint&)>& f, int N,
                      const WeightV0& w, const ProductRule& rule);

// Cesaro mean at the rim point (xi, 1) through the kernel/transfer route.
double cesaro_mean_v0_kernel(const CesaroSpec& spec, const WeightV0& w,
                             const std::function<double(const SurfacePoint&)>& f,
                             std::span<const double> xi, const ProductRule& rule);

}  // namespace parab
