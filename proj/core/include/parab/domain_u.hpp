#pragma once

#include <functional>
#include <vector>

#include "parab/points.hpp"
#include "parab/quadrature.hpp"
#include "parab/specfun.hpp"

namespace parab {

// Weight U_{a,b}(x) = (1-x2)^a (x2-x1^2)^{b-1/2} on U, with the constant
// d_ab that makes the weighted measure a probability measure.
struct WeightU {
  double a;
  double b;
  double d_ab;
  WeightU(double a_, double b_);
  double density(const UPoint& x) const;
};

// Koornwinder basis P_{k,n}^{a,b}, evaluated in homogenized polynomial form
// (no division by sqrt(x2); the parabola vertex is a regular point).
double basis_eval(int k, int n, const WeightU& w, const UPoint& x);
// All P_{k,n} for 0 <= k <= n <= N, packed as n(n+1)/2 + k.
void basis_eval_all(int N, const WeightU& w, const UPoint& x, std::vector<double>& out);
double basis_norm(int k, int n, const WeightU& w);

// Reproducing kernel of degree n, by direct summation over the basis.
double kernel_P(int n, const WeightU& w, const UPoint& x, const UPoint& y);
// Same kernel with first argument on the parabola, (sqrt(x2), x2), computed
// through the collapsed zonal form; regular at y2 = 0.
double kernel_P_boundary(int n, const WeightU& w, double x2, const UPoint& y);

// z(x,t) = 1 - (1-t^2)(1-x1) - (1-t)^2 (1-x2)/2; lies in [-1,1] for x in U.
double z_map(const UPoint& x, double t);

// Closed integral form of the partial-sum kernel K_n(U_{a,b}; 1, x).
double kernel_K_at_one(int n, const WeightU& w, const UPoint& x);

// Cesaro (C,delta) kernel, weighted sum of partial-sum kernels.
double cesaro_kernel(const CesaroSpec& spec, const WeightU& w, const UPoint& x, const UPoint& y);
// Closed integral form of the Cesaro kernel at the corner (1,1).
double cesaro_kernel_at_one(const CesaroSpec& spec, const WeightU& w, const UPoint& x);

// Fourier orthogonal coefficients on U up to degree N.
struct UExpansion {
  WeightU weight;
  int N;
  std::vector<double> coeff;  // (n,k) at n(n+1)/2 + k

  double& at(int n, int k) { return coeff[static_cast<size_t>(n) * (n + 1) / 2 + k]; }
  double at(int n, int k) const { return coeff[static_cast<size_t>(n) * (n + 1) / 2 + k]; }

  double proj_eval(int m, const UPoint& x) const;
  double partial_sum(int n, const UPoint& x) const;
  // coefficient-space Cesaro mean, projection-form weights
  double cesaro_mean(const CesaroSpec& spec, const UPoint& x) const;
  // same mean through the partial-sum representation (algebraically identical)
  double cesaro_mean_from_partials(const CesaroSpec& spec, const UPoint& x) const;
};

UExpansion expand(const std::function<double(const UPoint&)>& f, int N, const WeightU& w,
                  const ProductRule& rule);

}  // namespace parab
