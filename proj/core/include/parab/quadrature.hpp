#pragma once

#include <span>
#include <string>
#include <vector>

#include "parab/points.hpp"

namespace parab {

// 1-D Gaussian rule with its declared polynomial exactness.
struct Rule1D {
  std::vector<double> nodes;
  std::vector<double> weights;
  int exactness = 0;
  std::string weight_desc;

  template <class F>
  double integrate(F&& f) const {
    double s = 0.0;
    for (size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(nodes[i]);
    return s;
  }
  double total_weight() const {
    double s = 0.0;
    for (double w : weights) s += w;
    return s;
  }
};

// Gauss rule for (1-t)^alpha (1+t)^beta on [-1,1]; exact to degree 2*n_points - 1.
// Golub-Welsch on the Jacobi recurrence, tridiagonal QL in-module.
Rule1D gauss_jacobi(int n_points, double alpha, double beta);
// Same nodes, weights rescaled to sum to one.
Rule1D gauss_jacobi_prob(int n_points, double alpha, double beta);
// Rule for t^p (1-t)^q on [0,1], by affine mapping of the [-1,1] rule.
Rule1D gauss_jacobi01(int n_points, double p, double q);
Rule1D gauss_jacobi01_prob(int n_points, double p, double q);
Rule1D gauss_legendre(int n_points);

// Default point count for a requested exactness degree.
int points_for_degree(int degree);

double omega_d(int d);                    // surface area of S^{d-1}
double ball_norm_const(double mu, int d); // b_mu, normalizes (1-|x|^2)^{mu-1/2} on B^d

enum class DomainTag { U, Sphere, Ball, V0, V };

// Product rule carrying the normalized measure of its domain (weights sum to 1).
struct ProductRule {
  DomainTag domain = DomainTag::U;
  int d = 2;          // ambient dimension parameter of the domain
  int point_dim = 2;  // coordinates stored per node
  int exactness = 0;
  std::vector<double> coords;  // point_dim * size()
  std::vector<double> weights;

  size_t size() const { return weights.size(); }
  std::span<const double> point(size_t i) const {
    return {coords.data() + point_dim * i, static_cast<size_t>(point_dim)};
  }
  double weight(size_t i) const { return weights[i]; }

  template <class F>
  double integrate(F&& f) const {
    double s = 0.0;
    for (size_t i = 0; i < size(); ++i) s += weights[i] * f(point(i));
    return s;
  }

  UPoint upoint(size_t i) const;
  SurfacePoint surface_point(size_t i) const;
  SolidPoint solid_point(size_t i) const;
};

// Parabolic domain U with weight (1-x2)^a (x2-x1^2)^{b-1/2}; normalized measure.
// Exact for all polynomials of total degree <= 2*level - 1.
ProductRule rule_u(double a, double b, int level);
// Unit sphere S^{d-1}, d in {2,3}, measure normalized by 1/omega_d.
ProductRule rule_sphere(int d, int degree);
// Paraboloid surface with weight t^beta (1-t)^gamma, normalized measure; points are (xi, t).
ProductRule rule_v0(int d, double beta, double gamma, int degree);
// Unit ball with weight (1-|x|^2)^{mu-1/2}, normalized.
ProductRule rule_ball(int d, double mu, int degree);
// Solid paraboloid with weight t^beta (1-t)^gamma (t-|x|^2)^{mu-1/2}, normalized; points (x, t).
ProductRule rule_v(int d, double beta, double gamma, double mu, int degree);

}  // namespace parab
