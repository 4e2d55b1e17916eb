#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

namespace parab {

inline constexpr double kDomainTol = 1e-12;

// Point of the parabolic domain U = {(x1,x2): x1^2 <= x2 <= 1}.
struct UPoint {
  double x1;
  double x2;
  UPoint(double x1_, double x2_) : x1(x1_), x2(x2_) {
    if (x1 * x1 > x2 + kDomainTol || x2 > 1.0 + kDomainTol)
      throw std::domain_error("UPoint: outside the parabolic domain");
    if (x2 < 0.0) x2 = 0.0;
    if (x2 > 1.0) x2 = 1.0;
  }
  bool on_parabola() const { return x2 - x1 * x1 <= kDomainTol; }
};

inline double norm2(std::span<const double> v) {
  double s = 0.0;
  for (double c : v) s += c * c;
  return s;
}

inline double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Point (x, t) = (sqrt(t) xi, t) of the paraboloid surface, stored as (xi, t)
// so the apex t = 0 carries no coordinate singularity.
struct SurfacePoint {
  std::vector<double> xi;
  double t;
  SurfacePoint(std::vector<double> xi_, double t_, bool renormalize = false)
      : xi(std::move(xi_)), t(t_) {
    if (xi.size() < 2) throw std::domain_error("SurfacePoint: need d >= 2");
    const double nrm = std::sqrt(norm2(xi));
    if (renormalize) {
      if (nrm == 0.0) throw std::domain_error("SurfacePoint: cannot normalize zero vector");
      for (double& c : xi) c /= nrm;
    } else if (std::abs(nrm - 1.0) > kDomainTol) {
      throw std::domain_error("SurfacePoint: xi is not a unit vector");
    }
    if (t < -kDomainTol || t > 1.0 + kDomainTol)
      throw std::domain_error("SurfacePoint: t outside [0,1]");
    if (t < 0.0) t = 0.0;
    if (t > 1.0) t = 1.0;
  }
  int d() const { return static_cast<int>(xi.size()); }
};

// Point of the solid paraboloid, |x|^2 <= t <= 1.
struct SolidPoint {
  std::vector<double> x;
  double t;
  SolidPoint(std::vector<double> x_, double t_) : x(std::move(x_)), t(t_) {
    if (x.size() < 2) throw std::domain_error("SolidPoint: need d >= 2");
    if (norm2(x) > t + kDomainTol || t > 1.0 + kDomainTol)
      throw std::domain_error("SolidPoint: outside the solid paraboloid");
    if (t > 1.0) t = 1.0;
  }
  int d() const { return static_cast<int>(x.size()); }
};

}  // namespace parab
