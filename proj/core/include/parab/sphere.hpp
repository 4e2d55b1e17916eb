#pragma once

#include <span>
#include <vector>

namespace parab {

// dim H_n^d = binom(n+d-1, n) - binom(n+d-3, n-2)
int dim_harmonics(int d, int n);

struct HarmonicIndex {
  int d;
  int m;
  int ell;  // 1 <= ell <= dim_harmonics(d, m)
  HarmonicIndex(int d_, int m_, int ell_);
};

// Real orthonormal spherical harmonic under (1/omega_d) int Y^2 dsigma = 1.
// Explicit bases for d in {2,3}; other d throws.
double sph_eval(const HarmonicIndex& idx, std::span<const double> xi);
// All degrees m <= mmax at once, packed degree by degree.
void sph_eval_all(int d, int mmax, std::span<const double> xi, std::vector<double>& out);

// Homogeneous degree-m solid harmonic; restricts to sph_eval on the unit sphere.
double solid_harmonic(int d, int m, int ell, std::span<const double> x);

// Z_m^{(d-2)/2}(c); equals sum_ell Y_ell^m(xi) Y_ell^m(eta) at c = <xi,eta>.
double zonal_kernel(int d, int m, double c);

// s2^{m/2} Z_m^lambda(s1 / sqrt(s2)) in polynomial form; regular at s2 = 0.
double zonal_homog(int m, double lambda, double s1, double s2);

// Index-raising integral: evaluates the (z1,z2) double integral of
// Z_m^{lambda+sigma} against the product Jacobi weights; equals Z_m^lambda(t).
double raise_index_Z(double lambda, double sigma, int m, double t);

}  // namespace parab
