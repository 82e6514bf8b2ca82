#pragma once

// Explicit Lyapunov-exponent formulas for special ensembles and spectra.
// All functions take sigma^2 data and work internally with y_i = 1/sigma_i^2.
// Residue-type formulas reject spectra whose relative y gap is below
// kDegeneracyThreshold with DegenerateSpectrumError.

#include <span>
#include <vector>

#include "lyap/spectrum.hpp"

namespace lyap::closed {

// Isotropic covariance sigma^2 I, exponents mu_1 >= ... >= mu_d.
std::vector<double> newman_exponents(int d, double sigma_sq);          // beta = 1
std::vector<double> complex_iso_exponents(int d, double sigma_sq);     // beta = 2
std::vector<double> quaternion_iso_exponents(int d, double sigma_sq);  // beta = 4
std::vector<double> isotropic_exponents(Beta beta, int d, double sigma_sq);

// True when all sigma_i^2 agree to relative 1e-12.
bool is_isotropic(const Spectrum& s);

// Complex case, general Sigma with distinct y: the k-th exponent (1-based).
//   mu_k = Psi(k)/2 - det M_k / (2 V),
// V the Vandermonde determinant prod_{i<j}(y_j - y_i) and M_k the Vandermonde
// matrix with row k replaced by (log y_j) y_j^{k-1}. The ratio is evaluated
// as sum_j log(y_j) y_j^{k-1} [y^{k-1}] L_j(y) over the Lagrange basis.
double forrester_kth_complex(int k, const Spectrum& s);

// Real 2x2: mu_1 = [Psi(1) + log(Tr Sigma / 2 + sqrt(det Sigma))] / 2.
double mannion_2x2(const Spectrum& s);

// Parameters of the Legendre reduction for real 3x3 matrices,
// y sorted as y1 > y2 >= y3.
struct EllipticReduction {
  double y1 = 0.0, y2 = 0.0, y3 = 0.0;
  double k_sq = 0.0;   // (y1 - y3) / (y1 - y2), >= 1
  double n = 0.0;      // y1 / (y1 - y2)
  double alpha = 0.0;  // 2 sqrt(y2 y3 / (y1 (y1 - y2)))
};

EllipticReduction elliptic_reduction(const Spectrum& s);

// The 3x3 elliptic expression
//   Psi(1) + log 2 - alpha F(phi(0), k^2) + lim_{x->0} [alpha Pi(phi(x), n, k^2) - log x]
// with phi(x) = i asinh(sqrt((y2 - y1)/(y1 + x))). Taking the principal root
// of the negative ratio gives the real amplitude phi(x) = -asin(sqrt((y1 - y2)/(y1 + x))).
// The limit is Richardson-extrapolated from x in y3 * {1e-4, 1e-5, 1e-6}.
double elliptic_3x3_expression(const Spectrum& s);

// mu_1 for real 3x3 matrices: half of elliptic_3x3_expression.
double real_3x3_elliptic(const Spectrum& s);

// F(l, y) = sum_i l_i prod_{j!=i} y_j / prod_{j!=i} (y_j - y_i).
double paired_f(std::span<const double> l, std::span<const double> y);

// Real d = 2k with y_i = y_{i+k}; y_half holds the k distinct values.
double real_paired_spectrum(std::span<const double> y_half);

// The distinct halves of a paired spectrum in y form, or empty when s is not
// of that shape (odd d, unpaired values, or coincident pairs).
std::vector<double> paired_halves(const Spectrum& s);

// sum_i {1/(y_i^2 prod_{j!=i}(y_i - y_j)^2) [1 - log y_i (1 + sum_{j!=i} 2 y_i/(y_i - y_j))]}
// scaled by (prod y)^2: the sum of residues of
// log z / (z prod (1 - z/y_i)^2) at the double poles z = y_i.
double quaternion_residue_sum(const Spectrum& s);

// Quaternion mu_1 for distinct y: [Psi(1) - log 2 + quaternion_residue_sum] / 2.
double quaternion_largest(const Spectrum& s);

}  // namespace lyap::closed
