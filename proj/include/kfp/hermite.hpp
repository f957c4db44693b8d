#pragma once

#include <complex>
#include <vector>

#include "kfp/multi_index.hpp"
#include "kfp/types.hpp"

namespace kfp {

/// Hermite polynomial F_j(s) (probabilists' convention),
/// F_{j+1} = s F_j - j F_{j-1}, F_0 = 1, F_1 = s. Valid for complex s.
Complex hermite_poly(int j, Complex s);

/// Normalized Hermite function phi_j(s) = (j! sqrt(2 pi))^{-1/2} e^{-s^2/4} F_j(s).
/// Evaluation runs a factorial-free scaled recurrence; when intermediate
/// magnitudes would leave the representable range the accumulation switches to
/// log-magnitude/phase form, so the returned value is correct whenever it fits
/// in a double.
Complex phi(int j, Complex s);

/// phi_0..phi_N at s in one recurrence sweep.
std::vector<Complex> phi_row(int N, Complex s);

/// log |phi_j(s)| and the unit phase factor; usable far beyond double range.
std::pair<double, Complex> phi_log(int j, Complex s);

/// psi_alpha^xi(v) = prod_j phi_{alpha_j}(v_j + 2 i xi_j).
Complex psi_shifted(const MultiIndex& alpha, const RVec& xi, const RVec& v);

/// Closed form ||psi_alpha^xi||^2 = e^{2 xi^2} prod_m sum_{j<=alpha_m} C(alpha_m,j)/j! (2 xi_m)^{2j}.
double shifted_norm_sq(const MultiIndex& alpha, const RVec& xi);

/// Gauss rule for the weight e^{-s^2/2} (Golub-Welsch on the sqrt(j) Jacobi
/// matrix). Exact for polynomial integrands of degree <= 2*count-1.
struct GaussHermiteRule {
  explicit GaussHermiteRule(int count);
  RVec nodes;
  RVec weights;  // integrate f: sum w_i f(s_i) ~ int f(s) e^{-s^2/2} ds
};

/// Quadrature of ||psi_alpha^xi||^2 (oracle for the closed form). The
/// integrand oscillation cancels exactly, so the Gauss rule is exact up to
/// rounding once count >= |alpha|+1 per axis.
double shifted_norm_sq_quadrature(const MultiIndex& alpha, const RVec& xi,
                                  const GaussHermiteRule& rule);

/// 1-d tables used to assemble pairings, projections and shifts. All
/// integrals are trapezoid sums on exactly-representable dyadic grids,
/// accumulated in extended precision: the shifted-function integrands cancel
/// by up to e^{2 xi^2} and plain double arithmetic loses the tolerance.
class HermiteTables {
 public:
  /// P[a][b] = int phi_a(y - 2 i xi) phi_b(y - 2 i xi) dy = <psi_a^xi, psi_b^{-xi}> (1-d).
  static Mat pairing_matrix(int N, double xi);

  /// U[b][a] = <phi_b, phi_a(. + 2 i xi)>: expansion of psi_a^xi in the real basis.
  static Mat shift_matrix(int N, double xi);

  /// T[b][a] = <phi_b, phi_a(. + c)> for real translation c.
  static RMat real_shift_matrix(int N, double c);

  /// G[a][b] = <phi_a, phi_b> on the real axis (orthonormality check).
  static RMat gram_matrix(int N);
};

/// <psi_alpha^xi, psi_beta^{-xi}> in n dimensions (product of 1-d pairings).
Complex biorthogonal_pairing(const MultiIndex& alpha, const MultiIndex& beta,
                             const RVec& xi);

}  // namespace kfp
