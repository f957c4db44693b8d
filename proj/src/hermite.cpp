#include "kfp/hermite.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace kfp {

namespace {

using LComplex = std::complex<long double>;
constexpr long double kPiL = 3.141592653589793238462643383279502884L;

// Scaled recurrence g_j = F_j / sqrt(j!), with running exponent so that
// g stays in range: phi_j = (2 pi)^{-1/4} e^{-s^2/4 + expo} g_j.
struct ScaledRow {
  std::vector<LComplex> g;  // g_j * e^{-expo}
  long double expo = 0.0L;
};

ScaledRow scaled_g_row(int N, LComplex s) {
  ScaledRow row;
  row.g.resize(N + 1);
  LComplex gp = 0.0L, g = 1.0L;
  row.g[0] = g;
  long double expo = 0.0L;
  for (int j = 0; j < N; ++j) {
    LComplex gn = (s * g - std::sqrt((long double)j) * gp) / std::sqrt((long double)j + 1.0L);
    gp = g;
    g = gn;
    if (std::abs(g) > 1e300L) {
      long double sc = std::abs(g);
      g /= sc;
      gp /= sc;
      expo += std::log(sc);
      for (int k = 0; k <= j + 1 && k <= N; ++k) row.g[k] /= sc;
    }
    row.g[j + 1] = g;
  }
  row.expo = expo;
  return row;
}

LComplex phi_prefactor_log(LComplex s, long double extra_expo) {
  // log of (2 pi)^{-1/4} e^{-s^2/4} plus the recurrence exponent
  LComplex lg = -s * s / 4.0L + extra_expo;
  lg -= 0.25L * std::log(2.0L * kPiL);
  return lg;
}

}  // namespace

Complex hermite_poly(int j, Complex s) {
  if (j < 0) throw std::invalid_argument("hermite_poly: negative degree");
  Complex fp = 1.0, f = s;
  if (j == 0) return fp;
  for (int k = 1; k < j; ++k) {
    Complex fn = s * f - (double)k * fp;
    fp = f;
    f = fn;
  }
  return f;
}

std::vector<Complex> phi_row(int N, Complex s) {
  LComplex sl(s.real(), s.imag());
  ScaledRow row = scaled_g_row(N, sl);
  LComplex lg = phi_prefactor_log(sl, row.expo);
  std::vector<Complex> out(N + 1);
  // split exp into magnitude and phase so that partial overflow cannot occur
  long double mag = lg.real();
  LComplex phase = std::exp(LComplex(0.0L, lg.imag()));
  for (int j = 0; j <= N; ++j) {
    LComplex v = row.g[j] * phase;
    long double m = mag + std::log(std::abs(v) + 1e-4932L);
    if (m > 700.0L) {
      out[j] = Complex(std::numeric_limits<double>::infinity(),
                       std::numeric_limits<double>::infinity());
    } else {
      LComplex r = v * std::exp(LComplex(mag, 0.0L));
      out[j] = Complex((double)r.real(), (double)r.imag());
    }
  }
  return out;
}

Complex phi(int j, Complex s) { return phi_row(j, s)[j]; }

std::pair<double, Complex> phi_log(int j, Complex s) {
  LComplex sl(s.real(), s.imag());
  ScaledRow row = scaled_g_row(j, sl);
  LComplex lg = phi_prefactor_log(sl, row.expo);
  LComplex v = row.g[j];
  long double a = std::abs(v);
  if (a == 0.0L) return {-std::numeric_limits<double>::infinity(), Complex(0, 0)};
  long double logmag = lg.real() + std::log(a);
  LComplex phase = (v / a) * std::exp(LComplex(0.0L, lg.imag()));
  return {(double)logmag, Complex((double)phase.real(), (double)phase.imag())};
}

Complex psi_shifted(const MultiIndex& alpha, const RVec& xi, const RVec& v) {
  if ((int)alpha.size() != xi.size() || xi.size() != v.size())
    throw std::invalid_argument("psi_shifted: dimension mismatch");
  Complex out = 1.0;
  for (int j = 0; j < xi.size(); ++j)
    out *= phi(alpha[j], Complex(v[j], 2.0 * xi[j]));
  return out;
}

double shifted_norm_sq(const MultiIndex& alpha, const RVec& xi) {
  if ((int)alpha.size() != xi.size())
    throw std::invalid_argument("shifted_norm_sq: dimension mismatch");
  long double out = 1.0L;
  for (int m = 0; m < xi.size(); ++m) {
    long double q = 4.0L * (long double)xi[m] * (long double)xi[m];  // (2 xi_m)^2
    long double term = 1.0L;  // j = 0
    long double sum = 1.0L;
    for (int j = 1; j <= alpha[m]; ++j) {
      // C(a,j)/j! q^j  from  C(a,j-1)/(j-1)! q^{j-1}
      term *= q * (long double)(alpha[m] - j + 1) / ((long double)j * (long double)j);
      sum += term;
    }
    out *= std::exp(2.0L * (long double)xi[m] * (long double)xi[m]) * sum;
  }
  return (double)out;
}

GaussHermiteRule::GaussHermiteRule(int count) {
  if (count < 1) throw std::invalid_argument("GaussHermiteRule: count < 1");
  RMat J = RMat::Zero(count, count);
  for (int j = 1; j < count; ++j) {
    J(j - 1, j) = std::sqrt((double)j);
    J(j, j - 1) = J(j - 1, j);
  }
  Eigen::SelfAdjointEigenSolver<RMat> es(J);
  nodes = es.eigenvalues();
  weights.resize(count);
  const double mu0 = std::sqrt(2.0 * kPi);  // int e^{-s^2/2} ds
  for (int i = 0; i < count; ++i) {
    double v0 = es.eigenvectors()(0, i);
    weights[i] = mu0 * v0 * v0;
  }
}

double shifted_norm_sq_quadrature(const MultiIndex& alpha, const RVec& xi,
                                  const GaussHermiteRule& rule) {
  // per axis: int phi_a(y + 2 i xi) phi_a(y - 2 i xi) dy; the exponential parts
  // combine to e^{-y^2/2 + 2 xi^2} so the rule integrates a polynomial exactly.
  long double out = 1.0L;
  for (int m = 0; m < xi.size(); ++m) {
    int a = alpha[m];
    long double acc = 0.0L;
    for (int i = 0; i < rule.nodes.size(); ++i) {
      double y = rule.nodes[i];
      // strip the weight e^{-y^2/2} which the rule supplies
      Complex p = hermite_poly(a, Complex(y, 2.0 * xi[m]));
      Complex q = hermite_poly(a, Complex(y, -2.0 * xi[m]));
      acc += (long double)rule.weights[i] * (long double)(p * q).real();
    }
    long double fact = 1.0L;
    for (int j = 2; j <= a; ++j) fact *= j;
    acc /= fact * std::sqrt(2.0L * kPiL);
    acc *= std::exp(2.0L * (long double)xi[m] * (long double)xi[m]);
    out *= acc;
  }
  return (double)out;
}

namespace {

// dyadic trapezoid grid wide enough for degree N and shift c
struct Grid1D {
  long double h;
  int k_max;
};

Grid1D make_grid(int N, double im_shift) {
  Grid1D g;
  g.h = (N <= 96) ? 0.0625L : 0.03125L;
  long double Y = 2.0L * std::sqrt((long double)N + 1.0L) + 10.0L + 2.0L * std::abs((long double)im_shift);
  g.k_max = (int)std::ceil(Y / g.h);
  return g;
}

std::vector<LComplex> phi_row_l(int N, LComplex s) {
  ScaledRow row = scaled_g_row(N, s);
  LComplex lg = phi_prefactor_log(s, row.expo);
  LComplex pref = std::exp(lg);
  std::vector<LComplex> out(N + 1);
  for (int j = 0; j <= N; ++j) out[j] = pref * row.g[j];
  return out;
}

}  // namespace

Mat HermiteTables::pairing_matrix(int N, double xi) {
  Grid1D g = make_grid(N, 2.0 * xi);
  std::vector<std::vector<LComplex>> rows(2 * g.k_max + 1);
  for (int k = -g.k_max; k <= g.k_max; ++k)
    rows[k + g.k_max] = phi_row_l(N, LComplex((long double)k * g.h, -2.0L * (long double)xi));
  Mat P(N + 1, N + 1);
  for (int a = 0; a <= N; ++a)
    for (int b = a; b <= N; ++b) {
      LComplex acc = 0.0L;
      for (auto& r : rows) acc += r[a] * r[b];
      acc *= g.h;
      P(a, b) = Complex((double)acc.real(), (double)acc.imag());
      P(b, a) = P(a, b);
    }
  return P;
}

Mat HermiteTables::shift_matrix(int N, double xi) {
  Grid1D g = make_grid(N, 2.0 * xi);
  Mat U(N + 1, N + 1);
  std::vector<std::vector<LComplex>> shifted(2 * g.k_max + 1), real(2 * g.k_max + 1);
  for (int k = -g.k_max; k <= g.k_max; ++k) {
    LComplex y((long double)k * g.h, 0.0L);
    shifted[k + g.k_max] = phi_row_l(N, y + LComplex(0.0L, 2.0L * (long double)xi));
    real[k + g.k_max] = phi_row_l(N, y);
  }
  for (int b = 0; b <= N; ++b)
    for (int a = 0; a <= N; ++a) {
      LComplex acc = 0.0L;
      for (size_t k = 0; k < shifted.size(); ++k) acc += real[k][b] * shifted[k][a];
      acc *= g.h;
      U(b, a) = Complex((double)acc.real(), (double)acc.imag());
    }
  return U;
}

RMat HermiteTables::real_shift_matrix(int N, double c) {
  Grid1D g = make_grid(N, 0.0);
  g.k_max += (int)std::ceil(std::abs(c) / g.h);
  RMat T(N + 1, N + 1);
  std::vector<std::vector<LComplex>> shifted(2 * g.k_max + 1), real(2 * g.k_max + 1);
  for (int k = -g.k_max; k <= g.k_max; ++k) {
    LComplex y((long double)k * g.h, 0.0L);
    shifted[k + g.k_max] = phi_row_l(N, y + LComplex((long double)c, 0.0L));
    real[k + g.k_max] = phi_row_l(N, y);
  }
  for (int b = 0; b <= N; ++b)
    for (int a = 0; a <= N; ++a) {
      long double acc = 0.0L;
      for (size_t k = 0; k < shifted.size(); ++k)
        acc += real[k][b].real() * shifted[k][a].real();
      T(b, a) = (double)(acc * g.h);
    }
  return T;
}

RMat HermiteTables::gram_matrix(int N) {
  Mat U = shift_matrix(N, 0.0);
  return U.real();
}

Complex biorthogonal_pairing(const MultiIndex& alpha, const MultiIndex& beta,
                             const RVec& xi) {
  if (alpha.size() != beta.size() || (int)alpha.size() != xi.size())
    throw std::invalid_argument("biorthogonal_pairing: dimension mismatch");
  int N = 0;
  for (size_t j = 0; j < alpha.size(); ++j) N = std::max({N, alpha[j], beta[j]});
  Complex out = 1.0;
  for (int j = 0; j < xi.size(); ++j) {
    Mat P = HermiteTables::pairing_matrix(N, xi[j]);
    out *= P(alpha[j], beta[j]);
  }
  return out;
}

}  // namespace kfp
