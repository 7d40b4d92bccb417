#ifndef MASKFRAME_TRIGPOLY_HPP
#define MASKFRAME_TRIGPOLY_HPP

#include <complex>
#include <cstdint>
#include <vector>

namespace maskframe {

using cplx = std::complex<double>;

/// A 2*pi-periodic trigonometric (Laurent) polynomial
///   p(xi) = sum_{k=-d..d} c_k exp(i k xi).
///
/// Coefficients are stored two-sided; a real-valued function corresponds to
/// conjugate-symmetric coefficients, c_{-k} = conj(c_k).  Construction
/// canonicalizes the degree: leading coefficients below 1e-14 * max|c_k|
/// are dropped from both ends so products do not inflate degrees.
class TrigPoly {
 public:
  TrigPoly() : deg_(0), c_(1, cplx(0.0)) {}

  /// From a two-sided coefficient vector of size 2*deg+1 (index k+deg).
  TrigPoly(int deg, std::vector<cplx> coeffs);

  static TrigPoly zero() { return TrigPoly(); }
  static TrigPoly constant(cplx v);
  /// c * exp(i k xi)
  static TrigPoly monomial(int k, cplx c);
  /// cos(k xi), sin(k xi)
  static TrigPoly cosine(int k, double amp = 1.0);
  static TrigPoly sine(int k, double amp = 1.0);

  int degree() const { return deg_; }
  /// c_k, zero outside [-d, d].
  cplx coeff(int k) const;
  const std::vector<cplx>& raw() const { return c_; }

  bool is_zero() const;
  /// max_k |c_k - conj(c_{-k})| <= tol * (1 + max|c_k|)
  bool real_valued(double tol = 1e-10) const;
  /// Forces exact conjugate symmetry, c_k <- (c_k + conj(c_{-k}))/2.
  TrigPoly symmetrized() const;

  double coeff_max() const;  ///< max_k |c_k|
  double coeff_sum() const;  ///< sum_k |c_k|

 private:
  int deg_;
  std::vector<cplx> c_;  // size 2*deg_+1, index k + deg_
};

/// Roots of a trig polynomial on the torus [-pi, pi), with multiplicities.
struct TorusRootSet {
  struct Root {
    double angle;
    int multiplicity;
  };
  std::vector<Root> roots;  // angles strictly increasing
  double tolerance = 0.0;

  bool empty() const { return roots.empty(); }
  std::vector<double> angles() const;
};

// ---- arithmetic ----
TrigPoly add(const TrigPoly& p, const TrigPoly& q);
TrigPoly sub(const TrigPoly& p, const TrigPoly& q);
TrigPoly mul(const TrigPoly& p, const TrigPoly& q);
TrigPoly scale(const TrigPoly& p, cplx lambda);
TrigPoly power(const TrigPoly& p, std::uint64_t n);

/// q(xi) = p(xi + pi), i.e. c_k -> (-1)^k c_k.
TrigPoly reflect_pi(const TrigPoly& p);
/// q(xi) = conj(p(xi)) for real xi, i.e. c_k -> conj(c_{-k}).
TrigPoly conj_poly(const TrigPoly& p);
/// |p|^2 = p * conj_poly(p), exactly conjugate-symmetric by construction.
TrigPoly mod_squared(const TrigPoly& p);
/// j-th derivative, c_k -> (i k)^j c_k.
TrigPoly derivative(const TrigPoly& p, int j);

// ---- evaluation ----
cplx eval(const TrigPoly& p, double xi);

/// Values at xi_m = 2*pi*m/M, m = 0..M-1, via FFT.  Requires M >= 2*deg+1.
std::vector<cplx> eval_grid(const TrigPoly& p, std::size_t M);
/// Same but keeps only real parts (for real-valued polynomials).
std::vector<double> eval_grid_real(const TrigPoly& p, std::size_t M);

double grid_max_abs(const TrigPoly& p, std::size_t M);

/// Certified upper bound on ||p||_inf for real-valued p: the grid maximum
/// over M uniform points inflated by 1/(1 - d*delta/2), delta = 2*pi/M.
/// Valid by the Bernstein inequality ||p'|| <= d ||p||; requires d*delta < 2.
double sup_norm_certified(const TrigPoly& p, std::size_t M);
/// With the default grid 16*d rounded up to a power of two (>= 64).
double sup_norm_certified(const TrigPoly& p);

// ---- roots on the unit circle ----
struct RootOptions {
  double circle_tol = 1e-8;   ///< keep algebraic roots with ||z|-1| <= this
  double cluster_tol = 1e-6;  ///< merge roots within this angular distance
  int companion_max_degree = 1024;  ///< algebraic degree cutoff for the
                                    ///< eigenvalue route; above it a grid
                                    ///< scan of |p|^2 is used instead
};

/// All torus roots of p (not the zero polynomial).  Moderate degrees use the
/// companion-matrix eigenvalue method on z^d p(z); large degrees locate the
/// zeros of |p|^2 by a dense grid scan with local refinement.
TorusRootSet torus_roots(const TrigPoly& p, const RootOptions& opt = {});
TorusRootSet torus_roots(const TrigPoly& p, double cluster_tol);

/// Roots of the complex algebraic polynomial a_0 + a_1 z + ... + a_n z^n via
/// companion-matrix eigenvalues.  Exposed for the Riesz factorization.
std::vector<cplx> algebraic_roots(const std::vector<cplx>& coeffs);

/// Wrap an angle into [-pi, pi).
double wrap_angle(double x);

}  // namespace maskframe

#endif
