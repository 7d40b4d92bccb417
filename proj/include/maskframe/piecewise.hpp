#ifndef MASKFRAME_PIECEWISE_HPP
#define MASKFRAME_PIECEWISE_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "maskframe/trigpoly.hpp"

namespace maskframe {

/// A named 2*pi-periodic real function with f(0) = 1 (validated on
/// construction within 1e-12).
class Evaluator {
 public:
  Evaluator(std::string name, std::function<double(double)> fn);

  double operator()(double xi) const { return fn_(xi); }
  const std::string& name() const { return name_; }

  /// Presets: "one", "cos", "sin-bump", "sym-pair", "cycle".
  static Evaluator preset(const std::string& name);
  /// Periodic linear interpolant of "xi,value" rows, xi ascending in [-pi,pi).
  static Evaluator from_samples(const std::vector<std::pair<double, double>>& samples,
                                const std::string& name = "samples");

 private:
  std::string name_;
  std::function<double(double)> fn_;
};

/// Periodic polyline on [-pi, pi): nodes (x_k, y_k), x_1 = -pi, x strictly
/// increasing, x_n < pi; the last link wraps to (x_1 + 2*pi, y_1).
struct PiecewiseLinear {
  std::vector<double> x;
  std::vector<double> y;

  std::size_t size() const { return x.size(); }
  double eval(double xi) const;
  /// Slope of link k (from node k to node k+1, the last wraps around).
  double slope(std::size_t k) const;
  /// Right endpoint of link k in unwrapped coordinates (x[0]+2*pi for the
  /// last link).
  double link_end(std::size_t k) const;
  double link_end_y(std::size_t k) const;

  void validate() const;  // throws domain_error on a broken invariant
};

PiecewiseLinear make_polyline(std::vector<double> x, std::vector<double> y);

/// One root relocation performed by displace_roots.
struct RootRelocation {
  enum class Mechanism { kNodeShift, kLinkSplit };
  double old_root;
  double new_root;
  Mechanism mechanism;
  double h = 0.0;  // link-split ordinate
};

/// Detected stability defects of a root set.
struct StabilityDefects {
  struct Cycle {
    std::vector<double> betas;  // the beta_j orbit in [0, 2*pi)
    long long m = 0;
    int n = 0;
  };
  std::vector<std::pair<double, double>> symmetric_pairs;
  std::vector<Cycle> cycles;

  bool empty() const { return symmetric_pairs.empty() && cycles.empty(); }
  std::string describe() const;
};

// ---- step 1 operations ----

/// Nodes at xi_k = -pi + 2*pi*(k-1)/n, k = 1..n, with y_k = f(xi_k).  n >= 4.
PiecewiseLinear sample_interpolant(const Evaluator& f, int n);

/// Smallest power-of-two n >= 8 with measured sup deviation (on a grid 16x
/// finer than the nodes) below eps/6.
int choose_n(const Evaluator& f, double eps, int cap = 1 << 20);

/// Removes zero plateaus (maximal runs of >= 2 consecutive zero nodes with
/// nonzero neighbors) by the three sign cases; elsewhere unchanged.
PiecewiseLinear repair_plateaus(const PiecewiseLinear& f1, double eps);

/// Exact roots of a plateau-free polyline; a node root with equal-sign
/// neighbors (a touch) has multiplicity 2.
TorusRootSet find_roots_pl(const PiecewiseLinear& g);

/// Symmetric pairs (angular difference pi within tol) and nontrivial cycles
/// (doubling orbits of beta = root - pi whose every beta_j + pi is a root).
StabilityDefects find_defects(const TorusRootSet& roots, double tol);

/// Displaces defect roots (node shift or link split) until find_defects is
/// empty.  Iteration cap 100.
std::pair<PiecewiseLinear, std::vector<RootRelocation>> displace_roots(
    const PiecewiseLinear& f2, double eps, double tol);

/// alpha = min |xi0 - xi0'|/2 over relocations (+inf when none);
/// a = min |slope| over links with nonzero slope (+inf when all flat).
std::pair<double, double> alpha_and_a(const PiecewiseLinear& f3,
                                      const std::vector<RootRelocation>& relocations);

/// Exact Fourier coefficients of the periodic polyline, degree d.
TrigPoly fourier_coeffs_pl(const PiecewiseLinear& g, int d);

/// Measured sup of |f - g| on a dense grid (diagnostics and tests).
double sup_deviation(const Evaluator& f, const PiecewiseLinear& g, int grid);
double sup_deviation(const PiecewiseLinear& a, const PiecewiseLinear& b, int grid);

}  // namespace maskframe

#endif
