#include "maskframe/trigpoly.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "maskframe/errors.hpp"
#include "maskframe/fft.hpp"

namespace maskframe {

namespace {

constexpr double kCanonTol = 1e-14;
constexpr double kPi = std::numbers::pi;

// Drops near-zero leading coefficients from both ends.
void canonicalize(int& deg, std::vector<cplx>& c) {
  double mx = 0.0;
  for (const cplx& v : c) mx = std::max(mx, std::abs(v));
  if (mx == 0.0) {
    deg = 0;
    c.assign(1, cplx(0.0));
    return;
  }
  const double thr = kCanonTol * mx;
  int lo = 0, hi = static_cast<int>(c.size()) - 1;
  while (deg > 0) {
    if (std::abs(c[lo]) < thr && std::abs(c[hi]) < thr) {
      ++lo;
      --hi;
      --deg;
    } else {
      break;
    }
  }
  if (lo > 0) c = std::vector<cplx>(c.begin() + lo, c.begin() + hi + 1);
}

}  // namespace

TrigPoly::TrigPoly(int deg, std::vector<cplx> coeffs) : deg_(deg), c_(std::move(coeffs)) {
  if (deg_ < 0 || c_.size() != static_cast<std::size_t>(2 * deg_ + 1))
    throw domain_error("TrigPoly: coefficient vector size must be 2*deg+1");
  canonicalize(deg_, c_);
}

TrigPoly TrigPoly::constant(cplx v) { return TrigPoly(0, {v}); }

TrigPoly TrigPoly::monomial(int k, cplx c) {
  const int d = std::abs(k);
  std::vector<cplx> v(2 * d + 1, cplx(0.0));
  v[k + d] = c;
  return TrigPoly(d, std::move(v));
}

TrigPoly TrigPoly::cosine(int k, double amp) {
  const int d = std::abs(k);
  if (d == 0) return constant(amp);
  std::vector<cplx> v(2 * d + 1, cplx(0.0));
  v[0] = v[2 * d] = cplx(amp / 2.0);
  return TrigPoly(d, std::move(v));
}

TrigPoly TrigPoly::sine(int k, double amp) {
  const int d = std::abs(k);
  if (d == 0) return zero();
  const double sgn = k > 0 ? 1.0 : -1.0;
  std::vector<cplx> v(2 * d + 1, cplx(0.0));
  v[2 * d] = cplx(0.0, -0.5 * sgn * amp);  // c_d = amp/(2i)
  v[0] = cplx(0.0, 0.5 * sgn * amp);
  return TrigPoly(d, std::move(v));
}

cplx TrigPoly::coeff(int k) const {
  if (k < -deg_ || k > deg_) return cplx(0.0);
  return c_[k + deg_];
}

bool TrigPoly::is_zero() const { return deg_ == 0 && c_[0] == cplx(0.0); }

bool TrigPoly::real_valued(double tol) const {
  double worst = 0.0;
  for (int k = 0; k <= deg_; ++k)
    worst = std::max(worst, std::abs(c_[deg_ + k] - std::conj(c_[deg_ - k])));
  return worst <= tol * (1.0 + coeff_max());
}

TrigPoly TrigPoly::symmetrized() const {
  std::vector<cplx> v(c_);
  for (int k = 0; k <= deg_; ++k) {
    const cplx avg = 0.5 * (c_[deg_ + k] + std::conj(c_[deg_ - k]));
    v[deg_ + k] = avg;
    v[deg_ - k] = std::conj(avg);
  }
  return TrigPoly(deg_, std::move(v));
}

double TrigPoly::coeff_max() const {
  double mx = 0.0;
  for (const cplx& v : c_) mx = std::max(mx, std::abs(v));
  return mx;
}

double TrigPoly::coeff_sum() const {
  double s = 0.0;
  for (const cplx& v : c_) s += std::abs(v);
  return s;
}

std::vector<double> TorusRootSet::angles() const {
  std::vector<double> a;
  a.reserve(roots.size());
  for (const auto& r : roots) a.push_back(r.angle);
  return a;
}

TrigPoly add(const TrigPoly& p, const TrigPoly& q) {
  const int d = std::max(p.degree(), q.degree());
  std::vector<cplx> v(2 * d + 1, cplx(0.0));
  for (int k = -d; k <= d; ++k) v[k + d] = p.coeff(k) + q.coeff(k);
  return TrigPoly(d, std::move(v));
}

TrigPoly sub(const TrigPoly& p, const TrigPoly& q) { return add(p, scale(q, cplx(-1.0))); }

TrigPoly mul(const TrigPoly& p, const TrigPoly& q) {
  if (p.is_zero() || q.is_zero()) return TrigPoly::zero();
  const int d = p.degree() + q.degree();
  const std::size_t np = p.raw().size(), nq = q.raw().size();
  std::vector<cplx> v(2 * d + 1, cplx(0.0));
  // direct convolution below ~4e6 ops, FFT above
  if (np * nq <= (std::size_t{1} << 22)) {
    for (std::size_t i = 0; i < np; ++i) {
      const cplx pi_ = p.raw()[i];
      if (pi_ == cplx(0.0)) continue;
      for (std::size_t j = 0; j < nq; ++j) v[i + j] += pi_ * q.raw()[j];
    }
  } else {
    auto conv = fft::convolve_fft(p.raw(), q.raw());
    std::copy(conv.begin(), conv.end(), v.begin());
  }
  return TrigPoly(d, std::move(v));
}

TrigPoly scale(const TrigPoly& p, cplx lambda) {
  std::vector<cplx> v(p.raw());
  for (cplx& x : v) x *= lambda;
  return TrigPoly(p.degree(), std::move(v));
}

TrigPoly power(const TrigPoly& p, std::uint64_t n) {
  if (n == 0) return TrigPoly::constant(1.0);
  TrigPoly base = p;
  TrigPoly acc = TrigPoly::constant(1.0);
  while (n > 0) {
    if (n & 1ull) acc = mul(acc, base);
    n >>= 1;
    if (n > 0) base = mul(base, base);
  }
  return acc;
}

TrigPoly reflect_pi(const TrigPoly& p) {
  const int d = p.degree();
  std::vector<cplx> v(p.raw());
  for (int k = -d; k <= d; ++k)
    if (k & 1) v[k + d] = -v[k + d];
  return TrigPoly(d, std::move(v));
}

TrigPoly conj_poly(const TrigPoly& p) {
  const int d = p.degree();
  std::vector<cplx> v(2 * d + 1);
  for (int k = -d; k <= d; ++k) v[k + d] = std::conj(p.coeff(-k));
  return TrigPoly(d, std::move(v));
}

TrigPoly mod_squared(const TrigPoly& p) { return mul(p, conj_poly(p)).symmetrized(); }

TrigPoly derivative(const TrigPoly& p, int j) {
  if (j < 0) throw domain_error("derivative: order must be >= 0");
  if (j == 0) return p;
  const int d = p.degree();
  std::vector<cplx> v(2 * d + 1);
  for (int k = -d; k <= d; ++k) {
    // (i k)^j
    cplx f = std::pow(cplx(0.0, static_cast<double>(k)), j);
    v[k + d] = f * p.coeff(k);
  }
  return TrigPoly(d, std::move(v));
}

cplx eval(const TrigPoly& p, double xi) {
  // Horner in z = exp(i xi) over the shifted algebraic polynomial.
  const cplx z = std::polar(1.0, xi);
  const auto& c = p.raw();
  cplx acc(0.0);
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
  return acc * std::polar(1.0, -p.degree() * xi);
}

std::vector<cplx> eval_grid(const TrigPoly& p, std::size_t M) {
  const int d = p.degree();
  if (M < static_cast<std::size_t>(2 * d + 1))
    throw domain_error("eval_grid: grid must have M >= 2*deg+1 points");
  fft::cvec bins(M, cplx(0.0));
  for (int k = -d; k <= d; ++k) {
    const std::size_t idx = static_cast<std::size_t>((k % static_cast<int>(M) + static_cast<int>(M)) % static_cast<int>(M));
    bins[idx] += p.coeff(k);
  }
  return fft::transform(bins, +1);  // X[m] = sum_k c_k e^{i k 2pi m/M}
}

std::vector<double> eval_grid_real(const TrigPoly& p, std::size_t M) {
  auto v = eval_grid(p, M);
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].real();
  return out;
}

double grid_max_abs(const TrigPoly& p, std::size_t M) {
  auto v = eval_grid(p, M);
  double mx = 0.0;
  for (const cplx& x : v) mx = std::max(mx, std::abs(x));
  return mx;
}

double sup_norm_certified(const TrigPoly& p, std::size_t M) {
  if (!p.real_valued())
    throw domain_error("sup_norm_certified: polynomial must be real-valued");
  const double d = p.degree();
  const double delta = 2.0 * kPi / static_cast<double>(M);
  if (d * delta >= 2.0)
    throw domain_error("sup_norm_certified: grid too coarse (d*delta >= 2)");
  if (p.is_zero()) return 0.0;
  const double gm = grid_max_abs(p, std::max(M, static_cast<std::size_t>(2 * p.degree() + 1)));
  return gm / (1.0 - d * delta / 2.0);
}

double sup_norm_certified(const TrigPoly& p) {
  const std::size_t M = fft::next_pow2(std::max<std::size_t>(64, 16 * std::max(1, p.degree())));
  return sup_norm_certified(p, M);
}

double wrap_angle(double x) {
  const double two_pi = 2.0 * kPi;
  double y = std::fmod(x + kPi, two_pi);
  if (y < 0) y += two_pi;
  y -= kPi;
  if (y >= kPi) y -= two_pi;  // guards fmod edge
  return y;
}

std::vector<cplx> algebraic_roots(const std::vector<cplx>& coeffs) {
  // strip leading/trailing zeros relative to the largest coefficient
  double mx = 0.0;
  for (const cplx& v : coeffs) mx = std::max(mx, std::abs(v));
  if (mx == 0.0) throw domain_error("algebraic_roots: zero polynomial");
  const double thr = 1e-16 * mx;
  std::size_t lo = 0, hi = coeffs.size() - 1;
  while (lo < hi && std::abs(coeffs[lo]) <= thr) ++lo;   // roots at z=0, drop
  while (hi > lo && std::abs(coeffs[hi]) <= thr) --hi;   // degree deflation
  const std::size_t n = hi - lo;
  if (n == 0) return {};
  Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(n, n);
  const cplx lead = coeffs[hi];
  for (std::size_t i = 0; i < n; ++i) C(i, n - 1) = -coeffs[lo + i] / lead;
  for (std::size_t i = 1; i < n; ++i) C(i, i - 1) = cplx(1.0);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success)
    throw numerical_error("algebraic_roots: eigenvalue solver failed");
  std::vector<cplx> roots(n);
  for (std::size_t i = 0; i < n; ++i) roots[i] = es.eigenvalues()(static_cast<Eigen::Index>(i));
  return roots;
}

namespace {

// Cluster circle angles into (angle, multiplicity) pairs.
TorusRootSet cluster_angles(std::vector<double> angles, double cluster_tol) {
  TorusRootSet out;
  out.tolerance = cluster_tol;
  if (angles.empty()) return out;
  std::sort(angles.begin(), angles.end());
  std::vector<std::pair<double, int>> groups;
  for (double a : angles) {
    if (!groups.empty() && a - groups.back().first <= cluster_tol) {
      auto& g = groups.back();
      g.first = (g.first * g.second + a) / (g.second + 1);  // running mean
      g.second += 1;
    } else {
      groups.emplace_back(a, 1);
    }
  }
  // wrap-around merge at +-pi
  if (groups.size() >= 2) {
    auto& first = groups.front();
    auto& last = groups.back();
    if ((first.first + kPi) + (kPi - last.first) <= cluster_tol) {
      const int n = first.second + last.second;
      double mean = (first.first * first.second + (last.first - 2 * kPi) * last.second) / n;
      first.first = wrap_angle(mean);
      first.second = n;
      groups.pop_back();
      std::sort(groups.begin(), groups.end());
    }
  }
  for (auto& [a, m] : groups) out.roots.push_back({a, m});
  return out;
}

// Dense scan of s = |p|^2 for large polynomials: grid minima below threshold,
// refined by parabolic iteration, with multiplicity from a log-log slope fit.
TorusRootSet torus_roots_scan(const TrigPoly& p, const RootOptions& opt) {
  const TrigPoly s = mod_squared(p);
  const int d = s.degree();
  const std::size_t M = fft::next_pow2(std::max<std::size_t>(4096, 16 * static_cast<std::size_t>(d)));
  auto v = eval_grid_real(s, M);
  double vmax = 0.0;
  for (double x : v) vmax = std::max(vmax, x);
  const double scalef = 1.0 + vmax;
  const double h = 2.0 * kPi / static_cast<double>(M);
  // A simple root of p puts the nearest grid sample of s at most at
  // (d*h/4)^2 * max(s); admit such minima generously and let the local
  // refinement plus the final threshold decide.
  const double thr = 1e-10 * scalef;
  const double pre_thr = std::max(thr, 0.02 * scalef);

  std::vector<double> angles;
  std::vector<int> mults;
  for (std::size_t m = 0; m < M; ++m) {
    const double vm = v[m];
    const double vl = v[(m + M - 1) % M], vr = v[(m + 1) % M];
    if (vm > vl || vm > vr) continue;  // not a local min
    if (vm > pre_thr) continue;
    // parabolic refinement on s around the minimum
    double x0 = 2.0 * kPi * static_cast<double>(m) / static_cast<double>(M);
    double step = h;
    double xc = x0;
    for (int it = 0; it < 40 && step > 1e-15; ++it) {
      const double fl = std::abs(eval(s, xc - step).real());
      const double fc = std::abs(eval(s, xc).real());
      const double fr = std::abs(eval(s, xc + step).real());
      const double denom = fl - 2 * fc + fr;
      double shift = 0.0;
      if (denom > 0) shift = 0.5 * (fl - fr) / denom * step;
      if (std::abs(shift) > step) shift = (shift > 0 ? step : -step);
      xc += shift;
      step *= 0.5;
    }
    const double val = std::abs(eval(s, xc).real());
    if (val > thr) continue;
    // multiplicity: slope of log s vs log distance over [4h, 64h]
    int mult = 1;
    const double r_lo = h * 4.0, r_hi = h * 64.0;
    const double s_lo = 0.5 * (std::abs(eval(s, xc + r_lo).real()) + std::abs(eval(s, xc - r_lo).real()));
    const double s_hi = 0.5 * (std::abs(eval(s, xc + r_hi).real()) + std::abs(eval(s, xc - r_hi).real()));
    if (s_hi > s_lo && s_lo > 0) {
      const double slope = (std::log(s_hi) - std::log(s_lo)) / (std::log(r_hi) - std::log(r_lo));
      mult = std::max(1, static_cast<int>(std::lround(slope / 2.0)));
    }
    angles.push_back(wrap_angle(xc));
    mults.push_back(mult);
  }
  // merge refined minima from adjacent grid cells
  TorusRootSet rs;
  rs.tolerance = opt.cluster_tol;
  std::vector<std::size_t> order(angles.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return angles[a] < angles[b]; });
  for (std::size_t i : order) {
    if (!rs.roots.empty() && angles[i] - rs.roots.back().angle <= opt.cluster_tol) {
      rs.roots.back().multiplicity = std::max(rs.roots.back().multiplicity, mults[i]);
    } else {
      rs.roots.push_back({angles[i], mults[i]});
    }
  }
  if (rs.roots.size() >= 2) {
    const auto& first = rs.roots.front();
    const auto& last = rs.roots.back();
    if ((first.angle + kPi) + (kPi - last.angle) <= opt.cluster_tol) {
      rs.roots.front().multiplicity = std::max(first.multiplicity, last.multiplicity);
      rs.roots.pop_back();
    }
  }
  return rs;
}

}  // namespace

TorusRootSet torus_roots(const TrigPoly& p, const RootOptions& opt) {
  if (p.is_zero()) throw domain_error("torus_roots: zero polynomial");
  const int d = p.degree();
  if (d == 0) {
    TorusRootSet rs;
    rs.tolerance = opt.cluster_tol;
    return rs;  // nonzero constant
  }
  if (2 * d > opt.companion_max_degree) return torus_roots_scan(p, opt);

  // z^d p(z): coefficients c_{-d}..c_d as algebraic coefficients 0..2d
  std::vector<cplx> a(p.raw());
  auto roots = algebraic_roots(a);
  std::vector<double> on_circle;
  for (const cplx& z : roots) {
    const double r = std::abs(z);
    if (std::abs(r - 1.0) <= opt.circle_tol) on_circle.push_back(wrap_angle(std::arg(z)));
  }
  auto rs = cluster_angles(std::move(on_circle), opt.cluster_tol);
  return rs;
}

TorusRootSet torus_roots(const TrigPoly& p, double cluster_tol) {
  RootOptions opt;
  opt.cluster_tol = cluster_tol;
  return torus_roots(p, opt);
}

}  // namespace maskframe
