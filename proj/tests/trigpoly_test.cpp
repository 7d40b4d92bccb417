#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "maskframe/errors.hpp"
#include "maskframe/trigpoly.hpp"

using namespace maskframe;

namespace {

constexpr double kPi = std::numbers::pi;

TrigPoly half_one_plus_e() {
  // (1 + e^{i xi})/2
  std::vector<cplx> v = {cplx(0.0), cplx(0.5), cplx(0.5)};
  return TrigPoly(1, v);
}

std::mt19937 rng(20240517);

TrigPoly random_poly(int max_deg, bool real = false) {
  std::uniform_int_distribution<int> dd(0, max_deg);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const int d = dd(rng);
  std::vector<cplx> v(2 * d + 1);
  for (auto& c : v) c = cplx(u(rng), u(rng));
  TrigPoly p(d, v);
  return real ? p.symmetrized() : p;
}

}  // namespace

TEST_CASE("eval basics") {
  CHECK(eval(TrigPoly::constant(1.0), 0.37).real() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(eval(TrigPoly::cosine(1), 0.0).real() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(eval(half_one_plus_e(), kPi)) < 1e-14);
}

TEST_CASE("mul: binomial square of (1+e^{i xi})/2") {
  auto sq = mul(half_one_plus_e(), half_one_plus_e());
  CHECK(sq.degree() == 2);
  CHECK(std::abs(sq.coeff(0) - cplx(0.25)) < 1e-15);
  CHECK(std::abs(sq.coeff(1) - cplx(0.5)) < 1e-15);
  CHECK(std::abs(sq.coeff(2) - cplx(0.25)) < 1e-15);
  CHECK(std::abs(sq.coeff(-1)) < 1e-15);
}

TEST_CASE("mul identities") {
  auto p = random_poly(7);
  CHECK(mul(p, TrigPoly::zero()).is_zero());
  auto q = mul(p, TrigPoly::constant(1.0));
  CHECK(q.degree() == p.degree());
  for (int k = -p.degree(); k <= p.degree(); ++k)
    CHECK(std::abs(q.coeff(k) - p.coeff(k)) < 1e-15);
}

TEST_CASE("reflect_pi") {
  auto r = reflect_pi(half_one_plus_e());
  CHECK(std::abs(r.coeff(0) - cplx(0.5)) < 1e-15);
  CHECK(std::abs(r.coeff(1) - cplx(-0.5)) < 1e-15);

  auto c = TrigPoly::cosine(1);
  auto rc = reflect_pi(c);
  CHECK(std::abs(rc.coeff(1) + 0.5) < 1e-15);  // -cos

  auto p = random_poly(9);
  auto rr = reflect_pi(reflect_pi(p));
  for (int k = -p.degree(); k <= p.degree(); ++k)
    CHECK(std::abs(rr.coeff(k) - p.coeff(k)) < 1e-15);
}

TEST_CASE("conj_poly") {
  auto e1 = TrigPoly::monomial(1, 1.0);
  auto ce = conj_poly(e1);
  CHECK(std::abs(ce.coeff(-1) - cplx(1.0)) < 1e-15);
  CHECK(std::abs(ce.coeff(1)) < 1e-15);

  auto p = random_poly(6, /*real=*/true);
  auto cp = conj_poly(p);
  for (int k = -p.degree(); k <= p.degree(); ++k)
    CHECK(std::abs(cp.coeff(k) - p.coeff(k)) < 1e-12);

  auto ic = TrigPoly::constant(cplx(0.0, 2.0));
  CHECK(std::abs(conj_poly(ic).coeff(0) - cplx(0.0, -2.0)) < 1e-15);

  // involution
  auto q = random_poly(8);
  auto qq = conj_poly(conj_poly(q));
  for (int k = -q.degree(); k <= q.degree(); ++k)
    CHECK(std::abs(qq.coeff(k) - q.coeff(k)) < 1e-15);
}

TEST_CASE("mod_squared closed forms") {
  auto u = mod_squared(TrigPoly::monomial(1, 1.0));
  CHECK(u.degree() == 0);
  CHECK(std::abs(u.coeff(0) - cplx(1.0)) < 1e-15);

  // |(1+e^{i xi})/2|^2 = 1/2 + cos(xi)/2
  auto m = mod_squared(half_one_plus_e());
  CHECK(std::abs(m.coeff(0) - cplx(0.5)) < 1e-15);
  CHECK(std::abs(m.coeff(1) - cplx(0.25)) < 1e-15);
  CHECK(std::abs(m.coeff(-1) - cplx(0.25)) < 1e-15);

  // |cos|^2 = (1 + cos 2xi)/2
  auto c2 = mod_squared(TrigPoly::cosine(1));
  CHECK(std::abs(c2.coeff(0) - cplx(0.5)) < 1e-15);
  CHECK(std::abs(c2.coeff(2) - cplx(0.25)) < 1e-15);

  CHECK(mod_squared(random_poly(11)).real_valued(1e-14));
}

TEST_CASE("derivative") {
  auto dc = derivative(TrigPoly::cosine(1), 1);
  CHECK(std::abs(eval(dc, 0.0)) < 1e-15);
  CHECK(derivative(TrigPoly::constant(3.0), 2).is_zero());
  auto d2 = derivative(TrigPoly::monomial(2, 1.0), 2);
  CHECK(std::abs(d2.coeff(2) - cplx(-4.0)) < 1e-15);
}

TEST_CASE("sup_norm_certified") {
  CHECK(sup_norm_certified(TrigPoly::constant(1.0), 64) == doctest::Approx(1.0));
  const double b = sup_norm_certified(TrigPoly::cosine(1), 64);
  CHECK(b >= 1.0);
  CHECK(b <= 1.0 / (1.0 - std::numbers::pi / 64) + 1e-12);  // ~1.0516
  CHECK(sup_norm_certified(TrigPoly::zero(), 64) == 0.0);
  CHECK_THROWS_AS(sup_norm_certified(TrigPoly::cosine(40), 64), domain_error);
}

TEST_CASE("torus_roots closed forms") {
  // 1 + e^{i xi}: simple root at pi
  TrigPoly p(1, {cplx(0.0), cplx(1.0), cplx(1.0)});
  auto rs = torus_roots(p);
  REQUIRE(rs.roots.size() == 1);
  CHECK(std::abs(std::abs(rs.roots[0].angle) - kPi) < 1e-8);
  CHECK(rs.roots[0].multiplicity == 1);

  // (1 + cos)/2: double root at pi
  auto q = add(TrigPoly::constant(0.5), TrigPoly::cosine(1, 0.5));
  auto rq = torus_roots(q);
  REQUIRE(rq.roots.size() == 1);
  CHECK(std::abs(std::abs(rq.roots[0].angle) - kPi) < 1e-6);
  CHECK(rq.roots[0].multiplicity == 2);

  // cos: +-pi/2
  auto rc = torus_roots(TrigPoly::cosine(1));
  REQUIRE(rc.roots.size() == 2);
  CHECK(rc.roots[0].angle == doctest::Approx(-kPi / 2).epsilon(1e-10));
  CHECK(rc.roots[1].angle == doctest::Approx(kPi / 2).epsilon(1e-10));

  CHECK_THROWS_AS(torus_roots(TrigPoly::zero()), domain_error);
}

TEST_CASE("property: ring homomorphism under eval") {
  for (int rep = 0; rep < 20; ++rep) {
    auto p = random_poly(10), q = random_poly(10);
    auto pq = mul(p, q);
    std::uniform_real_distribution<double> u(-kPi, kPi);
    for (int i = 0; i < 100; ++i) {
      const double xi = u(rng);
      const cplx lhs = eval(pq, xi);
      const cplx rhs = eval(p, xi) * eval(q, xi);
      CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + p.coeff_sum()) * (1.0 + q.coeff_sum()));
    }
  }
}

TEST_CASE("property: coefficient Parseval on the grid") {
  for (int rep = 0; rep < 20; ++rep) {
    auto p = random_poly(16);
    const std::size_t M = 64;  // > 2*16
    auto v = eval_grid(p, M);
    double mean = 0.0;
    for (const auto& x : v) mean += std::norm(x);
    mean /= static_cast<double>(M);
    double ssq = 0.0;
    for (int k = -p.degree(); k <= p.degree(); ++k) ssq += std::norm(p.coeff(k));
    CHECK(std::abs(mean - ssq) < 1e-12 * (1.0 + ssq));
  }
}

TEST_CASE("property: roots of product = union of root sets") {
  // random small-degree polynomials with well-separated circle roots
  std::uniform_real_distribution<double> u(-kPi, kPi);
  for (int rep = 0; rep < 10; ++rep) {
    std::vector<double> ap = {u(rng), u(rng)};
    std::vector<double> aq = {u(rng)};
    bool separated = true;
    std::vector<double> all = {ap[0], ap[1], aq[0]};
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i + 1; j < all.size(); ++j)
        if (std::abs(all[i] - all[j]) < 1e-2) separated = false;
    if (!separated) continue;
    auto lin = [](double a) {
      // e^{i xi} - e^{i a}: root exactly at a
      return TrigPoly(1, {cplx(0.0), cplx(-std::polar(1.0, a)), cplx(1.0)});
    };
    auto p = mul(lin(ap[0]), lin(ap[1]));
    auto q = lin(aq[0]);
    auto rs = torus_roots(mul(p, q));
    REQUIRE(rs.roots.size() == 3);
    std::sort(all.begin(), all.end());
    for (std::size_t i = 0; i < 3; ++i)
      CHECK(std::abs(rs.roots[i].angle - all[i]) < 1e-6);
  }
}

TEST_CASE("property: certified sup-norm dominates finer grid max") {
  for (int rep = 0; rep < 20; ++rep) {
    auto p = random_poly(30, /*real=*/true);
    if (p.is_zero()) continue;
    const double bound = sup_norm_certified(p);
    const std::size_t fine = 16 * 1024;
    const double finer = grid_max_abs(p, fine);
    CHECK(bound >= finer - 1e-12);
  }
}

TEST_CASE("high-degree scan route finds planted roots") {
  // (e^{i xi} - e^{i a})(e^{i xi} - e^{i b}) * (dense positive bulk)
  auto lin = [](double a) {
    return TrigPoly(1, {cplx(0.0), cplx(-std::polar(1.0, a)), cplx(1.0)});
  };
  TrigPoly bulk = TrigPoly::constant(2.0);
  bulk = add(bulk, TrigPoly::cosine(200, 0.3));
  bulk = add(bulk, TrigPoly::sine(571, 0.2));  // degree 571, stays positive
  auto p = mul(mul(lin(0.8), lin(-2.0)), bulk);
  RootOptions opt;
  opt.companion_max_degree = 64;  // force the scan route
  auto rs = torus_roots(p, opt);
  REQUIRE(rs.roots.size() == 2);
  CHECK(std::abs(rs.roots[0].angle + 2.0) < 1e-6);
  CHECK(std::abs(rs.roots[1].angle - 0.8) < 1e-6);
}
