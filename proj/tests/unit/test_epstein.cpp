#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <thread>
#include <vector>

#include "checks.hpp"
#include "epstein/epstein_zeta.hpp"
#include "epstein/errors.hpp"
#include "epstein/incomplete_gamma.hpp"
#include "epstein/reference.hpp"
#include "test_support.hpp"

using namespace epstein;
using std::numbers::pi;

namespace {

const std::vector<double> zero1{0.0}, zero2{0.0, 0.0}, zero3{0.0, 0.0, 0.0};

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

TEST_CASE("Madelung constant") {
  const std::vector<double> half{0.5, 0.5, 0.5};
  const Complex z = epstein_zeta(1.0, LatticeMatrix::identity(3), zero3, half);
  CHECK(testing::rel_err(z.real(), -1.7475645946331821906) <= 1e-14);
  CHECK(std::fabs(z.imag()) < 1e-15);
}

TEST_CASE("one-dimensional sums") {
  const auto z1 = LatticeMatrix::identity(1);
  CHECK(epstein_zeta(2.0, z1, zero1, zero1).real() ==
        doctest::Approx(pi * pi / 3).epsilon(1e-15));
  const std::vector<double> mhalf{-0.5};
  for (double nu : {-3.3, 0.5, 1.5, 4.0, 9.1}) {
    const double want = 2.0 * reference::hurwitz_zeta(nu, 0.5);
    INFO("nu=" << nu);
    CHECK(testing::rel_err(epstein_zeta(nu, z1, mhalf, zero1).real(), want) < 1e-13);
  }
}

TEST_CASE("special cases") {
  const auto lat = LatticeMatrix::from_row_major(2, std::vector<double>{1.1, 0.2, -0.1, 0.9});
  const std::vector<double> x{0.3, -0.2}, y{0.15, 0.4};
  CHECK(epstein_zeta(-4.0, lat, x, y) == Complex(0.0, 0.0));
  CHECK(epstein_zeta(-2.0, lat, x, y) == Complex(0.0, 0.0));
  CHECK(epstein_zeta(0.0, lat, x, y) == Complex(0.0, 0.0));

  // nu = 0 with x on the lattice: -e^{-2 pi i x.y}
  const auto on = lat.apply(std::vector<double>{2.0, -1.0});
  const Complex z0 = epstein_zeta(0.0, lat, on, y);
  const Complex want = -std::polar(1.0, -2.0 * pi * dot(on, y));
  CHECK(std::abs(z0 - want) < 1e-14);

  // pole at nu = d with y in the reciprocal lattice
  const auto k = lat.apply_inverse_transpose(std::vector<double>{1.0, 3.0});
  CHECK(std::isnan(epstein_zeta(2.0, lat, x, k).real()));
  CHECK(is_pole(evaluate({2.0, lat, x, k})));
  CHECK_FALSE(is_pole(evaluate({2.0, lat, x, y})));
}

TEST_CASE("input validation") {
  const auto lat = LatticeMatrix::identity(2);
  CHECK_THROWS_AS(epstein_zeta(1.0, lat, zero3, zero2), InvalidLatticeError);
  CHECK_THROWS_AS(epstein_zeta(1.0, lat, zero2, zero1), InvalidLatticeError);
  CHECK_THROWS_AS(epstein_zeta(1.0, LatticeMatrix::identity(11), std::vector<double>(11),
                               std::vector<double>(11)),
                  UnsupportedDimensionError);
  EvalOptions tiny;
  tiny.max_points = 5;
  CHECK_THROWS_AS(evaluate({1.5, lat, zero2, zero2}, tiny), ResourceLimitError);

  const std::vector<double> k{1.0, 0.0};
  CHECK_THROWS_AS(epstein_zeta_reg(1.5, lat, zero2, k), DomainError);
}

TEST_CASE("evaluation statistics") {
  EvalStats stats;
  evaluate({1.0, LatticeMatrix::identity(3), zero3, zero3}, {}, &stats);
  CHECK(stats.plan.r0 == 4.0);
  CHECK(stats.direct_terms > 100);
  CHECK(stats.reciprocal_terms > 100);
}

TEST_CASE("regularised function at y = 0") {
  std::mt19937_64 rng(21);
  for (std::size_t d = 1; d <= 3; ++d) {
    const auto lat = testing::random_lattice(rng, d);
    const auto x = testing::random_vector(rng, d);
    const std::vector<double> y(d, 0.0);
    for (double nu : {-3.7, 0.4, 1.3, 5.6}) {
      INFO("d=" << d << " nu=" << nu);
      const Complex a = epstein_zeta(nu, lat, x, y);
      const Complex b = epstein_zeta_reg(nu, lat, x, y);
      CHECK(testing::rel_err(b, a) < 1e-13);
    }
    // the pole at nu = d is removed
    CHECK(std::isfinite(epstein_zeta_reg(static_cast<double>(d), lat, x, y).real()));
  }
}

TEST_CASE("regularised function is continuous through y = 0") {
  const auto lat = LatticeMatrix::identity(1);
  const std::vector<double> x{0.0};
  double prev = epstein_zeta_reg(0.5, lat, x, std::vector<double>{-0.5}).real();
  double max_jump = 0.0;
  for (int i = -49; i <= 50; ++i) {
    const double v = epstein_zeta_reg(0.5, lat, x, std::vector<double>{i / 100.0}).real();
    REQUIRE(std::isfinite(v));
    max_jump = std::max(max_jump, std::fabs(v - prev));
    prev = v;
  }
  CHECK(max_jump < 0.05);
}

TEST_CASE("regularised function reconstructed from the plain one") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 20; ++i) {
    const auto lat = testing::random_lattice(rng, 2);
    const auto x = testing::random_vector(rng, 2);
    const auto y = testing::random_vector(rng, 2, -0.6, 0.6);
    const double nu = 2.3;
    const Complex z = epstein_zeta(nu, lat, x, y);
    const Complex phase = std::polar(1.0, 2.0 * pi * dot(x, y));
    const Complex want = phase * z - power_law_transform(2, nu, y) / lat.volume();
    CHECK(testing::rel_err(epstein_zeta_reg(nu, lat, x, y), want) < 1e-12);
  }
}

TEST_CASE("symmetries on random instances") {
  const auto r = checks::symmetry_suite(500, 20240601);
  for (const auto* m : {&r.inversion, &r.translation, &r.scaling, &r.functional_equation}) {
    INFO(m->name << ": " << m->worst << " at " << m->where);
    CHECK(m->worst <= 1e-12);
  }
}

TEST_CASE("functional equation at fixed exponents") {
  std::mt19937_64 rng(99);
  for (std::size_t d = 1; d <= 3; ++d) {
    for (double nu : {0.7, 2.4}) {
      const auto lat = testing::random_lattice(rng, d);
      const auto x = testing::random_vector(rng, d);
      const auto y = testing::random_vector(rng, d);
      auto form = [](double n, const LatticeMatrix& l, std::span<const double> a,
                     std::span<const double> b) {
        const double dd = static_cast<double>(l.dim());
        const double pre = std::pow(std::pow(l.volume(), 2.0 / dd) / pi, n / 2.0) *
                           gamma::rgamma((dd - n) / 2.0);
        return pre * std::polar(1.0, pi * dot(a, b)) * epstein_zeta(n, l, a, b);
      };
      std::vector<double> mx(x);
      for (double& c : mx) c = -c;
      const Complex lhs = form(nu, lat, x, y);
      const Complex rhs = form(static_cast<double>(d) - nu, lat.reciprocal(), y, mx);
      INFO("d=" << d << " nu=" << nu);
      CHECK(testing::rel_err(lhs, rhs) < 1e-11);
    }
  }
}

TEST_CASE("rescaling the lattice") {
  const auto lat = LatticeMatrix::from_row_major(3, std::vector<double>{
                                                        1.0, 0.3, 0.0, 0.1, 0.8, 0.2, 0.0, -0.2, 1.3});
  const std::vector<double> x{0.1, 0.7, -0.3}, y{0.2, 0.05, 0.45};
  for (double c : {0.25, 3.0, 17.0}) {
    for (double nu : {-2.5, 1.0, 4.5}) {
      std::vector<double> cx(x), yc(y);
      for (double& e : cx) e *= c;
      for (double& e : yc) e /= c;
      const Complex scaled = std::pow(c, nu) * epstein_zeta(nu, lat.scaled(c), cx, yc);
      CHECK(testing::rel_err(scaled, epstein_zeta(nu, lat, x, y)) < 1e-12);
    }
  }
}

TEST_CASE("residue at the pole nu = d") {
  for (std::size_t d : {1u, 2u}) {
    std::mt19937_64 rng(d);
    const auto lat = testing::random_lattice(rng, d);
    const auto x = testing::random_vector(rng, d);
    const std::vector<double> y(d, 0.0);
    const double dd = static_cast<double>(d);
    auto r = [&](double h) { return h * epstein_zeta(dd + h, lat, x, y).real(); };
    // r(h) = R + c h + O(h^2); two Richardson steps
    const double h = 1e-2;
    const double r1 = 2.0 * r(h / 2) - r(h);
    const double r2 = 2.0 * r(h / 4) - r(h / 2);
    const double est = (4.0 * r2 - r1) / 3.0;
    const double want = 2.0 * std::pow(pi, dd / 2.0) / (std::tgamma(dd / 2.0) * lat.volume());
    INFO("d=" << d);
    CHECK(est == doctest::Approx(want).epsilon(1e-6));
  }
}

TEST_CASE("one-dimensional continuity in nu") {
  const auto lat = LatticeMatrix::identity(1);
  const std::vector<double> x{0.31}, y{0.17};
  for (double nu : {-4.0, -2.0, 0.0, 2.0, 3.0}) {
    const Complex a = epstein_zeta(nu - 1e-7, lat, x, y);
    const Complex b = epstein_zeta(nu + 1e-7, lat, x, y);
    const Complex c = epstein_zeta(nu, lat, x, y);
    INFO("nu=" << nu);
    CHECK(std::abs(a - c) < 1e-5);
    CHECK(std::abs(b - c) < 1e-5);
  }
}

TEST_CASE("analytic cases at sample exponents") {
  for (const auto& c : reference::analytic_cases()) {
    if (c.slow) continue;
    const auto lat = c.lattice();
    for (double nu : {-7.3, -0.6, 0.9, 2.2, 6.7}) {
      Complex want;
      try {
        want = reference::analytic_value(c, nu);
      } catch (const DomainError&) {
        continue;
      }
      const auto got = evaluate({nu, lat, c.x, c.y});
      REQUIRE_FALSE(is_pole(got));
      INFO(c.name << " nu=" << nu);
      CHECK(testing::bench_err(std::get<Complex>(got), want) < 5e-13);
    }
  }
}

TEST_CASE("independent direct sums") {
  const auto m = checks::direct_sum_agreement(12, 4242);
  INFO(m.worst << " at " << m.where);
  CHECK(m.ok());
}

TEST_CASE("thread safety") {
  // the point caches are per thread; run the same query from two threads
  const auto lat = LatticeMatrix::identity(3);
  const std::vector<double> half{0.5, 0.5, 0.5};
  Complex a, b;
  std::thread t1([&] { a = epstein_zeta(1.0, lat, zero3, half); });
  std::thread t2([&] { b = epstein_zeta(1.3, lat, zero3, half); });
  t1.join();
  t2.join();
  CHECK(a == epstein_zeta(1.0, lat, zero3, half));
  CHECK(b == epstein_zeta(1.3, lat, zero3, half));
}
