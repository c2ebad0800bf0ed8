#include <doctest.h>

#include <vector>

#include "epstein/summation.hpp"

using namespace epstein;

TEST_CASE("compensated sum recovers cancelled terms") {
  const std::vector<double> v{1e16, 1.0, -1e16};
  CHECK(kahan_sum(v) == 1.0);
  const std::vector<double> w{1.0, 1e100, 1.0, -1e100};
  CHECK(kahan_sum(w) == 2.0);
}

TEST_CASE("compensated sum of many small terms") {
  std::vector<double> v(1'000'000, 0.1);
  CHECK(kahan_sum(v) == doctest::Approx(100000.0).epsilon(1e-15));
}

TEST_CASE("complex compensated sum") {
  const std::vector<Complex> v{{1e16, -1e16}, {1.0, 2.0}, {-1e16, 1e16}};
  const Complex s = kahan_sum(v);
  CHECK(s.real() == 1.0);
  CHECK(s.imag() == 2.0);
}
