#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <string>
#include <vector>

#include "epstein/lattice.hpp"

namespace testing {

inline double rel_err(double got, double want) {
  if (want == 0.0) return std::fabs(got);
  return std::fabs(got - want) / std::fabs(want);
}

inline double rel_err(std::complex<double> got, std::complex<double> want) {
  const double m = std::abs(want);
  return m == 0.0 ? std::abs(got) : std::abs(got - want) / m;
}

// min(E_abs, E_rel), the benchmark metric
inline double bench_err(std::complex<double> got, std::complex<double> want) {
  const double a = std::abs(got - want);
  const double m = std::abs(want);
  return m > 0.0 ? std::min(a, a / m) : a;
}

// Random lattice near the identity with condition number kept modest.
inline epstein::LatticeMatrix random_lattice(std::mt19937_64& rng, std::size_t d,
                                             double spread = 0.35) {
  std::uniform_real_distribution<double> u(-spread, spread);
  std::uniform_real_distribution<double> scale(0.6, 1.7);
  std::vector<double> a(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) a[i * d + j] = (i == j ? 1.0 : 0.0) + u(rng);
  }
  const double s = scale(rng);
  for (double& v : a) v *= s;
  return epstein::LatticeMatrix::from_row_major(d, a);
}

inline epstein::RealVector random_vector(std::mt19937_64& rng, std::size_t d, double lo = -1.0,
                                         double hi = 1.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  epstein::RealVector v(d);
  for (double& e : v) e = u(rng);
  return v;
}

}  // namespace testing
