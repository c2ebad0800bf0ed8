#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "epstein/lattice.hpp"
#include "epstein/summation.hpp"

// Closed-form reference values: zeta functions, Dirichlet series and the
// analytic lattice sums used by the benchmark.

namespace epstein::reference {

/// Riemann zeta. Throws DomainError at s = 1.
double riemann_zeta(double s);

/// Hurwitz zeta zeta(s, a) for a > 0, s != 1.
double hurwitz_zeta(double s, double a);

/// zeta(s, a) - zeta(s, b), finite and accurate through s = 1.
double hurwitz_zeta_difference(double s, double a, double b);

double dirichlet_eta(double s);
double dirichlet_lambda(double s);
double dirichlet_beta(double s);

struct DirichletValues {
  double eta;
  double lambda;
  double beta;
};

DirichletValues dirichlet_suite(double s);

enum class CaseId { S1, S2a, S2b, S3a, S3b, S3c, S4, S6, S8 };

struct AnalyticCase {
  CaseId id;
  std::string_view name;
  std::size_t dim;
  std::vector<double> matrix;  // row-major
  RealVector x;
  RealVector y;
  /// Eight-dimensional sums take about a second per evaluation.
  bool slow;

  LatticeMatrix lattice() const;
  bool y_is_zero() const;
};

const std::vector<AnalyticCase>& analytic_cases();
const AnalyticCase& find_case(std::string_view name);
const AnalyticCase& find_case(CaseId id);

/// The case's closed form at nu. Throws DomainError at a pole of the formula.
Complex analytic_value(const AnalyticCase& c, double nu);

struct DirectSum {
  Complex value;
  /// Quadrature error plus a bound on the dropped frequencies.
  double tail_estimate;
  std::size_t terms;
};

/// Brute-force evaluation of sum' e^{-2 pi i y.z} |z - x|^{-nu}, nu > d.
///
/// Terms inside the radius are weighted by an erfc cutoff centred at about
/// half the radius. What the cutoff removes is put back through its Fourier
/// transform at the few reciprocal vectors near -y, computed by radial
/// quadrature. No incomplete gamma function is involved, so this is an
/// independent check on the Crandall evaluation. Throws
/// InsufficientRadiusError when tail_estimate exceeds tolerance.
DirectSum direct_sum_oracle(double nu, const LatticeMatrix& lattice, std::span<const double> x,
                            std::span<const double> y, double radius,
                            double tolerance = std::numeric_limits<double>::infinity());

}  // namespace epstein::reference
