#pragma once

#include <string_view>

// Incomplete gamma functions for real a and x >= 0.
//
// Five evaluation methods cover the (a, x) plane:
//   P_SERIES              power series for P(a,x), used when P < Q
//   Q_SERIES              Taylor split of Q = u + v for a > -1/2, x < 3/2
//   Q_CONTINUED_FRACTION  Legendre continued fraction, modified Lentz
//   Q_TEMME_UNIFORM       uniform asymptotic expansion, a >= 12, 0.3a <= x <= 3a
//   NEGATIVE_RECURRENCE   downward recurrence for a <= -1/2, x < 3/2
//
// All functions reject x < 0 with DomainError.

namespace epstein::gamma {

enum class Region {
  PSeries,
  QSeries,
  QContinuedFraction,
  QTemmeUniform,
  NegativeRecurrence,
};

std::string_view to_string(Region region);

/// Separation point x0 below which the Q-series / recurrence apply.
inline constexpr double kSmallX = 1.5;
/// Temme expansion is used for a >= kTemmeMinA and kTemmeLow*a <= x <= kTemmeHigh*a.
inline constexpr double kTemmeMinA = 12.0;
inline constexpr double kTemmeLow = 0.3;
inline constexpr double kTemmeHigh = 3.0;

struct GammaRequest {
  double a;
  double x;
};

/// Pure function of (a, x); the regions partition the quarter plane x >= 0.
Region select_region(double a, double x);
inline Region select_region(GammaRequest r) { return select_region(r.a, r.x); }

/// P(a, x) = gamma(a, x) / Gamma(a) for a > 0.
double regularized_P(double a, double x);

/// Q(a, x) = Gamma(a, x) / Gamma(a). Defined for every real a; zero where
/// Gamma(a) has a pole. Q(a, 0) = 1 for a > 0.
double regularized_Q(double a, double x);

/// Q(a, x) by a fixed method, bypassing select_region. Used to compare
/// neighbouring methods along region boundaries; the caller keeps (a, x)
/// where the method converges. Requires x > 0.
double regularized_Q_with(Region method, double a, double x);

/// Upper incomplete gamma Gamma(a, x). Throws DomainError for a <= 0, x = 0.
double upper_gamma(double a, double x);

/// x^{-a} Gamma(a, x), the kernel of the upper Crandall function. Finite at
/// x = 0 only for a < 0, where it equals -1/a; +inf for a >= 0, x = 0.
double upper_gamma_scaled(double a, double x);

/// Tricomi's gamma*(a, x) = gamma(a, x) / (x^a Gamma(a)), entire in both
/// arguments: gamma*(a, 0) = 1/Gamma(a+1), gamma*(-n, x) = x^n.
double gamma_star(double a, double x);

/// 1/Gamma(a), entire; exactly zero at non-positive integers.
double rgamma(double a);

/// sin(pi x) with exact zeros at the integers.
double sinpi(double x);

}  // namespace epstein::gamma
