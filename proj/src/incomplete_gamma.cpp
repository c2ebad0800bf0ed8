#include "epstein/incomplete_gamma.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "epstein/errors.hpp"
#include "temme_coefficients.hpp"

namespace epstein::gamma {
namespace {

constexpr double kEps = 1e-17;
constexpr int kMaxTerms = 10'000;
constexpr double kLentzTol = 3e-16;
constexpr double kTiny = 1e-300;

// Taylor coefficients of 1/Gamma(1+t) about t = 0.
constexpr std::array<double, 29> kRecipGamma1 = {
    1.0,
    5.77215664901532860607e-1,
    -6.55878071520253881077e-1,
    -4.2002635034095235529e-2,
    1.66538611382291489502e-1,
    -4.21977345555443367482e-2,
    -9.62197152787697356211e-3,
    7.2189432466630995424e-3,
    -1.16516759185906511211e-3,
    -2.15241674114950972816e-4,
    1.28050282388116186153e-4,
    -2.01348547807882386557e-5,
    -1.25049348214267065735e-6,
    1.13302723198169588237e-6,
    -2.05633841697760710345e-7,
    6.11609510448141581786e-9,
    5.00200764446922293006e-9,
    -1.18127457048702014459e-9,
    1.04342671169110051049e-10,
    7.78226343990507125405e-12,
    -3.69680561864220570819e-12,
    5.10037028745447597902e-13,
    -2.05832605356650678322e-14,
    -5.34812253942301798237e-15,
    1.22677862823826079016e-15,
    -1.18125930169745876951e-16,
    1.18669225475160033258e-18,
    1.41238065531803178156e-18,
    -2.29874568443537020659e-19,
};

void check_x(double a, double x) {
  if (!(x >= 0.0) || !std::isfinite(a)) {
    throw DomainError("incomplete gamma: need finite a and x >= 0, got a=" + std::to_string(a) +
                      ", x=" + std::to_string(x));
  }
}

bool is_nonpositive_integer(double a) { return a <= 0.0 && a == std::floor(a); }

// (Gamma(1+a) - 1) / a without cancellation for small |a|.
double gam1(double a) {
  if (std::fabs(a) <= 0.5) {
    double h = 0.0;
    for (std::size_t k = kRecipGamma1.size() - 1; k >= 1; --k) h = h * a + kRecipGamma1[k];
    return -h / (1.0 + a * h);
  }
  return (std::tgamma(1.0 + a) - 1.0) / a;
}

// log(1+m) - m
double log1pmx(double m) {
  if (std::fabs(m) > 0.5) return std::log1p(m) - m;
  double sum = 0.0;
  double p = m;
  for (int n = 2; n < 200; ++n) {
    p *= -m;
    const double term = p / n;
    sum += term;
    if (std::fabs(term) < kEps * std::fabs(sum)) break;
  }
  return sum;
}

// lgamma(a+1) - (a+1/2) ln a + a - ln(2 pi)/2, for a >= 10.
double stirling_error(double a) {
  constexpr std::array<double, 10> c = {
      1.0 / 12,         -1.0 / 360,         1.0 / 1260,      -1.0 / 1680,
      1.0 / 1188,       -691.0 / 360360,    1.0 / 156,       -3617.0 / 122400,
      43867.0 / 244188, -174611.0 / 125400,
  };
  const double inv = 1.0 / a;
  const double inv2 = inv * inv;
  double s = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) s = s * inv2 + c[k];
  return s * inv;
}

// log(x^a e^{-x} / Gamma(a+1)) for a > 0, x > 0.
double log_prefix(double a, double x) {
  if (a >= 10.0) {
    const double mu = (x - a) / a;
    // 1 + mu loses digits once x is far from a
    const double main = std::fabs(mu) > 0.5 ? a * std::log(x / a) - (x - a) : a * log1pmx(mu);
    return main - stirling_error(a) - 0.5 * std::log(2.0 * std::numbers::pi * a);
  }
  return a * std::log(x) - x - std::lgamma(a + 1.0);
}

// x^a e^{-x} / Gamma(a+1) for a > 0.
double prefix(double a, double x) {
  if (x == 0.0) return 0.0;
  const double alnx = a * std::log(x);
  if (a < 170.0 && std::fabs(alnx) < 700.0 && x < 700.0) {
    return std::pow(x, a) * std::exp(-x) * rgamma(a + 1.0);
  }
  return std::exp(log_prefix(a, x));
}

// x^a e^{-x} for any real a, x > 0.
double power_exp(double a, double x) {
  const double alnx = a * std::log(x);
  if (std::fabs(alnx) < 700.0 && x < 700.0) return std::pow(x, a) * std::exp(-x);
  return std::exp(alnx - x);
}

double p_series_sum(double a, double x) {
  double sum = 1.0;
  double term = 1.0;
  for (int n = 1; n < kMaxTerms; ++n) {
    term *= x / (a + n);
    sum += term;
    if (term < kEps * sum) return sum;
  }
  throw NumericalFailure("incomplete gamma: P series did not converge");
}

// Gamma(a, x) for -1/2 < a < 3/2 and 0 < x < 3/2.
double upper_gamma_small_x(double a, double x) {
  const double lnx = std::log(x);
  const double one_minus_xa = (a == 0.0) ? -lnx : -std::expm1(a * lnx) / a;
  double s = 0.0;
  double p = 1.0;
  for (int n = 1; n < kMaxTerms; ++n) {
    p *= -x / n;
    const double term = p / (a + n);
    s += term;
    if (std::fabs(term) < kEps * std::fabs(s)) break;
    if (n == kMaxTerms - 1) throw NumericalFailure("incomplete gamma: Q series did not converge");
  }
  return gam1(a) + one_minus_xa - std::exp(a * lnx) * s;
}

// e^x x^{-a} Gamma(a, x) via the even part of Legendre's continued fraction.
double legendre_cf(double a, double x) {
  double f = x + 1.0 - a;
  if (f == 0.0) f = kTiny;
  double c = f;
  double d = 0.0;
  for (int n = 1; n <= kMaxTerms; ++n) {
    const double an = -n * (n - a);
    const double bn = x + 2.0 * n + 1.0 - a;
    d = bn + an * d;
    if (d == 0.0) d = kTiny;
    c = bn + an / c;
    if (c == 0.0) c = kTiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::fabs(delta - 1.0) < kLentzTol) return 1.0 / f;
  }
  throw NumericalFailure("incomplete gamma: continued fraction did not converge for a=" +
                         std::to_string(a) + ", x=" + std::to_string(x));
}

// e^x x^{-a} Gamma(a, x) for a <= -1/2, 0 < x < 3/2, by downward recurrence
// from the small-|a| series.
double negative_recurrence(double a, double x) {
  const double n = std::max(1.0, std::floor(-a + 0.5));
  const double eps = a + n;
  double g = std::exp(x - eps * std::log(x)) * upper_gamma_small_x(eps, x);
  for (double m = 1.0; m <= n; m += 1.0) g = (1.0 - x * g) / (m - eps);
  return g;
}

double eval_poly(std::span<const double> c, double t) {
  double s = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) s = s * t + c[k];
  return s;
}

struct TemmeParts {
  double erfc_half;  // erfc(+-eta sqrt(a/2)) / 2
  double tail;       // e^{-a eta^2/2}/sqrt(2 pi a) * sum c_k a^-k
};

TemmeParts temme(double a, double x, bool for_p) {
  const double mu = (x - a) / a;
  const double half_eta2 = -log1pmx(mu);
  double eta = std::sqrt(2.0 * std::max(half_eta2, 0.0));
  if (mu < 0.0) eta = -eta;

  using namespace epstein::detail;
  const std::array<std::span<const double>, 13> table = {
      kTemmeC0, kTemmeC1, kTemmeC2, kTemmeC3,  kTemmeC4,  kTemmeC5, kTemmeC6,
      kTemmeC7, kTemmeC8, kTemmeC9, kTemmeC10, kTemmeC11, kTemmeC12,
  };
  const double inv_a = 1.0 / a;
  double sum = 0.0;
  for (std::size_t k = table.size(); k-- > 0;) sum = sum * inv_a + eval_poly(table[k], eta);

  const double arg = eta * std::sqrt(0.5 * a);
  TemmeParts out;
  out.erfc_half = 0.5 * std::erfc(for_p ? -arg : arg);
  out.tail = std::exp(-a * half_eta2) / std::sqrt(2.0 * std::numbers::pi * a) * sum;
  return out;
}

double temme_q(double a, double x) {
  const auto t = temme(a, x, false);
  return t.erfc_half + t.tail;
}

double temme_p(double a, double x) {
  const auto t = temme(a, x, true);
  return t.erfc_half - t.tail;
}

}  // namespace

std::string_view to_string(Region region) {
  switch (region) {
    case Region::PSeries:
      return "P_SERIES";
    case Region::QSeries:
      return "Q_SERIES";
    case Region::QContinuedFraction:
      return "Q_CONTINUED_FRACTION";
    case Region::QTemmeUniform:
      return "Q_TEMME_UNIFORM";
    case Region::NegativeRecurrence:
      return "NEGATIVE_RECURRENCE";
  }
  return "UNKNOWN";
}

Region select_region(double a, double x) {
  if (a >= kTemmeMinA && x >= kTemmeLow * a && x <= kTemmeHigh * a) return Region::QTemmeUniform;
  if (a > 0.0 && a < 0.5 && x < std::exp2(1.0 - 1.0 / a)) return Region::PSeries;
  if (a >= 0.5 && x < a) return Region::PSeries;
  if (x < kSmallX) return a > -0.5 ? Region::QSeries : Region::NegativeRecurrence;
  return Region::QContinuedFraction;
}

double sinpi(double x) {
  if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
  double r = std::fmod(x, 2.0);
  if (r < -1.0) r += 2.0;
  if (r > 1.0) r -= 2.0;
  if (r == 0.0 || r == 1.0 || r == -1.0) return 0.0;
  if (r > 0.5) r = 1.0 - r;
  if (r < -0.5) r = -1.0 - r;
  return std::sin(std::numbers::pi * r);
}

double rgamma(double a) {
  if (std::isnan(a)) return a;
  if (is_nonpositive_integer(a)) return 0.0;
  if (a >= 0.5) {
    if (a > 170.0) return std::exp(-std::lgamma(a));
    return 1.0 / std::tgamma(a);
  }
  const double b = 1.0 - a;
  const double g = b > 170.0 ? std::exp(std::lgamma(b)) : std::tgamma(b);
  return sinpi(a) * g / std::numbers::pi;
}

double regularized_P(double a, double x) {
  check_x(a, x);
  if (!(a > 0.0)) throw DomainError("regularized_P: need a > 0");
  if (x == 0.0) return 0.0;
  switch (select_region(a, x)) {
    case Region::PSeries:
      return prefix(a, x) * p_series_sum(a, x);
    case Region::QTemmeUniform:
      return temme_p(a, x);
    default:
      return 1.0 - regularized_Q(a, x);
  }
}

double regularized_Q(double a, double x) {
  check_x(a, x);
  if (x == 0.0) {
    if (a > 0.0) return 1.0;
    throw DomainError("regularized_Q: Gamma(a, 0) diverges for a <= 0");
  }
  if (std::isinf(x)) return 0.0;
  return regularized_Q_with(select_region(a, x), a, x);
}

double regularized_Q_with(Region method, double a, double x) {
  check_x(a, x);
  if (!(x > 0.0)) throw DomainError("regularized_Q_with: need x > 0");
  switch (method) {
    case Region::PSeries:
      return 1.0 - prefix(a, x) * p_series_sum(a, x);
    case Region::QTemmeUniform:
      return temme_q(a, x);
    case Region::QSeries:
      return upper_gamma_small_x(a, x) * rgamma(a);
    case Region::NegativeRecurrence:
      return rgamma(a) * power_exp(a, x) * negative_recurrence(a, x);
    case Region::QContinuedFraction:
      if (a > 0.0) return a * prefix(a, x) * legendre_cf(a, x);
      return rgamma(a) * power_exp(a, x) * legendre_cf(a, x);
  }
  return std::numeric_limits<double>::quiet_NaN();
}

double upper_gamma(double a, double x) {
  check_x(a, x);
  if (x == 0.0) {
    if (a > 0.0) return std::tgamma(a);
    throw DomainError("upper_gamma: Gamma(a, 0) diverges for a <= 0");
  }
  if (std::isinf(x)) return 0.0;
  switch (select_region(a, x)) {
    case Region::QSeries:
      return upper_gamma_small_x(a, x);
    case Region::NegativeRecurrence:
      return power_exp(a, x) * negative_recurrence(a, x);
    case Region::QContinuedFraction:
      return power_exp(a, x) * legendre_cf(a, x);
    case Region::PSeries:
    case Region::QTemmeUniform:
      if (a > 170.0) return std::exp(std::log(regularized_Q(a, x)) + std::lgamma(a));
      return regularized_Q(a, x) * std::tgamma(a);
  }
  return std::numeric_limits<double>::quiet_NaN();
}

double upper_gamma_scaled(double a, double x) {
  check_x(a, x);
  if (x == 0.0) {
    if (a < 0.0) return -1.0 / a;
    return std::numeric_limits<double>::infinity();
  }
  if (std::isinf(x)) return 0.0;
  switch (select_region(a, x)) {
    case Region::QSeries:
      return upper_gamma_small_x(a, x) * std::exp(-a * std::log(x));
    case Region::NegativeRecurrence:
      return std::exp(-x) * negative_recurrence(a, x);
    case Region::QContinuedFraction:
      return std::exp(-x) * legendre_cf(a, x);
    case Region::PSeries:
    case Region::QTemmeUniform: {
      const double q = regularized_Q(a, x);
      if (a >= 10.0) {
        const double pre = prefix(a, x);
        if (pre > 1e-300) return q * std::exp(-x) / (a * pre);
        return q * std::exp(-x - std::log(a) - log_prefix(a, x));
      }
      if (x < 700.0) {
        const double xa = std::pow(x, -a);
        if (std::isfinite(xa)) return q * std::tgamma(a) * xa;
      }
      return q * std::exp(std::lgamma(a) - a * std::log(x));
    }
  }
  return std::numeric_limits<double>::quiet_NaN();
}

double gamma_star(double a, double x) {
  check_x(a, x);
  if (x == 0.0) return rgamma(a + 1.0);
  if (is_nonpositive_integer(a)) return std::pow(x, -a);

  if (x > 50.0) {
    if (a > 0.0) return std::exp(-a * std::log(x)) * regularized_P(a, x);
    return std::exp(-a * std::log(x)) * (1.0 - regularized_Q(a, x));
  }

  // e^{-x} sum_n x^n / Gamma(a+n+1). The reciprocal gammas are obtained by
  // exact-integer shifts of the fractional part of a, so that arguments close
  // to a pole keep full relative accuracy.
  const double base = std::round(a);
  const double frac = a - base;
  auto shifted = [&](double k) { return frac + (base + k); };  // a + k

  double r0;  // 1/Gamma(a+1)
  double sum = 0.0;
  double xn = 1.0;
  int n = 0;
  if (a >= 0.0) {
    r0 = rgamma(a + 1.0);
  } else {
    // Start where the argument is >= 1, walk down to n = 0 and sum the
    // low-order terms on the way.
    const int n0 = static_cast<int>(std::ceil(-a));
    double r = rgamma(shifted(n0 + 1.0));
    std::array<double, 64> low{};
    std::vector<double> low_big;
    double* buf = low.data();
    if (n0 + 1 > static_cast<int>(low.size())) {
      low_big.resize(n0 + 1);
      buf = low_big.data();
    }
    buf[n0] = r;
    for (int k = n0; k > 0; --k) {
      r *= shifted(k);
      buf[k - 1] = r;
    }
    for (; n < n0; ++n) {
      sum += xn * buf[n];
      xn *= x;
    }
    r0 = buf[n0];
  }
  double r = r0;
  for (int it = 0; it < kMaxTerms; ++it, ++n) {
    const double term = xn * r;
    sum += term;
    if (n > x - a && std::fabs(term) < kEps * std::fabs(sum)) return std::exp(-x) * sum;
    xn *= x;
    r /= shifted(n + 1.0);
  }
  throw NumericalFailure("gamma_star: series did not converge");
}

}  // namespace epstein::gamma
