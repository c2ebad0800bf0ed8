#include "epstein/crandall.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "epstein/errors.hpp"
#include "epstein/incomplete_gamma.hpp"

namespace epstein {

double pi_norm2(std::span<const double> z) {
  double s = 0.0;
  for (double v : z) s += v * v;
  return std::numbers::pi * s;
}

bool is_nonpositive_even(double nu) {
  return nu <= 0.0 && std::fmod(nu, 2.0) == 0.0;
}

std::optional<double> upper_crandall_u(double nu, double u) {
  if (u == 0.0) {
    if (nu == 0.0) return std::nullopt;
    return -2.0 / nu;
  }
  return gamma::upper_gamma_scaled(0.5 * nu, u);
}

std::optional<double> upper_crandall(double nu, std::span<const double> z) {
  return upper_crandall_u(nu, pi_norm2(z));
}

double lower_crandall_u(double nu, double u) {
  if (is_nonpositive_even(nu)) {
    throw DomainError("lower Crandall function has a pole at nu = " + std::to_string(nu));
  }
  if (u == 0.0) return 2.0 / nu;
  const double s = 0.5 * nu;
  // Gamma(s) gamma*(s,u) = x^{-s} gamma(s,u); for s > 0 this is the
  // complement of the upper kernel and needs no gamma function at all.
  if (s > 0.0 && u > 1.0) {
    const double pow_term = std::exp(-s * std::log(u)) * std::tgamma(s);
    if (std::isfinite(pow_term) && s < 100.0) {
      return pow_term * gamma::regularized_P(s, u);
    }
  }
  return std::tgamma(s) * gamma::gamma_star(s, u);
}

double lower_crandall(double nu, std::span<const double> z) {
  return lower_crandall_u(nu, pi_norm2(z));
}

namespace {

constexpr double kEulerGamma = 0.57721566490153286061;

// nu = -2k branch with w = pi lambda^2 y^2.
double regularized_even(int k, double w, double lambda) {
  const double log_l2 = 2.0 * std::log(lambda);
  double harmonic = 0.0;
  double kfact = 1.0;
  for (int j = 1; j <= k; ++j) {
    harmonic += 1.0 / j;
    kfact *= j;
  }
  const double sign_k = (k % 2 == 0) ? 1.0 : -1.0;
  const double wk = std::pow(w, k);
  const double log_part = sign_k / kfact * (harmonic - kEulerGamma - log_l2) * wk;
  if (w == 0.0) {
    // only the n = 0 term survives: -1/(-k) for k > 0
    return k == 0 ? log_part : 1.0 / k;
  }
  if (w > 1.5) {
    // w^k Gamma(-k, w) + (-1)^k/k! w^k (ln w - ln lambda^2)
    const double tail = gamma::upper_gamma_scaled(-static_cast<double>(k), w);
    return tail + sign_k / kfact * wk * (std::log(w) - log_l2);
  }
  double sum = 0.0;
  double p = 1.0;  // (-w)^n / n!
  for (int n = 0; n < 400; ++n) {
    if (n > 0) p *= -w / n;
    if (n == k) continue;
    const double term = p / (n - k);
    sum += term;
    if (n > k && std::fabs(term) < 1e-17 * std::fabs(sum)) break;
  }
  return log_part - sum;
}

}  // namespace

double regularized_crandall_u(double nu, double u, double lambda) {
  if (!(lambda > 0.0)) throw DomainError("regularized Crandall function: lambda must be positive");
  const double w = lambda * lambda * u;
  if (is_nonpositive_even(nu)) return regularized_even(static_cast<int>(-nu / 2.0), w, lambda);
  return -lower_crandall_u(nu, w);
}

double regularized_crandall(double nu, std::span<const double> y, double lambda) {
  return regularized_crandall_u(nu, pi_norm2(y), lambda);
}

}  // namespace epstein
