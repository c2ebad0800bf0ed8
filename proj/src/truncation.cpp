#include "epstein/truncation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "epstein/crandall.hpp"
#include "epstein/errors.hpp"
#include "epstein/incomplete_gamma.hpp"

namespace epstein {
namespace {

constexpr std::array<double, kMaxDimension> kBaseRadius = {3.8, 3.9, 4.0, 4.1, 4.2,
                                                           4.2, 4.3, 4.4, 4.4, 4.5};

double kernel_at_radius(double nu, double rho) {
  const double u = std::numbers::pi * rho * rho;
  return upper_crandall_u(nu, u).value_or(std::numeric_limits<double>::infinity());
}

}  // namespace

double base_radius(std::size_t d) {
  if (d < 1 || d > kMaxDimension) {
    throw UnsupportedDimensionError("dimension " + std::to_string(d) +
                                    " is outside the supported range 1..10");
  }
  return kBaseRadius[d - 1];
}

TruncationPlan truncation_radius(std::size_t d, double /*nu*/, double cond) {
  TruncationPlan plan;
  plan.dim = d;
  plan.r0 = base_radius(d);
  plan.condition = std::max(1.0, cond);
  plan.r = plan.condition * plan.r0;
  plan.warning = std::pow(plan.condition, static_cast<double>(d + 1)) > 100.0;
  return plan;
}

double shell_tail(std::size_t d, double nu, double r, double epsilon) {
  const double dp1 = static_cast<double>(d + 1);
  const double rho = r - epsilon;
  const double lead = std::pow(r, dp1) / epsilon;
  const double gap = dp1 - nu;
  if (std::fabs(gap) < 1e-4) {
    constexpr double h = 1e-3;
    const double deriv = (kernel_at_radius(dp1 + h, rho) - kernel_at_radius(dp1 - h, rho)) / (2 * h);
    return -lead * deriv;
  }
  return lead * (kernel_at_radius(dp1, rho) - kernel_at_radius(nu, rho)) / gap;
}

double remainder_bound(std::size_t d, double nu, double r, double kappa, double epsilon) {
  const double dd = static_cast<double>(d);
  const double inv_gamma = std::fabs(gamma::rgamma(0.5 * nu));
  if (inv_gamma == 0.0) return 0.0;
  const double c = std::pow(1.5, dd) * std::pow(std::numbers::pi, 0.5 * (nu + dd)) /
                   std::tgamma(0.5 * dd + 1.0) * inv_gamma;
  const double rs = r / kappa;
  return std::pow(kappa, dd + 1.0) * c *
         (shell_tail(d, nu, rs, epsilon) + shell_tail(d, dd - nu, rs, epsilon));
}

double remainder_bound_sup(std::size_t d, double nu_lo, double nu_hi, double r, double kappa,
                           std::size_t samples, double epsilon) {
  double worst = 0.0;
  const std::size_t n = std::max<std::size_t>(samples, 2);
  for (std::size_t i = 0; i < n; ++i) {
    const double nu = nu_lo + (nu_hi - nu_lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    worst = std::max(worst, remainder_bound(d, nu, r, kappa, epsilon));
  }
  return worst;
}

}  // namespace epstein
