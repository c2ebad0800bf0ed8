#pragma once

#include <cstddef>

namespace epstein {

inline constexpr std::size_t kMaxDimension = 10;
inline constexpr double kShellWidth = 1.0 / 20.0;

struct TruncationPlan {
  std::size_t dim = 0;
  /// Base radius for Z^d at unit volume.
  double r0 = 0.0;
  /// Effective radius kappa * r0, used for both sums.
  double r = 0.0;
  double epsilon = kShellWidth;
  double condition = 1.0;
  /// Set when kappa^{d+1} > 100; the base radii are then not guaranteed to
  /// reach double precision.
  bool warning = false;
};

/// Base radius r0 for dimension d. Throws UnsupportedDimensionError unless
/// 1 <= d <= 10.
double base_radius(std::size_t d);

/// Radii for a unit-volume lattice of condition number cond. nu does not
/// change the radius; it is accepted so callers can keep one plan per query.
TruncationPlan truncation_radius(std::size_t d, double nu, double cond);

/// R_nu(r) = r^{d+1}/eps * (G_{d+1}(r-eps) - G_nu(r-eps)) / (d+1-nu), with the
/// derivative form at nu = d+1.
double shell_tail(std::size_t d, double nu, double r, double epsilon = kShellWidth);

/// kappa^{d+1} c_nu (R_nu(r/kappa) + R_{d-nu}(r/kappa)); bounds the
/// truncation error of both Crandall sums at radius r for unit volume.
double remainder_bound(std::size_t d, double nu, double r, double kappa = 1.0,
                       double epsilon = kShellWidth);

/// Maximum of remainder_bound over an equispaced grid on [nu_lo, nu_hi].
double remainder_bound_sup(std::size_t d, double nu_lo, double nu_hi, double r,
                           double kappa = 1.0, std::size_t samples = 401,
                           double epsilon = kShellWidth);

}  // namespace epstein
