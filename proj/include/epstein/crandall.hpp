#pragma once

#include <optional>
#include <span>

// Crandall functions. Every kernel depends on its vector argument only via
// u = pi z^2, so the *_u overloads take that scalar directly.

namespace epstein {

double pi_norm2(std::span<const double> z);

/// G_nu(z) = Gamma(nu/2, pi z^2) / (pi z^2)^{nu/2}, with G_nu(0) = -2/nu.
/// Returns nullopt at the pole nu = 0, z = 0.
std::optional<double> upper_crandall(double nu, std::span<const double> z);
std::optional<double> upper_crandall_u(double nu, double u);

/// g_nu(z) = Gamma(nu/2) gamma*(nu/2, pi z^2). Throws DomainError for
/// nu in {0, -2, -4, ...}.
double lower_crandall(double nu, std::span<const double> z);
double lower_crandall_u(double nu, double u);

/// Regularised upper Crandall function G^reg_{nu,lambda}(y): -g_nu(lambda y)
/// off -2N_0, and the entire log-free series at nu = -2k.
double regularized_crandall(double nu, std::span<const double> y, double lambda = 1.0);
/// Same with u = pi y^2 (lambda not yet applied).
double regularized_crandall_u(double nu, double u, double lambda = 1.0);

/// True when nu is one of 0, -2, -4, ...
bool is_nonpositive_even(double nu);

}  // namespace epstein
