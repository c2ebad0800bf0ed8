#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "epstein/lattice.hpp"

namespace epstein::apps {

struct DispersionQuery {
  double nu;
  LatticeMatrix lattice;
  /// Wavevector in reciprocal-lattice units, the y argument of Z.
  RealVector k;
  /// Coupling times spin, J S.
  double js = 1.0;
};

/// hbar omega(k) = JS (Z(0,0) - Z(0,k)). Throws DomainError for nu <= d,
/// where the dispersion is unbounded from below.
double spin_wave_dispersion(const DispersionQuery& q);

/// Least-squares slope of log omega against log k along direction dir, with
/// samples log-spaced |k| in [k_lo, k_hi].
double dispersion_exponent(double nu, const LatticeMatrix& lattice, std::span<const double> dir,
                           double k_lo, double k_hi, std::size_t samples = 12);

struct BoxGeometry {
  std::vector<double> edges;
};

/// Massless Casimir energy pi Z_{Lambda*, -1}(0, 0), Lambda* = diag(1/L_i).
double casimir_energy(const BoxGeometry& box);

struct CasimirForce {
  double force;
  /// step > L/10; the central difference is then a coarse estimate.
  bool step_warning;
};

/// -dE/dL on the (L, 1, 1) box by central difference. step <= 0 selects L/100.
CasimirForce casimir_force(double L, double step = 0.0);

/// Two Richardson steps on central differences at step, step/2, step/4.
/// The plain difference at L/100 is off by about 3e-4 relative, which hides
/// the exponentially small part of the force for L >= 0.3.
double casimir_force_extrapolated(double L, double step = 0.0);

/// -pi^2 / (30 L^4), the small-L limit of the force.
double casimir_force_asymptotic(double L);
/// -8 pi e^{-2 pi/L} / L^3, the published fit of F - F_as. The computed
/// residual has this magnitude but the opposite sign.
double casimir_force_correction(double L);

struct EnergySurface {
  std::vector<double> l1;
  std::vector<double> l2;
  /// energy[i * l2.size() + j] at (l1[i], l2[j], 1/(l1[i] l2[j]))
  std::vector<double> energy;
};

EnergySurface unit_volume_energy_surface(std::span<const double> l1, std::span<const double> l2);

/// CSV with columns k1,...,kd,omega.
void write_dispersion_csv(std::ostream& out, double nu, const LatticeMatrix& lattice,
                          const std::vector<RealVector>& ks, double js = 1.0);
/// CSV with columns L1,L2,L3,energy.
void write_energy_surface_csv(std::ostream& out, const EnergySurface& surface);

}  // namespace epstein::apps
