#include "epstein/applications.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <string>

#include "epstein/epstein_zeta.hpp"
#include "epstein/errors.hpp"

namespace epstein::apps {

double spin_wave_dispersion(const DispersionQuery& q) {
  const std::size_t d = q.lattice.dim();
  if (!(q.nu > static_cast<double>(d))) {
    throw DomainError("spin-wave dispersion is unbounded from below for nu <= d (nu = " +
                      std::to_string(q.nu) + ", d = " + std::to_string(d) + ")");
  }
  const RealVector zero(d, 0.0);
  const Complex z0 = epstein_zeta(q.nu, q.lattice, zero, zero);
  const Complex zk = epstein_zeta(q.nu, q.lattice, zero, q.k);
  const Complex diff = z0 - zk;
  if (std::fabs(diff.imag()) > 1e-12 * std::fabs(diff.real()) + 1e-14) {
    throw NumericalFailure("spin-wave dispersion: imaginary part " + std::to_string(diff.imag()) +
                           " is not negligible");
  }
  return q.js * diff.real();
}

double dispersion_exponent(double nu, const LatticeMatrix& lattice, std::span<const double> dir,
                           double k_lo, double k_hi, std::size_t samples) {
  const std::size_t d = lattice.dim();
  double norm = 0.0;
  for (double v : dir) norm += v * v;
  norm = std::sqrt(norm);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    const double t = samples == 1 ? 0.0 : static_cast<double>(i) / (n - 1.0);
    const double k = k_lo * std::pow(k_hi / k_lo, t);
    RealVector kv(d);
    for (std::size_t j = 0; j < d; ++j) kv[j] = k * dir[j] / norm;
    const double w = spin_wave_dispersion({nu, lattice, kv, 1.0});
    const double lx = std::log(k);
    const double ly = std::log(w);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double casimir_energy(const BoxGeometry& box) {
  const std::size_t d = box.edges.size();
  if (d < 1 || d > 6) throw UnsupportedDimensionError("Casimir energy needs 1 <= d <= 6");
  std::vector<double> inv(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (!(box.edges[i] > 0.0)) throw DomainError("box edges must be positive");
    inv[i] = 1.0 / box.edges[i];
  }
  const LatticeMatrix dual = LatticeMatrix::diagonal(inv);
  const RealVector zero(d, 0.0);
  const Complex z = epstein_zeta(-1.0, dual, zero, zero);
  return std::numbers::pi * z.real();
}

CasimirForce casimir_force(double L, double step) {
  if (!(L > 0.0)) throw DomainError("edge length must be positive");
  const double h = step > 0.0 ? step : L / 100.0;
  if (!(h < L)) throw DomainError("finite-difference step must be smaller than L");
  const double ep = casimir_energy({{L + h, 1.0, 1.0}});
  const double em = casimir_energy({{L - h, 1.0, 1.0}});
  return {-(ep - em) / (2.0 * h), h > 0.1 * L};
}

double casimir_force_extrapolated(double L, double step) {
  const double h = step > 0.0 ? step : L / 50.0;
  if (!(h < L)) throw DomainError("finite-difference step must be smaller than L");
  auto diff = [L](double s) {
    return -(casimir_energy({{L + s, 1.0, 1.0}}) - casimir_energy({{L - s, 1.0, 1.0}})) / (2.0 * s);
  };
  const double d1 = diff(h), d2 = diff(h / 2.0), d3 = diff(h / 4.0);
  const double r1 = (4.0 * d2 - d1) / 3.0;
  const double r2 = (4.0 * d3 - d2) / 3.0;
  return (16.0 * r2 - r1) / 15.0;
}

double casimir_force_asymptotic(double L) {
  return -std::numbers::pi * std::numbers::pi / (30.0 * std::pow(L, 4));
}

double casimir_force_correction(double L) {
  return -8.0 * std::numbers::pi * std::exp(-2.0 * std::numbers::pi / L) / std::pow(L, 3);
}

EnergySurface unit_volume_energy_surface(std::span<const double> l1, std::span<const double> l2) {
  EnergySurface s;
  s.l1.assign(l1.begin(), l1.end());
  s.l2.assign(l2.begin(), l2.end());
  s.energy.reserve(l1.size() * l2.size());
  for (double a : l1) {
    for (double b : l2) s.energy.push_back(casimir_energy({{a, b, 1.0 / (a * b)}}));
  }
  return s;
}

void write_dispersion_csv(std::ostream& out, double nu, const LatticeMatrix& lattice,
                          const std::vector<RealVector>& ks, double js) {
  const std::size_t d = lattice.dim();
  out << std::setprecision(17);
  for (std::size_t j = 0; j < d; ++j) out << "k" << j + 1 << ",";
  out << "omega\n";
  for (const auto& k : ks) {
    for (double v : k) out << v << ",";
    out << spin_wave_dispersion({nu, lattice, k, js}) << "\n";
  }
}

void write_energy_surface_csv(std::ostream& out, const EnergySurface& s) {
  out << std::setprecision(17) << "L1,L2,L3,energy\n";
  for (std::size_t i = 0; i < s.l1.size(); ++i) {
    for (std::size_t j = 0; j < s.l2.size(); ++j) {
      out << s.l1[i] << "," << s.l2[j] << "," << 1.0 / (s.l1[i] * s.l2[j]) << ","
          << s.energy[i * s.l2.size() + j] << "\n";
    }
  }
}

}  // namespace epstein::apps
