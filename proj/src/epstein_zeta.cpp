#include "epstein/epstein_zeta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "epstein/crandall.hpp"
#include "epstein/errors.hpp"
#include "epstein/incomplete_gamma.hpp"

namespace epstein {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// e^{-2 pi i t}, reducing t modulo 1 first.
Complex unit_phase(double t) {
  const double f = t - std::nearbyint(t);
  return {std::cos(kTwoPi * f), -std::sin(kTwoPi * f)};
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

template <class Int>
double dot_coords(std::span<const double> c, std::span<const Int> m) {
  double s = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) s += c[i] * static_cast<double>(m[i]);
  return s;
}

bool all_zero(std::span<const double> v) {
  for (double e : v) {
    if (e != 0.0) return false;
  }
  return true;
}

void check_query(const EpsteinQuery& q) {
  const std::size_t d = q.lattice.dim();
  if (q.x.size() != d || q.y.size() != d) {
    throw InvalidLatticeError("x and y must have length " + std::to_string(d));
  }
  if (!std::isfinite(q.nu)) throw DomainError("nu must be finite");
  for (double v : q.x) {
    if (!std::isfinite(v)) throw DomainError("x must be finite");
  }
  for (double v : q.y) {
    if (!std::isfinite(v)) throw DomainError("y must be finite");
  }
  if (d > kMaxDimension) {
    throw UnsupportedDimensionError("dimension " + std::to_string(d) +
                                    " is outside the supported range 1..10");
  }
}

// Point sets of the most recent evaluation in this thread. Sweeps over nu
// with a fixed geometry, the common case, then enumerate only once.
class PointCache {
 public:
  const LatticePoints& get(const LatticeMatrix& lattice, std::span<const double> center,
                           double radius, std::size_t cap) {
    auto same = [](std::span<const double> a, const std::vector<double>& b) {
      return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin());
    };
    if (!(valid_ && radius_ == radius && cap_ == cap && same(lattice.row_major(), lattice_) &&
          same(center, center_))) {
      valid_ = false;
      points_ = points_in_ball(lattice, center, radius, cap);
      lattice_.assign(lattice.row_major().begin(), lattice.row_major().end());
      center_.assign(center.begin(), center.end());
      radius_ = radius;
      cap_ = cap;
      valid_ = true;
    }
    return points_;
  }

 private:
  bool valid_ = false;
  std::vector<double> lattice_;
  std::vector<double> center_;
  double radius_ = 0.0;
  std::size_t cap_ = 0;
  LatticePoints points_;
};

thread_local PointCache direct_cache;
thread_local PointCache reciprocal_cache;

}  // namespace

ZetaOutcome evaluate(const EpsteinQuery& q, const EvalOptions& options, EvalStats* stats) {
  check_query(q);
  const std::size_t d = q.lattice.dim();
  const double dd = static_cast<double>(d);
  const double nu = q.nu;

  // 1. unit volume
  const UnitVolumeProblem unit = rescale_to_unit_volume(q.lattice, q.x, q.y);
  const LatticeMatrix& lat = unit.lattice;
  const LatticeMatrix rec = lat.reciprocal();

  // 2. elementary cells
  const CellProjection px = project_into_cell(lat, unit.x);
  const CellProjection py = project_into_cell(rec, unit.y);
  const RealVector& xr = px.reduced;
  const RealVector& yr = py.reduced;
  const bool x_on_lattice = all_zero(xr);
  const bool y_on_lattice = all_zero(yr);

  // 3. special cases
  if (q.regularised && y_on_lattice && !all_zero(q.y)) {
    throw DomainError("regularised Epstein zeta: y lies on the reciprocal lattice but is not 0");
  }
  if (!q.regularised && nu == dd && y_on_lattice) return Pole{};
  if (nu == 0.0) {
    if (!x_on_lattice) return Complex{0.0, 0.0};
    if (q.regularised) return Complex{-1.0, 0.0};
    return -unit_phase(dot(px.shift, yr));
  }
  if (nu < 0.0 && is_nonpositive_even(nu)) return Complex{0.0, 0.0};

  // 4. compensated sums
  TruncationPlan plan = truncation_radius(d, nu, lat.condition());
  const double r = plan.r * options.radius_factor;

  // fractional coordinates: x' = A cx, y' = A^{-T} cy
  const RealVector cx = lat.apply_inverse(xr);
  const RealVector cy = lat.apply_transpose(yr);

  ComplexKahanAccumulator direct;
  const LatticePoints& zs = direct_cache.get(lat, xr, r, options.max_points);
  const double yx = q.regularised ? dot(unit.y, xr) : 0.0;
  RealVector diff(d);
  for (std::size_t i = 0; i < zs.size(); ++i) {
    const auto z = zs.point(i);
    for (std::size_t j = 0; j < d; ++j) diff[j] = z[j] - xr[j];
    const double g = *upper_crandall_u(nu, pi_norm2(diff));
    const double t = dot_coords(std::span<const double>(cy), zs.index(i)) - yx;
    direct.add(g * unit_phase(t));
  }

  ComplexKahanAccumulator reciprocal;
  RealVector neg_yr(yr);
  for (double& v : neg_yr) v = -v;
  const LatticePoints& ks = reciprocal_cache.get(rec, neg_yr, r, options.max_points);
  const double nu_dual = dd - nu;
  std::size_t skipped = 0;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const auto k = ks.point(i);
    const auto m = ks.index(i);
    double t;
    if (q.regularised) {
      bool is_w = true;
      for (std::size_t j = 0; j < d; ++j) is_w = is_w && (m[j] == py.coords[j]);
      if (is_w) {
        ++skipped;
        continue;
      }
      // x'.(k - w) in integer coordinates
      double s = 0.0;
      for (std::size_t j = 0; j < d; ++j) s += cx[j] * static_cast<double>(m[j] - py.coords[j]);
      t = s;
    } else {
      t = dot_coords(std::span<const double>(cx), m) + dot(xr, yr);
    }
    for (std::size_t j = 0; j < d; ++j) diff[j] = k[j] + yr[j];
    const double g = *upper_crandall_u(nu_dual, pi_norm2(diff));
    reciprocal.add(g * unit_phase(t));
  }

  Complex total;
  if (q.regularised) {
    reciprocal.add(regularized_crandall_u(nu_dual, pi_norm2(q.y), unit.scale));
    total = direct.value() + reciprocal.value();
  } else {
    total = unit_phase(dot(yr, px.shift)) * (direct.value() + reciprocal.value());
  }

  if (stats) {
    stats->direct_terms = zs.size();
    stats->reciprocal_terms = ks.size() - skipped;
    stats->plan = plan;
  }

  // 5. prefactor a^{-nu} pi^{nu/2} / Gamma(nu/2)
  const double pre = std::exp(-nu * std::log(unit.scale)) *
                     std::pow(std::numbers::pi, 0.5 * nu) * gamma::rgamma(0.5 * nu);
  return pre * total;
}

Complex epstein_zeta(double nu, const LatticeMatrix& lattice, std::span<const double> x,
                     std::span<const double> y) {
  EpsteinQuery q{nu, lattice, RealVector(x.begin(), x.end()), RealVector(y.begin(), y.end()),
                 false};
  const ZetaOutcome out = evaluate(q);
  if (is_pole(out)) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    return {nan, nan};
  }
  return std::get<Complex>(out);
}

Complex epstein_zeta_reg(double nu, const LatticeMatrix& lattice, std::span<const double> x,
                         std::span<const double> y) {
  EpsteinQuery q{nu, lattice, RealVector(x.begin(), x.end()), RealVector(y.begin(), y.end()),
                 true};
  return std::get<Complex>(evaluate(q));
}

double power_law_transform(std::size_t d, double nu, std::span<const double> y) {
  const double dd = static_cast<double>(d);
  const double u = pi_norm2(y);
  const double half = 0.5 * (nu - dd);
  if (half >= 0.0 && half == std::floor(half)) {
    const int k = static_cast<int>(half);
    double kfact = 1.0;
    for (int j = 2; j <= k; ++j) kfact *= j;
    const double sign = (k % 2 == 0) ? -1.0 : 1.0;
    if (u == 0.0) return 0.0;
    return std::pow(std::numbers::pi, k + 0.5 * dd) / std::tgamma(k + 0.5 * dd) * sign / kfact *
           std::pow(u, k) * std::log(u);
  }
  return std::pow(std::numbers::pi, 0.5 * nu) * gamma::rgamma(0.5 * nu) *
         std::tgamma(0.5 * (dd - nu)) * std::pow(u, half);
}

}  // namespace epstein
