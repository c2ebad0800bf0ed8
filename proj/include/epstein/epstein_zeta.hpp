#pragma once

#include <cstddef>
#include <span>
#include <variant>

#include "epstein/lattice.hpp"
#include "epstein/summation.hpp"
#include "epstein/truncation.hpp"

namespace epstein {

/// One evaluation request.
struct EpsteinQuery {
  double nu;
  LatticeMatrix lattice;
  RealVector x;
  RealVector y;
  bool regularised = false;
};

/// The input sits on the pole nu = d, y in the reciprocal lattice.
struct Pole {};

using ZetaOutcome = std::variant<Complex, Pole>;

inline bool is_pole(const ZetaOutcome& v) { return std::holds_alternative<Pole>(v); }

struct EvalStats {
  std::size_t direct_terms = 0;
  std::size_t reciprocal_terms = 0;
  TruncationPlan plan;
};

struct EvalOptions {
  std::size_t max_points = kDefaultPointCap;
  /// Multiplies the truncation radius; values above 1 only add work.
  double radius_factor = 1.0;
};

/// Typed entry point behind epstein_zeta and epstein_zeta_reg.
ZetaOutcome evaluate(const EpsteinQuery& query, const EvalOptions& options = {},
                     EvalStats* stats = nullptr);

/// Z_{Lambda,nu}(x, y) = sum' e^{-2 pi i y.z} |z - x|^{-nu} over z in Lambda,
/// continued meromorphically in nu. Returns NaN + NaN i at the pole.
Complex epstein_zeta(double nu, const LatticeMatrix& lattice, std::span<const double> x,
                     std::span<const double> y);

/// e^{2 pi i x.y} Z(x, y) - s_nu(y)/V, analytic in y around 0. Throws
/// DomainError when y lies on the reciprocal lattice but is not 0.
Complex epstein_zeta_reg(double nu, const LatticeMatrix& lattice, std::span<const double> x,
                         std::span<const double> y);

/// Fourier transform of |.|^{-nu} in d dimensions, with the log choice at
/// nu = d + 2k. Used for reconstructing Z^reg from Z away from y = 0.
double power_law_transform(std::size_t d, double nu, std::span<const double> y);

}  // namespace epstein
