#include "epstein/reference.hpp"

#include <algorithm>
#include <array>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/ooura_fourier_integrals.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/zeta.hpp>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <string>

#include "epstein/errors.hpp"
#include "epstein/incomplete_gamma.hpp"

namespace epstein::reference {
namespace {

constexpr double kPi = std::numbers::pi;

// B_{2j} / (2j)!, j = 1..6
constexpr std::array<double, 6> kBernoulliOverFactorial = {
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
    -691.0 / 2730.0 / 479001600.0,
};

constexpr double kEulerMaclaurinMin = 1.5;

void check_pole(double s, const char* what) {
  if (s == 1.0) throw DomainError(std::string(what) + ": pole at s = 1");
}

// Euler-Maclaurin tail starting at X = N + a, without the X^{1-s}/(s-1) term.
double em_correction(double s, double X) {
  double out = 0.5 * std::pow(X, -s);
  double rising = s;  // (s)_{2j-1}
  double xp = std::pow(X, -s - 1.0);
  for (std::size_t j = 0; j < kBernoulliOverFactorial.size(); ++j) {
    out += kBernoulliOverFactorial[j] * rising * xp;
    rising *= (s + 2.0 * j + 1.0) * (s + 2.0 * j + 2.0);
    xp /= X * X;
  }
  return out;
}

std::size_t em_shift(double s, double a) {
  const double target = std::max(20.0, std::fabs(s));
  return a >= target ? 0 : static_cast<std::size_t>(std::ceil(target - a));
}

double hurwitz_em(double s, double a) {
  const std::size_t n = em_shift(s, a);
  const double X = static_cast<double>(n) + a;
  double sum = std::pow(X, 1.0 - s) / (s - 1.0) + em_correction(s, X);
  for (std::size_t k = n; k-- > 0;) sum += std::pow(static_cast<double>(k) + a, -s);
  return sum;
}

// expm1(z)/z
double expm1_ratio(double z) { return z == 0.0 ? 1.0 : std::expm1(z) / z; }

// Integrand of Hermite's formula, without the factor 2.
double hermite_kernel(double s, double a, double t) {
  if (t == 0.0) return s * std::pow(a, -s - 1.0) / (2.0 * kPi);
  const double r2 = a * a + t * t;
  return std::sin(s * std::atan2(t, a)) * std::exp(-0.5 * s * std::log(r2) - 2.0 * kPi * t) /
         -std::expm1(-2.0 * kPi * t);
}

template <class F>
double integrate_half_line(F f) {
  thread_local boost::math::quadrature::exp_sinh<double> integrator;
  return integrator.integrate(f, 1e-15);
}

double hurwitz_hermite(double s, double a) {
  const double integral = integrate_half_line([&](double t) { return hermite_kernel(s, a, t); });
  return 0.5 * std::pow(a, -s) + std::pow(a, 1.0 - s) / (s - 1.0) + 2.0 * integral;
}

}  // namespace

double riemann_zeta(double s) {
  check_pole(s, "riemann_zeta");
  return boost::math::zeta(s);
}

double hurwitz_zeta(double s, double a) {
  check_pole(s, "hurwitz_zeta");
  if (!(a > 0.0)) throw DomainError("hurwitz_zeta: need a > 0");
  if (s >= kEulerMaclaurinMin) return hurwitz_em(s, a);
  return hurwitz_hermite(s, a);
}

double hurwitz_zeta_difference(double s, double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw DomainError("hurwitz_zeta_difference: need a, b > 0");
  if (s >= kEulerMaclaurinMin) return hurwitz_em(s, a) - hurwitz_em(s, b);
  // (a^{1-s} - b^{1-s})/(s-1) = -b^{1-s} ln(a/b) expm1((1-s)L)/((1-s)L)
  const double L = std::log(a / b);
  const double pole_part = -std::pow(b, 1.0 - s) * L * expm1_ratio((1.0 - s) * L);
  const double integral = integrate_half_line(
      [&](double t) { return hermite_kernel(s, a, t) - hermite_kernel(s, b, t); });
  return 0.5 * (std::pow(a, -s) - std::pow(b, -s)) + pole_part + 2.0 * integral;
}

double dirichlet_eta(double s) {
  if (s == 1.0) return std::numbers::ln2;
  // (1 - 2^{1-s}) zeta(s), exact cancellation of the pole
  return -std::expm1((1.0 - s) * std::numbers::ln2) * riemann_zeta(s);
}

double dirichlet_lambda(double s) {
  check_pole(s, "dirichlet_lambda");
  return -std::expm1(-s * std::numbers::ln2) * riemann_zeta(s);
}

double dirichlet_beta(double s) {
  if (s < 0.5) {
    // beta(1-t) = (2/pi)^t sin(pi t/2) Gamma(t) beta(t); keeps relative
    // accuracy next to the trivial zeros at negative odd s
    const double t = 1.0 - s;
    return std::pow(2.0 / kPi, t) * gamma::sinpi(0.5 * t) * std::tgamma(t) * dirichlet_beta(t);
  }
  return std::pow(4.0, -s) * hurwitz_zeta_difference(s, 0.25, 0.75);
}

DirichletValues dirichlet_suite(double s) {
  return {dirichlet_eta(s), dirichlet_lambda(s), dirichlet_beta(s)};
}

LatticeMatrix AnalyticCase::lattice() const {
  return LatticeMatrix::from_row_major(dim, matrix);
}

bool AnalyticCase::y_is_zero() const {
  return std::all_of(y.begin(), y.end(), [](double v) { return v == 0.0; });
}

namespace {

std::vector<double> identity(std::size_t d) {
  std::vector<double> m(d * d, 0.0);
  for (std::size_t i = 0; i < d; ++i) m[i * d + i] = 1.0;
  return m;
}

std::vector<double> diagonal(std::initializer_list<double> diag) {
  const std::size_t d = diag.size();
  std::vector<double> m(d * d, 0.0);
  std::size_t i = 0;
  for (double v : diag) {
    m[i * d + i] = v;
    ++i;
  }
  return m;
}

std::vector<AnalyticCase> build_cases() {
  const double s2 = std::sqrt(2.0);
  const double s3 = std::sqrt(3.0);
  std::vector<AnalyticCase> c;
  c.push_back({CaseId::S1, "S1", 1, {1.0}, {-0.5}, {0.0}, false});
  c.push_back({CaseId::S2a, "S2a", 2, diagonal({1.0, 2.0}), {-1.0, -2.0}, {0.0, 0.0}, false});
  c.push_back({CaseId::S2b, "S2b", 2, {1.0, 0.5, 0.0, s3 / 2.0}, {0.0, 0.0}, {0.0, 0.0}, false});
  c.push_back({CaseId::S3a, "S3a", 3, diagonal({1.0, 1.0, 2.0}), {0.0, 0.0, -0.5},
               {0.5, 0.0, 0.0}, false});
  c.push_back({CaseId::S3b, "S3b", 3, diagonal({6.0, 6.0, 6.0}), {-1.0, -1.0, -1.0},
               {1.0 / 12.0, 1.0 / 12.0, 1.0 / 12.0}, false});
  c.push_back({CaseId::S3c, "S3c", 3, diagonal({2.0 * s2, 4.0, 2.0}), {0.0, -1.0, -1.0},
               {1.0 / (4.0 * s2), 0.0, 0.0}, false});
  c.push_back({CaseId::S4, "S4", 4, identity(4), {0.5, 0.0, 0.0, 0.0}, RealVector(4, 0.0), false});
  {
    RealVector y(6, 0.0);
    y[0] = y[1] = 0.5;
    c.push_back({CaseId::S6, "S6", 6, identity(6), RealVector(6, 0.0), y, false});
  }
  c.push_back({CaseId::S8, "S8", 8, identity(8), RealVector(8, 0.0), RealVector(8, 0.5), true});
  return c;
}

}  // namespace

const std::vector<AnalyticCase>& analytic_cases() {
  static const std::vector<AnalyticCase> cases = build_cases();
  return cases;
}

const AnalyticCase& find_case(std::string_view name) {
  for (const auto& c : analytic_cases()) {
    if (c.name == name) return c;
  }
  throw DomainError("unknown analytic case '" + std::string(name) + "'");
}

const AnalyticCase& find_case(CaseId id) {
  for (const auto& c : analytic_cases()) {
    if (c.id == id) return c;
  }
  throw DomainError("unknown analytic case");
}

Complex analytic_value(const AnalyticCase& c, double nu) {
  const double h = 0.5 * nu;
  double v = 0.0;
  switch (c.id) {
    case CaseId::S1:
      v = 2.0 * hurwitz_zeta(nu, 0.5);
      break;
    case CaseId::S2a:
      v = 2.0 * (1.0 - std::pow(2.0, -h) + std::pow(2.0, 1.0 - nu)) * riemann_zeta(h) *
          dirichlet_beta(h);
      break;
    case CaseId::S2b:
      v = std::pow(3.0, 1.0 - h) * 2.0 * riemann_zeta(h) *
          hurwitz_zeta_difference(h, 1.0 / 3.0, 2.0 / 3.0);
      break;
    case CaseId::S3a:
      v = std::pow(4.0, h) * dirichlet_beta(nu - 1.0);
      break;
    case CaseId::S3b:
      v = std::pow(3.0, -h) * dirichlet_beta(nu - 1.0);
      break;
    case CaseId::S3c:
      v = std::pow(2.0, 1.0 - h) * dirichlet_beta(nu - 1.0);
      break;
    case CaseId::S4:
      v = std::pow(2.0, nu) * (dirichlet_beta(h) * dirichlet_beta(h - 1.0) +
                               dirichlet_lambda(h) * dirichlet_lambda(h - 1.0));
      break;
    case CaseId::S6:
      v = 4.0 * dirichlet_beta(h - 2.0) * dirichlet_eta(h);
      break;
    case CaseId::S8:
      v = -16.0 * dirichlet_eta(h - 3.0) * riemann_zeta(h);
      break;
  }
  return {v, 0.0};
}

namespace {

// Direct-sum oracle.
//
// The lattice sum is split with a weight w(r) = erfc((r - c)/sigma)/2 around x:
//   Z = sum' f(z) w(|z-x|) e^{-2 pi i y.z} + sum_k e^{-2 pi i (y+k).x} H(|y+k|) / V
// where f(z) = |z-x|^{-nu}, k runs over the reciprocal lattice and H is the
// radial Fourier transform of r^{-nu} (1 - w(r)). Both pieces are computed
// without any incomplete gamma function: the first by brute force inside
// the radius, the second by one-dimensional quadrature. H(q) falls off like
// exp(-pi^2 sigma^2 q^2), so only k near -y contribute.

constexpr double kWindowCentre = 7.0;   // c / sigma
constexpr double kWindowReach = 13.5;   // radius / sigma
constexpr double kFrequencyCut = 2.05;  // sigma * q_max

constexpr double kWindowFloor = 0.5;    // r / sigma below which w is exactly 1

double window(double r, double c, double sigma) {
  if (r < kWindowFloor * sigma) return 1.0;
  return 0.5 * std::erfc((r - c) / sigma);
}

Complex windowed_sum(double nu, const LatticeMatrix& lattice, std::span<const double> x,
                     std::span<const double> cy, double radius, double c, double sigma,
                     std::size_t* terms) {
  const LatticePoints pts = points_in_ball(lattice, x, radius);
  const std::size_t d = lattice.dim();
  ComplexKahanAccumulator acc;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto z = pts.point(i);
    double r2 = 0.0;
    for (std::size_t j = 0; j < d; ++j) r2 += (z[j] - x[j]) * (z[j] - x[j]);
    if (r2 == 0.0) continue;
    const double rho = std::sqrt(r2);
    const double w = window(rho, c, sigma);
    if (w == 0.0) continue;
    double t = 0.0;
    const auto m = pts.index(i);
    for (std::size_t j = 0; j < d; ++j) t += cy[j] * static_cast<double>(m[j]);
    t -= std::nearbyint(t);
    const double mag = w * std::exp(-nu * std::log(rho));
    acc.add({mag * std::cos(2.0 * kPi * t), -mag * std::sin(2.0 * kPi * t)});
  }
  if (terms) *terms = pts.size();
  return acc.value();
}

// Angular integral of e^{-i t u.e} over the unit sphere in R^d,
// (2 pi)^{d/2} t^{1-d/2} J_{d/2-1}(t).
double sphere_kernel(std::size_t d, double t) {
  const double dd = static_cast<double>(d);
  if (t == 0.0) return 2.0 * std::pow(kPi, 0.5 * dd) / std::tgamma(0.5 * dd);
  if (d == 1) return 2.0 * std::cos(t);
  if (d == 3) return 4.0 * kPi * std::sin(t) / t;
  const double mu = 0.5 * dd - 1.0;
  return std::pow(2.0 * kPi, 0.5 * dd) * std::pow(t, -mu) * boost::math::cyl_bessel_j(mu, t);
}

struct RadialTransform {
  double value;
  double error;
};

// H(q) = integral_0^inf r^{d-1-nu} (1 - w(r)) K_d(2 pi q r) dr.
class RadialTransformer {
 public:
  RadialTransformer(std::size_t d, double nu, double c, double sigma, double radius)
      : d_(d), nu_(nu), c_(c), sigma_(sigma), radius_(radius), cos_(1e-14), sin_(1e-14) {}

  RadialTransform operator()(double q) {
    const double omega = 2.0 * kPi * q;
    const double dd = static_cast<double>(d_);
    auto inner = [&](double r) {
      return std::pow(r, dd - 1.0 - nu_) * (1.0 - window(r, c_, sigma_)) *
             sphere_kernel(d_, omega * r);
    };
    const double lo = kWindowFloor * sigma_;
    double err = 0.0;
    double value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        inner, lo, radius_, 12, 1e-12, &err);
    const RadialTransform tail = outer(omega);
    return {value + tail.value, err + tail.error};
  }

 private:
  // integral_R^inf r^{d-1-nu} K_d(omega r) dr
  RadialTransform outer(double omega) {
    const double dd = static_cast<double>(d_);
    const double R = radius_;
    const double sphere = sphere_kernel(d_, 0.0);
    if (omega * R < 1e-9) return {sphere * std::pow(R, dd - nu_) / (nu_ - dd), 0.0};
    // K_d(omega r) = A(r) cos(omega s) + B(r) sin(omega s) with s = r - R and
    // A, B free of oscillation.
    std::function<double(double)> a_part;
    std::function<double(double)> b_part;
    if (d_ == 1) {
      const double c0 = std::cos(omega * R), s0 = std::sin(omega * R);
      a_part = [=, this](double s) { return 2.0 * c0 * std::pow(R + s, -nu_); };
      b_part = [=, this](double s) { return -2.0 * s0 * std::pow(R + s, -nu_); };
    } else if (d_ == 3) {
      const double c0 = std::cos(omega * R), s0 = std::sin(omega * R);
      a_part = [=, this](double s) { return 4.0 * kPi / omega * s0 * std::pow(R + s, 1.0 - nu_); };
      b_part = [=, this](double s) { return 4.0 * kPi / omega * c0 * std::pow(R + s, 1.0 - nu_); };
    } else {
      // J_mu(t) = P(t) cos(t - theta) - Q(t) sin(t - theta), theta = (2 mu + 1) pi / 4,
      // with P, Q built from J_mu and Y_mu.
      const double mu = 0.5 * dd - 1.0;
      const double theta = (2.0 * mu + 1.0) * kPi / 4.0;
      const double phi = omega * R - theta;
      const double cp = std::cos(phi), sp = std::sin(phi);
      const double scale = std::pow(2.0 * kPi, 0.5 * dd) * std::pow(omega, -mu);
      auto pq = [=](double t) {
        const double j = boost::math::cyl_bessel_j(mu, t);
        const double y = boost::math::cyl_neumann(mu, t);
        const double ct = std::cos(t - theta), st = std::sin(t - theta);
        return std::pair<double, double>{j * ct + y * st, -j * st + y * ct};
      };
      a_part = [=, this](double s) {
        const double r = R + s;
        const auto [p, q] = pq(omega * r);
        return scale * std::pow(r, dd - 1.0 - nu_ - mu) * (p * cp - q * sp);
      };
      b_part = [=, this](double s) {
        const double r = R + s;
        const auto [p, q] = pq(omega * r);
        return scale * std::pow(r, dd - 1.0 - nu_ - mu) * (-p * sp - q * cp);
      };
    }
    const auto [vc, ec] = cos_.integrate(a_part, omega);
    const auto [vs, es] = sin_.integrate(b_part, omega);
    return {vc + vs, std::fabs(ec * vc) + std::fabs(es * vs)};
  }

  std::size_t d_;
  double nu_, c_, sigma_, radius_;
  boost::math::quadrature::ooura_fourier_cos<double> cos_;
  boost::math::quadrature::ooura_fourier_sin<double> sin_;
};

}  // namespace

DirectSum direct_sum_oracle(double nu, const LatticeMatrix& lattice, std::span<const double> x,
                            std::span<const double> y, double radius, double tolerance) {
  const std::size_t d = lattice.dim();
  if (x.size() != d || y.size() != d) throw InvalidLatticeError("x and y must have length d");
  if (!(nu > static_cast<double>(d))) throw DomainError("direct_sum_oracle: need nu > d");
  if (!(radius > 0.0)) throw DomainError("direct_sum_oracle: radius must be positive");

  const double sigma = radius / kWindowReach;
  const double c = kWindowCentre * sigma;
  const double q_max = kFrequencyCut / sigma;

  DirectSum out{};
  const RealVector cy = lattice.apply_transpose(y);
  out.value = windowed_sum(nu, lattice, x, cy, radius, c, sigma, &out.terms);

  // Reciprocal vectors k with |y + k| < q_max, i.e. k in the ball around -y.
  RealVector minus_y(y.begin(), y.end());
  for (double& v : minus_y) v = -v;
  const LatticeMatrix dual = lattice.reciprocal();
  const LatticePoints ks = points_in_ball(dual, minus_y, q_max);
  RadialTransformer transform(d, nu, c, sigma, radius);
  std::map<double, RadialTransform> cache;
  ComplexKahanAccumulator corr;
  double quad_error = 0.0;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const auto k = ks.point(i);
    double q2 = 0.0, phase = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
      const double xi = y[j] + k[j];
      q2 += xi * xi;
      phase += xi * x[j];
    }
    const double q = std::sqrt(q2);
    // distinct k with equal |y + k| share H; round so lattice symmetry is seen
    const double key = std::ldexp(std::nearbyint(std::ldexp(q, 40)), -40);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, transform(q)).first;
    phase -= std::nearbyint(phase);
    corr.add(it->second.value * Complex(std::cos(2.0 * kPi * phase), -std::sin(2.0 * kPi * phase)));
    quad_error += it->second.error;
  }
  out.value += corr.value() / lattice.volume();

  // Largest dropped frequency term, bounded through the Gaussian edge of w.
  const double dd = static_cast<double>(d);
  const double dropped = sphere_kernel(d, 0.0) * std::pow(c, dd - nu) * sigma *
                         std::exp(-kPi * kPi * sigma * sigma * q_max * q_max) / lattice.volume();
  out.tail_estimate = quad_error / lattice.volume() + dropped;
  if (out.tail_estimate > tolerance) {
    throw InsufficientRadiusError("direct sum: radius " + std::to_string(radius) +
                                  " leaves an estimated error of " +
                                  std::to_string(out.tail_estimate));
  }
  return out;
}

}  // namespace epstein::reference
