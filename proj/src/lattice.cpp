#include "epstein/lattice.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <string>

#include "epstein/errors.hpp"

namespace epstein {

namespace {

using MatrixRM = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

void check_length(std::size_t dim, std::span<const double> v, const char* what) {
  if (v.size() != dim) {
    throw InvalidLatticeError(std::string(what) + " has length " + std::to_string(v.size()) +
                              ", lattice dimension is " + std::to_string(dim));
  }
}

RealVector mat_vec(std::size_t dim, const std::vector<double>& m, std::span<const double> v,
                   bool transpose) {
  RealVector out(dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < dim; ++j) {
      acc += (transpose ? m[j * dim + i] : m[i * dim + j]) * v[j];
    }
    out[i] = acc;
  }
  return out;
}

}  // namespace

std::vector<double> singular_values(std::size_t dim, std::span<const double> row_major) {
  const auto d = static_cast<Eigen::Index>(dim);
  Eigen::Map<const MatrixRM> a(row_major.data(), d, d);
  const Eigen::VectorXd sv = Eigen::JacobiSVD<MatrixRM>(a).singularValues();
  return {sv.data(), sv.data() + sv.size()};
}

LatticeMatrix::LatticeMatrix(std::size_t dim, std::vector<double> entries)
    : dim_(dim), a_(std::move(entries)) {
  if (dim_ == 0) throw InvalidLatticeError("lattice dimension must be positive");
  if (a_.size() != dim_ * dim_) {
    throw InvalidLatticeError("expected " + std::to_string(dim_ * dim_) + " matrix entries, got " +
                              std::to_string(a_.size()));
  }
  for (double v : a_) {
    if (!std::isfinite(v)) throw InvalidLatticeError("lattice matrix has a non-finite entry");
  }

  const auto d = static_cast<Eigen::Index>(dim_);
  Eigen::Map<const MatrixRM> a(a_.data(), d, d);
  Eigen::FullPivLU<MatrixRM> lu(a);
  const double det = lu.determinant();
  if (!(std::abs(det) > 0.0) || !lu.isInvertible()) {
    throw InvalidLatticeError("lattice matrix is singular");
  }
  volume_ = std::abs(det);

  MatrixRM inv = lu.inverse();
  inv_.assign(inv.data(), inv.data() + dim_ * dim_);

  const auto sigma = singular_values(dim_, a_);
  sigma_max_ = sigma.front();
  sigma_min_ = sigma.back();
  if (!(sigma_min_ > 0.0)) throw InvalidLatticeError("lattice matrix is singular");
  cond_ = std::max(1.0, sigma_max_ / sigma_min_);
}

LatticeMatrix LatticeMatrix::from_row_major(std::size_t dim, std::span<const double> entries) {
  return LatticeMatrix(dim, std::vector<double>(entries.begin(), entries.end()));
}

LatticeMatrix LatticeMatrix::identity(std::size_t dim) {
  std::vector<double> m(dim * dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) m[i * dim + i] = 1.0;
  return LatticeMatrix(dim, std::move(m));
}

LatticeMatrix LatticeMatrix::diagonal(std::span<const double> diag) {
  const std::size_t dim = diag.size();
  std::vector<double> m(dim * dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) m[i * dim + i] = diag[i];
  return LatticeMatrix(dim, std::move(m));
}

RealVector LatticeMatrix::apply(std::span<const double> v) const {
  check_length(dim_, v, "vector");
  return mat_vec(dim_, a_, v, false);
}

RealVector LatticeMatrix::apply_inverse(std::span<const double> v) const {
  check_length(dim_, v, "vector");
  return mat_vec(dim_, inv_, v, false);
}

RealVector LatticeMatrix::apply_transpose(std::span<const double> v) const {
  check_length(dim_, v, "vector");
  return mat_vec(dim_, a_, v, true);
}

RealVector LatticeMatrix::apply_inverse_transpose(std::span<const double> v) const {
  check_length(dim_, v, "vector");
  return mat_vec(dim_, inv_, v, true);
}

LatticeMatrix LatticeMatrix::reciprocal() const {
  std::vector<double> m(dim_ * dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) m[i * dim_ + j] = inv_[j * dim_ + i];
  }
  return LatticeMatrix(dim_, std::move(m));
}

LatticeMatrix LatticeMatrix::scaled(double s) const {
  std::vector<double> m(a_);
  for (double& v : m) v *= s;
  return LatticeMatrix(dim_, std::move(m));
}

double condition_number(const LatticeMatrix& lattice) { return lattice.condition(); }

UnitVolumeProblem rescale_to_unit_volume(const LatticeMatrix& lattice, std::span<const double> x,
                                         std::span<const double> y) {
  const std::size_t d = lattice.dim();
  check_length(d, x, "x");
  check_length(d, y, "y");
  const double a = std::pow(lattice.volume(), 1.0 / static_cast<double>(d));
  RealVector xs(x.begin(), x.end());
  RealVector ys(y.begin(), y.end());
  for (double& v : xs) v /= a;
  for (double& v : ys) v *= a;
  return UnitVolumeProblem{lattice.scaled(1.0 / a), std::move(xs), std::move(ys), a};
}

CellProjection project_into_cell(const LatticeMatrix& lattice, std::span<const double> x) {
  const std::size_t d = lattice.dim();
  check_length(d, x, "x");
  const RealVector w = lattice.apply_inverse(x);
  CellProjection out;
  out.coords.resize(d);
  RealVector shift_coords(d);
  for (std::size_t i = 0; i < d; ++i) {
    const double n = std::floor(w[i] + 0.5);
    shift_coords[i] = n;
    out.coords[i] = static_cast<std::int64_t>(n);
  }
  out.shift = lattice.apply(shift_coords);
  out.reduced.resize(d);
  bool on_lattice = true;
  for (std::size_t i = 0; i < d; ++i) {
    out.reduced[i] = x[i] - out.shift[i];
    const double tol = kSnapTolerance * std::max(1.0, std::fabs(w[i]));
    on_lattice = on_lattice && (std::fabs(w[i] - shift_coords[i]) <= tol);
  }
  // Lattice points, up to rounding in A^{-1}x, reduce to exactly zero.
  if (on_lattice) std::fill(out.reduced.begin(), out.reduced.end(), 0.0);
  return out;
}

namespace {

// Fincke-Pohst style descent over the Cholesky factor of the Gram matrix.
struct Enumerator {
  const LatticeMatrix& lattice;
  std::span<const double> center;
  const Eigen::MatrixXd& r;
  const RealVector& t;
  std::size_t d;
  double r2;
  double slack;
  std::size_t max_points;
  std::vector<std::int64_t> z;
  RealVector pos;
  LatticePoints& out;

  void run(std::size_t level, double budget) {
    const std::size_t i = level - 1;
    const auto ii = static_cast<Eigen::Index>(i);
    double offset = 0.0;
    for (std::size_t j = i + 1; j < d; ++j) {
      offset += r(ii, static_cast<Eigen::Index>(j)) * (static_cast<double>(z[j]) - t[j]);
    }
    const double rii = r(ii, ii);
    const double c = t[i] - offset / rii;
    const double half = std::sqrt(std::max(budget, 0.0)) / rii + slack;
    const auto lo = static_cast<std::int64_t>(std::ceil(c - half));
    const auto hi = static_cast<std::int64_t>(std::floor(c + half));
    for (std::int64_t k = lo; k <= hi; ++k) {
      z[i] = k;
      if (i == 0) {
        emit();
        continue;
      }
      const double e = rii * (static_cast<double>(k) - t[i]) + offset;
      const double rest = budget - e * e;
      if (rest > -slack * (1.0 + r2)) run(level - 1, rest);
    }
  }

  // Exact membership test on the actual coordinates.
  void emit() {
    double dist2 = 0.0;
    for (std::size_t p = 0; p < d; ++p) {
      double acc = 0.0;
      for (std::size_t q = 0; q < d; ++q) acc += lattice(p, q) * static_cast<double>(z[q]);
      pos[p] = acc;
      const double diff = acc - center[p];
      dist2 += diff * diff;
    }
    if (dist2 > r2) return;
    if (out.size() >= max_points) {
      throw ResourceLimitError("lattice enumeration exceeds " + std::to_string(max_points) +
                               " points");
    }
    out.positions.insert(out.positions.end(), pos.begin(), pos.end());
    out.coords.insert(out.coords.end(), z.begin(), z.end());
  }
};

}  // namespace

LatticePoints points_in_ball(const LatticeMatrix& lattice, std::span<const double> center,
                             double radius, std::size_t max_points) {
  const std::size_t d = lattice.dim();
  check_length(d, center, "center");
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw DomainError("enumeration radius must be positive and finite");
  }

  // |A(z - t)|^2 = |R(z - t)|^2 with A^T A = R^T R, R upper triangular.
  const auto n = static_cast<Eigen::Index>(d);
  Eigen::Map<const MatrixRM> a(lattice.row_major().data(), n, n);
  const Eigen::MatrixXd gram = a.transpose() * a;
  const Eigen::MatrixXd r = gram.llt().matrixU();
  const RealVector t = lattice.apply_inverse(center);

  const double r2 = radius * radius;
  const double slack = 1e-9 * (1.0 + radius);

  LatticePoints out;
  out.dim = d;
  // rough count, volume of the ball over the cell volume
  const double expect = std::pow(radius, static_cast<double>(d)) * 5.3 / lattice.volume();
  if (expect < 1e7) {
    const auto cap = static_cast<std::size_t>(expect) + 16;
    out.positions.reserve(cap * d);
    out.coords.reserve(cap * d);
  }
  Enumerator e{lattice, center, r, t, d, r2, slack, max_points,
               std::vector<std::int64_t>(d, 0), RealVector(d), out};
  e.run(d, r2);
  return out;
}

}  // namespace epstein
