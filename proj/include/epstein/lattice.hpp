#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace epstein {

/// A point in direct space (x) or reciprocal space (y).
using RealVector = std::vector<double>;

/// Regular d x d generator matrix of the lattice A Z^d.
///
/// Column-generator convention: lattice points are A z for integer column
/// vectors z, so the columns of A are the basis vectors. The reciprocal
/// lattice is generated by A^{-T}. Entries are stored row-major, which is
/// also the order accepted by from_row_major().
///
/// Instances are immutable; volume, inverse and condition number are
/// computed once at construction.
class LatticeMatrix {
 public:
  /// Throws InvalidLatticeError if the entry count is not dim*dim, an entry
  /// is not finite, or the matrix is singular.
  static LatticeMatrix from_row_major(std::size_t dim, std::span<const double> entries);
  static LatticeMatrix identity(std::size_t dim);
  static LatticeMatrix diagonal(std::span<const double> diag);

  std::size_t dim() const { return dim_; }
  double operator()(std::size_t row, std::size_t col) const { return a_[row * dim_ + col]; }
  std::span<const double> row_major() const { return a_; }
  std::span<const double> inverse_row_major() const { return inv_; }

  /// |det A|
  double volume() const { return volume_; }
  /// Spectral condition number sigma_max / sigma_min.
  double condition() const { return cond_; }
  double sigma_max() const { return sigma_max_; }
  double sigma_min() const { return sigma_min_; }

  RealVector apply(std::span<const double> v) const;
  RealVector apply_inverse(std::span<const double> v) const;
  RealVector apply_transpose(std::span<const double> v) const;
  RealVector apply_inverse_transpose(std::span<const double> v) const;

  /// Generator A^{-T} of the reciprocal lattice.
  LatticeMatrix reciprocal() const;
  /// Generator s*A.
  LatticeMatrix scaled(double s) const;

 private:
  LatticeMatrix(std::size_t dim, std::vector<double> entries);

  std::size_t dim_ = 0;
  std::vector<double> a_;
  std::vector<double> inv_;
  double volume_ = 0.0;
  double sigma_max_ = 0.0;
  double sigma_min_ = 0.0;
  double cond_ = 0.0;
};

/// Singular values of a row-major d x d matrix in descending order (Jacobi SVD).
std::vector<double> singular_values(std::size_t dim, std::span<const double> row_major);

/// Spectral condition number of L.
double condition_number(const LatticeMatrix& lattice);

struct UnitVolumeProblem {
  LatticeMatrix lattice;
  RealVector x;
  RealVector y;
  /// a = V^{1/d}; the lattice was divided by a, x by a, y multiplied by a.
  double scale;
};

/// Rescale (A, x, y) to (A/a, x/a, a y) with a = |det A|^{1/d}.
UnitVolumeProblem rescale_to_unit_volume(const LatticeMatrix& lattice, std::span<const double> x,
                                         std::span<const double> y);

struct CellProjection {
  /// x - v, inside A[-1/2, 1/2)^d.
  RealVector reduced;
  /// v = A floor(A^{-1} x + 1/2), a lattice vector.
  RealVector shift;
  /// floor(A^{-1} x + 1/2), the integer coordinates of v.
  std::vector<std::int64_t> coords;
};

/// Relative distance in integer coordinates below which x counts as a
/// lattice point; reduced is then set to exactly zero.
inline constexpr double kSnapTolerance = 4e-15;

CellProjection project_into_cell(const LatticeMatrix& lattice, std::span<const double> x);

/// Lattice points A z with |A z - center| <= radius, stored flat.
struct LatticePoints {
  std::size_t dim = 0;
  std::vector<double> positions;
  std::vector<std::int64_t> coords;

  std::size_t size() const { return dim == 0 ? 0 : positions.size() / dim; }
  std::span<const double> point(std::size_t i) const {
    return std::span<const double>(positions).subspan(i * dim, dim);
  }
  std::span<const std::int64_t> index(std::size_t i) const {
    return std::span<const std::int64_t>(coords).subspan(i * dim, dim);
  }
};

inline constexpr std::size_t kDefaultPointCap = 100'000'000;

/// All lattice points in the closed ball of the given radius, ordered
/// lexicographically by integer coordinates read from the last one. Throws ResourceLimitError when
/// more than max_points points would be produced.
LatticePoints points_in_ball(const LatticeMatrix& lattice, std::span<const double> center,
                             double radius, std::size_t max_points = kDefaultPointCap);

}  // namespace epstein
