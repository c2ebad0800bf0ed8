#include "epstein/epstein_c.h"

#include <cmath>
#include <limits>
#include <string>

#include "epstein/epstein_zeta.hpp"
#include "epstein/errors.hpp"

namespace {

thread_local std::string last_error;

int run(double nu, unsigned dim, const double* A, const double* x, const double* y, double* re,
        double* im, bool regularised) {
  last_error.clear();
  if (re == nullptr || im == nullptr) {
    last_error = "null output pointer";
    return EPSTEIN_ARGUMENT_ERROR;
  }
  const double nan = std::numeric_limits<double>::quiet_NaN();
  *re = nan;
  *im = nan;
  if (dim == 0 || A == nullptr || x == nullptr || y == nullptr) {
    last_error = "dimension must be positive and arrays non-null";
    return EPSTEIN_ARGUMENT_ERROR;
  }
  try {
    epstein::EpsteinQuery q{nu,
                            epstein::LatticeMatrix::from_row_major(
                                dim, std::span<const double>(A, std::size_t{dim} * dim)),
                            epstein::RealVector(x, x + dim), epstein::RealVector(y, y + dim),
                            regularised};
    const auto out = epstein::evaluate(q);
    if (epstein::is_pole(out)) return EPSTEIN_POLE;
    const auto z = std::get<epstein::Complex>(out);
    *re = z.real();
    *im = z.imag();
    return EPSTEIN_OK;
  } catch (const epstein::InvalidLatticeError& e) {
    last_error = e.what();
    return EPSTEIN_ARGUMENT_ERROR;
  } catch (const epstein::UnsupportedDimensionError& e) {
    last_error = e.what();
    return EPSTEIN_ARGUMENT_ERROR;
  } catch (const epstein::DomainError& e) {
    last_error = e.what();
    return EPSTEIN_DOMAIN_ERROR;
  } catch (const std::exception& e) {
    last_error = e.what();
    return EPSTEIN_NUMERICAL_ERROR;
  }
}

}  // namespace

extern "C" int epstein_zeta_c(double nu, unsigned dim, const double* A, const double* x,
                              const double* y, double* re, double* im) {
  return run(nu, dim, A, x, y, re, im, false);
}

extern "C" int epstein_zeta_reg_c(double nu, unsigned dim, const double* A, const double* x,
                                  const double* y, double* re, double* im) {
  return run(nu, dim, A, x, y, re, im, true);
}

extern "C" const char* epstein_last_error(void) { return last_error.c_str(); }
