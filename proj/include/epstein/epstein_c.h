#ifndef EPSTEIN_C_H
#define EPSTEIN_C_H

/* Plain C boundary for host-language wrappers. A is d x d row-major with
   lattice vectors as columns; x and y have length d. Inputs are copied. */

#ifdef __cplusplus
extern "C" {
#endif

enum {
  EPSTEIN_OK = 0,
  /* nu = d with y on the reciprocal lattice; *re and *im are set to NaN. */
  EPSTEIN_POLE = 1,
  EPSTEIN_ARGUMENT_ERROR = 2,
  EPSTEIN_DOMAIN_ERROR = 3,
  EPSTEIN_NUMERICAL_ERROR = 4
};

int epstein_zeta_c(double nu, unsigned dim, const double* A, const double* x, const double* y,
                   double* re, double* im);
int epstein_zeta_reg_c(double nu, unsigned dim, const double* A, const double* x,
                       const double* y, double* re, double* im);

/* Message for the last failing call on this thread, or "" if none. */
const char* epstein_last_error(void);

#ifdef __cplusplus
}
#endif

#endif
