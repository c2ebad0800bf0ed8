/* Exercises the C boundary from plain C. */
#include <math.h>
#include <stdio.h>
#include <string.h>

#include "epstein/epstein_c.h"

static int failures = 0;

#define EXPECT(cond)                                          \
  do {                                                        \
    if (!(cond)) {                                            \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                             \
    }                                                         \
  } while (0)

int main(void) {
  const double I3[9] = {1, 0, 0, 0, 1, 0, 0, 0, 1};
  const double zero[3] = {0, 0, 0};
  const double half[3] = {0.5, 0.5, 0.5};
  double re = 0, im = 0;

  EXPECT(epstein_zeta_c(1.0, 3, I3, zero, half, &re, &im) == EPSTEIN_OK);
  EXPECT(fabs(re + 1.7475645946331821906) < 1e-14 * 1.75);
  EXPECT(fabs(im) < 1e-15);
  EXPECT(strcmp(epstein_last_error(), "") == 0);

  EXPECT(epstein_zeta_c(3.0, 3, I3, zero, zero, &re, &im) == EPSTEIN_POLE);
  EXPECT(isnan(re) && isnan(im));

  EXPECT(epstein_zeta_reg_c(3.0, 3, I3, half, zero, &re, &im) == EPSTEIN_OK);
  EXPECT(isfinite(re));

  const double one[3] = {1, 0, 0};
  EXPECT(epstein_zeta_reg_c(1.5, 3, I3, zero, one, &re, &im) == EPSTEIN_DOMAIN_ERROR);
  EXPECT(isnan(re));
  EXPECT(strlen(epstein_last_error()) > 0);

  const double singular[4] = {1, 2, 2, 4};
  EXPECT(epstein_zeta_c(1.0, 2, singular, zero, zero, &re, &im) == EPSTEIN_ARGUMENT_ERROR);
  EXPECT(epstein_zeta_c(1.0, 0, I3, zero, zero, &re, &im) == EPSTEIN_ARGUMENT_ERROR);
  EXPECT(epstein_zeta_c(1.0, 3, NULL, zero, zero, &re, &im) == EPSTEIN_ARGUMENT_ERROR);
  EXPECT(epstein_zeta_c(1.0, 3, I3, zero, zero, NULL, &im) == EPSTEIN_ARGUMENT_ERROR);

  /* a successful call clears the message */
  EXPECT(epstein_zeta_c(2.0, 1, I3, zero, zero, &re, &im) == EPSTEIN_OK);
  EXPECT(fabs(re - 3.2898681336964529) < 1e-15 * 3.3);
  EXPECT(strcmp(epstein_last_error(), "") == 0);

  if (failures) fprintf(stderr, "%d failure(s)\n", failures);
  return failures ? 1 : 0;
}
