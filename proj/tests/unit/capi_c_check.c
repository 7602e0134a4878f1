/* Compiled as C99: the public header must not leak C++ constructs. */
#include <stdio.h>
#include <string.h>

#include "gaw.h"

int main(void) {
  if (gaw_version() == NULL || strlen(gaw_version()) == 0) {
    fprintf(stderr, "gaw_version() empty\n");
    return 1;
  }
  gaw_rng* rng = gaw_rng_new(1);
  if (rng == NULL) return 1;
  double u = gaw_rng_next_unit(rng);
  if (!(u >= 0.0 && u < 1.0)) {
    fprintf(stderr, "next_unit out of range: %f\n", u);
    return 1;
  }
  int64_t v = 0;
  if (gaw_rng_next_int(rng, 5, 5, &v) != GAW_OK || v != 5) {
    fprintf(stderr, "next_int(5,5) failed\n");
    return 1;
  }
  if (gaw_rng_next_int(rng, 3, 1, &v) != GAW_ERR_INVALID_ARGUMENT) {
    fprintf(stderr, "next_int(3,1) should fail\n");
    return 1;
  }
  gaw_rng_free(rng);
  printf("C header check ok (engine %s)\n", gaw_version());
  return 0;
}
