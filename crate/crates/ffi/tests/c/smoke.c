#include <stdio.h>
#include <string.h>

#include "chowcalc.h"

static int check(ChowcalcStatus status, const char *what) {
  if (status != CHOWCALC_STATUS_OK) {
    fprintf(stderr, "%s failed (%d): %s\n", what, (int)status, chowcalc_last_error());
    return 1;
  }
  return 0;
}

int main(void) {
  ChowcalcClass *line = NULL, *milnor = NULL, *segre = NULL;
  char *text = NULL;
  uint32_t smooth[] = {1};

  if (check(chowcalc_segre_linear_subspace(1, 4, &line), "segre_linear_subspace")) return 1;
  if (check(chowcalc_milnor_ci(smooth, 1, 2, line, true, &milnor), "milnor_ci")) return 1;
  if (check(chowcalc_class_render(milnor, CHOWCALC_FORMAT_TEXT, &text), "render")) return 1;
  printf("milnor %s\n", text);
  chowcalc_string_free(text);

  chowcalc_class_free(milnor);
  if (check(chowcalc_class_parse("0,0,2,-4,10", 4, &milnor), "parse")) return 1;
  if (check(chowcalc_invert_milnor(milnor, 3, &segre), "invert_milnor")) return 1;
  if (check(chowcalc_class_render(segre, CHOWCALC_FORMAT_MACHINE, &text), "render")) return 1;
  printf("segre %s\n", text);
  chowcalc_string_free(text);

  ChowcalcClass *bad = NULL;
  ChowcalcStatus status = chowcalc_class_parse("1/0", 2, &bad);
  printf("bad %d %s\n", (int)status, bad == NULL ? "null" : "set");

  chowcalc_class_free(line);
  chowcalc_class_free(milnor);
  chowcalc_class_free(segre);
  return 0;
}
