#include "hookchar/hookchar.h"

#include <stdio.h>
#include <string.h>

static int failures = 0;

#define EXPECT(cond)                                            \
  do {                                                          \
    if (!(cond)) {                                              \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                               \
    }                                                           \
  } while (0)

static void expect_render(const hc_expansion* f, const char* want) {
  char* s = NULL;
  EXPECT(hc_expansion_render(f, 0, &s) == HC_OK);
  if (s) {
    if (strcmp(s, want) != 0) {
      fprintf(stderr, "rendered '%s', expected '%s'\n", s, want);
      ++failures;
    }
    hc_string_free(s);
  }
}

int main(void) {
  hc_expansion* f = NULL;
  int proven = -1;
  EXPECT(hc_hook_formula("1,1,1,1", 0, 1, &f, &proven) == HC_OK);
  EXPECT(proven == 1);
  expect_render(f, "s[6] + s[4,1] + s[3,1] + s[1,1,1]");
  EXPECT(hc_expansion_size(f) == 4);

  hc_expansion* alt = NULL;
  EXPECT(hc_alternant_formula(4, 1, &alt) == HC_OK);
  EXPECT(hc_expansion_equal(f, alt) == 1);
  EXPECT(hc_expansion_equal(f, NULL) == -1);

  hc_expansion* two = NULL;
  EXPECT(hc_expansion_restrict(f, "two_rows", &two) == HC_OK);
  expect_render(two, "s[6] + s[4,1] + s[3,1]");
  hc_expansion* perp = NULL;
  EXPECT(hc_expansion_e_perp(f, 1, &perp) == HC_OK);
  EXPECT(hc_expansion_size(perp) > 0);

  hc_poly* p = NULL;
  EXPECT(hc_expansion_specialize2(two, &p) == HC_OK);
  char* s = NULL;
  EXPECT(hc_poly_render(p, 1, &s) == HC_OK);
  EXPECT(s && s[0] == '[');
  hc_string_free(s);
  hc_poly_free(p);

  hc_expansion* unit = NULL;
  EXPECT(hc_hook_formula("4", 4, 1, &unit, NULL) == HC_OK);
  expect_render(unit, "1");

  hc_expansion* bad = NULL;
  EXPECT(hc_hook_formula("3,x", 0, 1, &bad, NULL) == HC_ERR_PARSE);
  EXPECT(strstr(hc_last_error(), "malformed partition") != NULL);
  EXPECT(bad == NULL);
  EXPECT(hc_hook_formula("2,1", 4, 1, &bad, NULL) == HC_ERR_DOMAIN);
  EXPECT(hc_hook_formula(NULL, 0, 1, &bad, NULL) == HC_ERR_DOMAIN);
  EXPECT(hc_expansion_restrict(f, "columns", &bad) == HC_ERR_DOMAIN);
  EXPECT(hc_paths_table(8, 0, 1, 0, 0, &s) == HC_OK);
  hc_string_free(s);
  EXPECT(hc_pieri_table(5, 1, "NNNN", 0, &s) == HC_ERR_DOMAIN);

  EXPECT(hc_gf_T(4, 0, &p) == HC_OK);
  EXPECT(hc_poly_render(p, 0, &s) == HC_OK);
  EXPECT(strcmp(s, "1 + q*z + q^2*z + q^3*z^2") == 0);
  hc_string_free(s);
  hc_poly_free(p);
  EXPECT(hc_last_error()[0] == '\0');

  hc_report* rep = NULL;
  EXPECT(hc_verify("gf", 8, &rep) == HC_OK);
  EXPECT(hc_report_count(rep) == 7);
  EXPECT(hc_report_failed(rep) == 0);
  EXPECT(hc_report_render(rep, 0, 0, &s) == HC_OK);
  EXPECT(strstr(s, "summary: 7 passed, 0 failed, 0 reported") != NULL);
  hc_string_free(s);
  hc_report_free(rep);
  EXPECT(hc_verify("nope", 8, &rep) == HC_ERR_DOMAIN);

  EXPECT(hc_fixtures(NULL, 0, &s) == HC_OK);
  EXPECT(strstr(s, "mu=2,2: s[4] + s[2,1] + s[2]") != NULL);
  hc_string_free(s);
  EXPECT(hc_fixtures("/nonexistent.json", 0, &s) == HC_ERR_IO);

  EXPECT(hc_two_column_formula(5, 1, &bad) == HC_OK);
  expect_render(bad, "s[6,2] + s[4,2]");
  hc_expansion_free(bad);
  EXPECT(strcmp(hc_version(), "0.1.0") == 0);

  hc_expansion_free(f);
  hc_expansion_free(alt);
  hc_expansion_free(two);
  hc_expansion_free(perp);
  hc_expansion_free(unit);
  if (failures) fprintf(stderr, "%d failures\n", failures);
  return failures ? 1 : 0;
}
