#ifndef HOOKCHAR_H
#define HOOKCHAR_H

#include <stddef.h>

#if defined(HC_BUILDING_LIBRARY)
#define HC_API __attribute__((visibility("default")))
#else
#define HC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hc_status {
  HC_OK = 0,
  HC_ERR_INVALID_ARGUMENT = 1,
  HC_ERR_DOMAIN = 2,
  HC_ERR_LIMIT = 3,
  HC_ERR_PARSE = 4,
  HC_ERR_CHECKSUM = 5,
  HC_ERR_IO = 6,
  HC_ERR_INTERNAL = 7
} hc_status;

typedef struct hc_expansion hc_expansion;
typedef struct hc_poly hc_poly;
typedef struct hc_report hc_report;

/* Message for the most recent failing call on this thread; "" after success. */
HC_API const char* hc_last_error(void);
HC_API const char* hc_version(void);

/* Strings returned through char** are owned by the caller. */
HC_API void hc_string_free(char* s);

/* mu is "a,b,c". n <= 0 means n = |mu|. proven may be NULL. */
HC_API hc_status hc_hook_formula(const char* mu, int n, int r, hc_expansion** out, int* proven);
HC_API hc_status hc_alternant_formula(int n, int r, hc_expansion** out);
/* lifted != 0 selects the lifted form, otherwise the path form. */
HC_API hc_status hc_two_column_formula(int n, int lifted, hc_expansion** out);

/* shape_class: hooks, one_part, V<b>, two-column, two_rows. */
HC_API hc_status hc_expansion_restrict(const hc_expansion* f, const char* shape_class, hc_expansion** out);
HC_API hc_status hc_expansion_e_perp(const hc_expansion* f, int k, hc_expansion** out);
HC_API hc_status hc_expansion_specialize2(const hc_expansion* f, hc_poly** out);
HC_API hc_status hc_expansion_render(const hc_expansion* f, int json, char** out);
/* 1 if equal, 0 if not, -1 on a NULL argument. */
HC_API int hc_expansion_equal(const hc_expansion* a, const hc_expansion* b);
HC_API size_t hc_expansion_size(const hc_expansion* f);
HC_API void hc_expansion_free(hc_expansion* f);

HC_API hc_status hc_gf_T(int n, int s, hc_poly** out);
HC_API hc_status hc_hat_gf(int n_plus_1, int j, hc_poly** out);
HC_API hc_status hc_poly_render(const hc_poly* p, int json, char** out);
HC_API void hc_poly_free(hc_poly* p);

/* One row per path of T_{n,s}: word, area, ht and the hook for (r, maj). */
HC_API hc_status hc_paths_table(int n, int s, int r, int maj, int json, char** out);
/* Plus/minus images for one path word of T_{n,0}, or every path if path is NULL. */
HC_API hc_status hc_pieri_table(int n, int k, const char* path, int json, char** out);

HC_API hc_status hc_verify(const char* suite, int max_n, hc_report** out);
/* 1 if any instance failed. */
HC_API int hc_report_failed(const hc_report* rep);
HC_API size_t hc_report_count(const hc_report* rep);
HC_API hc_status hc_report_render(const hc_report* rep, int json, int timing, char** out);
HC_API void hc_report_free(hc_report* rep);

/* path NULL selects the bundled fixture. */
HC_API hc_status hc_fixtures(const char* path, int json, char** out);

#ifdef __cplusplus
}
#endif

#endif
