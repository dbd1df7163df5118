/* C interface to the hyperbolic billiard library. Strings returned through
   `char**` out-parameters are owned by the caller and released with
   hb_string_free. Every call returns an hb_status; on failure hb_last_error
   describes the error of the calling thread. */
#ifndef HYPBILL_H
#define HYPBILL_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(HB_BUILDING_LIBRARY)
#define HB_API __attribute__((visibility("default")))
#else
#define HB_API
#endif

typedef enum {
    HB_OK = 0,
    HB_DOMAIN_ERROR = 2,
    HB_INPUT_ERROR = 3,
    HB_INTERNAL_ERROR = 4
} hb_status;

typedef enum {
    HB_FORMAT_DEFAULT = 0,
    HB_FORMAT_JSON,
    HB_FORMAT_CSV,
    HB_FORMAT_TEXT,
    HB_FORMAT_SVG
} hb_format;

typedef struct hb_polygon hb_polygon;
typedef struct hb_subshift hb_subshift;

/* Command-line style options. has_* flags mark the fields that override the
   config file. */
typedef struct {
    hb_format format;
    int has_seed;
    uint64_t seed;
    int has_depth;
    int depth;
    int has_budget;
    uint64_t budget;
    int has_start;
    double theta_rad;
    double phi_rad;
    int has_n_future;
    int n_future;
    int has_n_past;
    int n_past;
    const char* word; /* NULL when absent */
} hb_options;

HB_API void hb_options_init(hb_options* opts);

/* Message and error name ("DegenerateArea", ...) of the last failure on this
   thread; empty strings after a success. */
HB_API const char* hb_last_error(void);
HB_API const char* hb_last_error_name(void);

HB_API void hb_string_free(char* s);

/* Polygons. */
HB_API hb_status hb_polygon_from_json(const char* spec_json, hb_polygon** out);
HB_API void hb_polygon_free(hb_polygon* p);
HB_API int hb_polygon_sides(const hb_polygon* p);
HB_API double hb_polygon_area(const hb_polygon* p);
/* Forbidden-set JSON of the polygon's closure shift. */
HB_API hb_status hb_polygon_forbidden_json(const hb_polygon* p, char** out);
/* Periodic orbit for a word of side labels: endpoints of the arc hitting word[0]. */
HB_API hb_status hb_polygon_decode(const hb_polygon* p, const char* word, double* theta_rad, double* phi_rad);
/* Side-label code of n_future bounces from the arc (theta, phi); out receives
   the code text. *terminated is set when the orbit hits a vertex; a start
   arc that already ends in one yields an empty code. */
HB_API hb_status hb_polygon_code(const hb_polygon* p, double theta_rad, double phi_rad, int n_future, char** out,
                                 int* terminated);

/* Subshifts. */
HB_API hb_status hb_subshift_from_json(const char* forbidden_json, hb_subshift** out);
/* "even_shift", "single_defect", "golden_mean". */
HB_API hb_status hb_subshift_builtin(const char* name, hb_subshift** out);
HB_API void hb_subshift_free(hb_subshift* s);
HB_API int hb_subshift_contains(const hb_subshift* s, const char* word);
/* Dyadic Hausdorff distance 2^-exponent; *exponent = -1 when the languages
   agree through central windows of max_m. */
HB_API hb_status hb_subshift_distance(const hb_subshift* x, const hb_subshift* y, int max_m, int* exponent);

/* Commands. config_text is the content of a --config file; on success *out
   holds the command output, released with hb_result_free. */
typedef struct hb_result hb_result;

HB_API hb_status hb_cmd_validate(const char* config_text, const hb_options* opts, hb_result** out);
HB_API hb_status hb_cmd_simulate(const char* config_text, const hb_options* opts, hb_result** out);
HB_API hb_status hb_cmd_decode(const char* config_text, const hb_options* opts, hb_result** out);
HB_API hb_status hb_cmd_analyze(const char* config_text, const hb_options* opts, hb_result** out);
HB_API hb_status hb_cmd_distance(const char* config_text, const hb_options* opts, hb_result** out);
HB_API hb_status hb_cmd_converge(const char* config_text, const hb_options* opts, hb_result** out);
HB_API hb_status hb_cmd_render(const char* config_text, const hb_options* opts, hb_result** out);

HB_API const char* hb_result_body(const hb_result* r);
/* Side outputs, written next to --out with the given file suffix. */
HB_API size_t hb_result_attachment_count(const hb_result* r);
HB_API const char* hb_result_attachment_suffix(const hb_result* r, size_t i);
HB_API const char* hb_result_attachment_body(const hb_result* r, size_t i);
HB_API size_t hb_result_warning_count(const hb_result* r);
HB_API const char* hb_result_warning(const hb_result* r, size_t i);
HB_API void hb_result_free(hb_result* r);

HB_API const char* hb_version(void);

#ifdef __cplusplus
}
#endif

#endif
