#ifndef GAMOW_GAMOW_H
#define GAMOW_GAMOW_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define GAMOW_API __declspec(dllexport)
#else
#define GAMOW_API __attribute__((visibility("default")))
#endif

typedef enum gamow_status {
  GAMOW_OK = 0,
  GAMOW_INVALID_ARGUMENT = 1,
  GAMOW_ASYMMETRIC_POTENTIAL = 2,
  GAMOW_NONPOSITIVE_RANGE = 3,
  GAMOW_UNSORTED_THRESHOLDS = 4,
  GAMOW_UNSUPPORTED = 5,
  GAMOW_AT_BRANCH_POINT = 6,
  GAMOW_POLE_AT_ENERGY = 7,
  GAMOW_NOT_A_POLE = 8,
  GAMOW_DEGENERATE_MODES = 9,
  GAMOW_RANK_TWO_NULLSPACE = 10,
  GAMOW_CONTOUR_TOUCHES_BRANCH_POINT = 11,
  GAMOW_NO_CONVERGENCE = 12,
  GAMOW_THRESHOLD_ENERGY = 13,
  GAMOW_QUADRATURE_NO_CONVERGENCE = 14,
  GAMOW_NOT_BOUND = 15,
  GAMOW_NOT_RESONANCE = 16,
  GAMOW_PARSE_ERROR = 17,
  GAMOW_SCHEMA_ERROR = 18,
  GAMOW_POLE_NOT_FOUND = 19,
  GAMOW_IO_ERROR = 20,
  GAMOW_INTERNAL = 99
} gamow_status;

typedef enum gamow_pole_kind {
  GAMOW_BOUND = 0,
  GAMOW_RESONANCE = 1,
  GAMOW_VIRTUAL = 2,
  GAMOW_UNCLASSIFIED = 3
} gamow_pole_kind;

typedef enum gamow_width {
  GAMOW_WIDTH_HALF = 0,    /* Lorentzian half width Gamma_R / 2 */
  GAMOW_WIDTH_QUARTER = 1  /* Gamma_R / 4 */
} gamow_width;

typedef struct gamow_model gamow_model;
typedef struct gamow_state gamow_state;
typedef struct gamow_config gamow_config;
typedef struct gamow_result gamow_result;

typedef struct gamow_region {
  double re_min, re_max, im_min, im_max;
  int grid_nx, grid_ny;
} gamow_region;

typedef struct gamow_pole {
  double re_energy, im_energy;
  double e_r, gamma_r;
  gamow_pole_kind kind;
  char sheet[32]; /* "(-,+)" */
} gamow_pole;

typedef struct gamow_command_options {
  long pole_index;   /* -1: not set */
  int has_near;
  double near_re, near_im;
  int channel;       /* 1-based; 0 selects every channel */
  double corrupt_norm;
} gamow_command_options;

/* Message of the last failed call on this thread ("" if none). */
GAMOW_API const char* gamow_last_error(void);
GAMOW_API const char* gamow_status_name(gamow_status status);
GAMOW_API void gamow_region_init(gamow_region* region);
GAMOW_API void gamow_command_options_init(gamow_command_options* options);

/* n channels; depth is the reduced n x n matrix in row-major order. */
GAMOW_API gamow_status gamow_model_create(size_t n, const double* thresholds, const double* depth,
                                          double range, gamow_model** out);
GAMOW_API void gamow_model_free(gamow_model* model);
GAMOW_API size_t gamow_model_channels(const gamow_model* model);

/* f_+ (one channel) or det F_+ (two channels) at E on the given sheet. */
GAMOW_API gamow_status gamow_jost_det(const gamow_model* model, const char* sheet, double re_e,
                                      double im_e, double* re_out, double* im_out);

/* Writes up to `capacity` poles; *count receives the number found. */
GAMOW_API gamow_status gamow_find_poles(const gamow_model* model, const char* sheet,
                                        const gamow_region* region, gamow_pole* poles,
                                        size_t capacity, size_t* count);

GAMOW_API gamow_status gamow_state_create(const gamow_model* model, const gamow_pole* pole,
                                          gamow_state** out);
GAMOW_API void gamow_state_free(gamow_state* state);
/* Asymptotic constants N as interleaved (re, im) pairs, 2 n doubles. */
GAMOW_API gamow_status gamow_state_norm(const gamow_state* state, double* out);
/* u(r) as interleaved (re, im) pairs, 2 n doubles. */
GAMOW_API gamow_status gamow_state_evaluate(const gamow_state* state, double r, double* out);

/* channel is 1-based. */
GAMOW_API gamow_status gamow_spectrum_density(const gamow_state* state, int channel, double ep,
                                              gamow_width width, double* density);
GAMOW_API gamow_status gamow_partial_decay_constant(const gamow_state* state, int channel,
                                                    gamow_width width, double* gamma);

GAMOW_API gamow_status gamow_config_load(const char* path, gamow_config** out);
GAMOW_API gamow_status gamow_config_parse(const char* text, gamow_config** out);
GAMOW_API gamow_status gamow_config_set_sheet(gamow_config* config, const char* sheet);
GAMOW_API void gamow_config_free(gamow_config* config);

/* Runs "poles", "wavefunction", "spectrum", "observables" or "verify". Files are
   written to output_dir unless it is NULL. */
GAMOW_API gamow_status gamow_run(const gamow_config* config, const char* command,
                                 const gamow_command_options* options, const char* output_dir,
                                 gamow_result** out);
GAMOW_API const char* gamow_result_summary(const gamow_result* result);
GAMOW_API int gamow_result_exit_code(const gamow_result* result);
GAMOW_API size_t gamow_result_file_count(const gamow_result* result);
GAMOW_API const char* gamow_result_file_name(const gamow_result* result, size_t i);
GAMOW_API const char* gamow_result_file_content(const gamow_result* result, size_t i);
GAMOW_API void gamow_result_free(gamow_result* result);

#ifdef __cplusplus
}
#endif

#endif
