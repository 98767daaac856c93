/*
 * sshare.h - C interface to the spectrum-sharing partition library.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns an sshare_status; on
 * failure a one-line diagnostic is available from sshare_last_error() on the
 * calling thread until the next failing call on that thread.
 */
#ifndef SSHARE_SSHARE_H
#define SSHARE_SSHARE_H

#include <stddef.h>
#include <stdint.h>

#if defined(SSHARE_BUILDING_LIBRARY)
#define SSHARE_API __attribute__((visibility("default")))
#else
#define SSHARE_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sshare_status {
  SSHARE_OK = 0,
  SSHARE_ERR_INTERNAL = 1,
  SSHARE_ERR_INVALID_ARGUMENT = 2,
  SSHARE_ERR_FILE_NOT_FOUND = 3,
  SSHARE_ERR_PARSE = 4,
  SSHARE_ERR_VALIDATION = 5,
  SSHARE_ERR_IO = 6,
  SSHARE_ERR_DOMAIN = 7
} sshare_status;

typedef enum sshare_format { SSHARE_FORMAT_CSV = 0, SSHARE_FORMAT_JSON = 1 } sshare_format;

typedef enum sshare_network { SSHARE_RAN_A = 0, SSHARE_RAN_B = 1 } sshare_network;

typedef enum sshare_mode { SSHARE_MODE_MEAN = 0, SSHARE_MODE_MAXIMA = 1 } sshare_mode;

typedef enum sshare_bound { SSHARE_BOUND_LOWER = 0, SSHARE_BOUND_UPPER = 1 } sshare_bound;

typedef struct sshare_config sshare_config;
typedef struct sshare_result sshare_result;

typedef struct sshare_allocation {
  int64_t n_a;
  int64_t n_b;
  double objective;
} sshare_allocation;

typedef struct sshare_interval {
  double lower;
  double upper;
  double level;
} sshare_interval;

typedef struct sshare_demand_statistics {
  sshare_interval mean;
  sshare_interval variance;
  sshare_interval maximum;
  size_t n_realizations;
} sshare_demand_statistics;

typedef struct sshare_sweep_info {
  int64_t pool_size;
  sshare_mode mode;
  sshare_bound bound;
  double x_a;
  double x_b;
  size_t n_rows;
} sshare_sweep_info;

typedef struct sshare_sweep_row {
  double gamma;
  int64_t n_a;
  int64_t n_b;
  double objective;
  double surplus_a_det;
  double surplus_a_emp;
  double surplus_b_det;
  double surplus_b_emp;
  double fairness;
} sshare_sweep_row;

SSHARE_API const char* sshare_version(void);
SSHARE_API const char* sshare_last_error(void);
SSHARE_API const char* sshare_status_name(sshare_status status);

/* Scenario configuration */
SSHARE_API sshare_status sshare_config_default(sshare_config** out);
SSHARE_API sshare_status sshare_config_load(const char* path, sshare_config** out);
SSHARE_API sshare_status sshare_config_parse(const char* text, sshare_config** out);
SSHARE_API sshare_status sshare_config_set_seed(sshare_config* config, uint64_t seed);
SSHARE_API sshare_status sshare_config_get_seed(const sshare_config* config, uint64_t* out);
/* Canonical config text; *out is allocated and released with sshare_string_free. */
SSHARE_API sshare_status sshare_config_format(const sshare_config* config, char** out);
SSHARE_API void sshare_config_free(sshare_config* config);
SSHARE_API void sshare_string_free(char* text);

/* Experiments */
SSHARE_API sshare_status sshare_run(const sshare_config* config, sshare_result** out);
SSHARE_API sshare_status sshare_reproduce(sshare_result** out);
SSHARE_API void sshare_result_free(sshare_result* result);

SSHARE_API sshare_status sshare_result_statistics(const sshare_result* result,
                                                  sshare_network network,
                                                  sshare_demand_statistics* out);
SSHARE_API size_t sshare_result_sweep_count(const sshare_result* result);
SSHARE_API sshare_status sshare_result_sweep_info(const sshare_result* result, size_t sweep,
                                                  sshare_sweep_info* out);
SSHARE_API sshare_status sshare_result_sweep_row(const sshare_result* result, size_t sweep,
                                                 size_t row, sshare_sweep_row* out);

/* Writes sweep tables, statistics and provenance into dir (created if
 * missing). *n_files receives the number of files written; may be NULL. */
SSHARE_API sshare_status sshare_result_write(const sshare_result* result, const char* dir,
                                             sshare_format format, size_t* n_files);

/* Single-point primitives */
SSHARE_API sshare_status sshare_evaluate_objective(double n_a, double n_b, double gamma,
                                                   double x_a, double x_b, double* out);
SSHARE_API sshare_status sshare_optimize(int64_t pool_size, double gamma, double x_a,
                                         double x_b, sshare_allocation* out);
SSHARE_API sshare_status sshare_jain_fairness(int64_t n_a, int64_t n_b, double* out);

#ifdef __cplusplus
}
#endif

#endif /* SSHARE_SSHARE_H */
