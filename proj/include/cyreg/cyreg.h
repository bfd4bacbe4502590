/* C interface to the cyreg library: persistent homology, interval matching
 * through a common space, cycle prevalence and matching-based distances.
 *
 * Objects are opaque handles released with their *_free function. Every
 * fallible call returns a cyreg_status; on failure a description is
 * available from cyreg_last_error() in the calling thread. Strings returned
 * through char** outputs are owned by the caller and released with
 * cyreg_string_free(). */
#ifndef CYREG_CYREG_H
#define CYREG_CYREG_H

#include <stddef.h>
#include <stdint.h>

#if defined(CYREG_BUILDING_LIBRARY)
#define CYREG_API __attribute__((visibility("default")))
#else
#define CYREG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cyreg_status {
  CYREG_OK = 0,
  CYREG_ERR_INVALID_ARGUMENT = 1,
  CYREG_ERR_PARSE = 2,
  CYREG_ERR_DIMENSION_MISMATCH = 3,
  CYREG_ERR_IO = 4,
  CYREG_ERR_VALIDATION = 5,
  CYREG_ERR_INTERNAL = 6
} cyreg_status;

typedef enum cyreg_complex_type { CYREG_RIPS = 0, CYREG_CECH = 1 } cyreg_complex_type;
typedef enum cyreg_norm { CYREG_NORM_SUP = 0, CYREG_NORM_EUCLIDEAN = 1 } cyreg_norm;
typedef enum cyreg_mode { CYREG_RESAMPLE = 0, CYREG_NEWSAMPLE = 1 } cyreg_mode;

typedef struct cyreg_point_cloud cyreg_point_cloud;
typedef struct cyreg_filtration cyreg_filtration;
typedef struct cyreg_persistence cyreg_persistence;
typedef struct cyreg_matching cyreg_matching;
typedef struct cyreg_prevalence cyreg_prevalence;

typedef struct cyreg_builder {
  cyreg_complex_type type;
  int max_dim;
  double max_radius;
} cyreg_builder;

typedef struct cyreg_interval {
  int dim;
  double birth;
  double death; /* +inf for infinite intervals */
  int infinite;
  int ignorable; /* zero length */
  uint32_t birth_simplex;
  uint32_t death_simplex; /* UINT32_MAX when infinite */
} cyreg_interval;

typedef struct cyreg_match {
  double gamma_birth, gamma_death;
  double delta_birth, delta_death;
  double gamma_image_death, delta_image_death;
  double a_gamma, a_delta, c, rho;
  uint32_t shared_death_simplex;
  int pseudo;
} cyreg_match;

typedef struct cyreg_metric_params {
  double p;
  cyreg_norm norm;
} cyreg_metric_params;

typedef struct cyreg_metrics {
  double d_im;
  double d_wasserstein; /* NaN when p is infinite */
  size_t matched;
  size_t unmatched_x;
  size_t unmatched_y;
  size_t excluded_infinite;
} cyreg_metrics;

typedef struct cyreg_prevalence_params {
  cyreg_builder builder;
  int k;
  size_t B;
  size_t n;           /* 0: size of the base cloud */
  cyreg_mode mode;
  double h;           /* KDE variance for resample mode */
  const char* sampler; /* e.g. "torus:0.3,0.2" for newsample mode */
  uint64_t seed;
  unsigned threads;    /* 0: one per hardware thread */
} cyreg_prevalence_params;

typedef struct cyreg_prevalence_entry {
  double birth;
  double death;
  double p_hat;
  size_t match_count;
} cyreg_prevalence_entry;

CYREG_API const char* cyreg_version(void);
CYREG_API const char* cyreg_last_error(void);
CYREG_API void cyreg_string_free(char* s);

/* Point clouds */
CYREG_API cyreg_status cyreg_point_cloud_create(size_t dim, const double* coords, size_t n_points,
                                                cyreg_point_cloud** out);
CYREG_API cyreg_status cyreg_point_cloud_read_csv(const char* path, cyreg_point_cloud** out);
CYREG_API cyreg_status cyreg_point_cloud_to_csv(const cyreg_point_cloud* pc, char** out);
CYREG_API size_t cyreg_point_cloud_size(const cyreg_point_cloud* pc);
CYREG_API size_t cyreg_point_cloud_dim(const cyreg_point_cloud* pc);
CYREG_API const double* cyreg_point_cloud_coords(const cyreg_point_cloud* pc);
CYREG_API void cyreg_point_cloud_free(cyreg_point_cloud* pc);

/* Sampling; the seed fully determines the output. */
CYREG_API cyreg_status cyreg_sample(const char* sampler, size_t n, uint64_t seed,
                                    cyreg_point_cloud** out);
CYREG_API cyreg_status cyreg_kde_sample(const cyreg_point_cloud* base, double h, size_t n,
                                        uint64_t seed, cyreg_point_cloud** out);

/* Filtrations */
CYREG_API cyreg_status cyreg_filtration_build(const cyreg_point_cloud* pc,
                                              const cyreg_builder* builder,
                                              cyreg_filtration** out);
CYREG_API cyreg_status cyreg_filtration_from_json(const char* json, cyreg_filtration** out);
CYREG_API cyreg_status cyreg_filtration_read_json(const char* path, cyreg_filtration** out);
CYREG_API size_t cyreg_filtration_size(const cyreg_filtration* f);
CYREG_API void cyreg_filtration_free(cyreg_filtration* f);

/* Persistence */
CYREG_API cyreg_status cyreg_persistence_compute(const cyreg_filtration* f, int k_max,
                                                 cyreg_persistence** out);
CYREG_API size_t cyreg_persistence_count(const cyreg_persistence* p);
CYREG_API cyreg_status cyreg_persistence_interval(const cyreg_persistence* p, size_t i,
                                                  cyreg_interval* out);
CYREG_API cyreg_status cyreg_persistence_to_json(const cyreg_persistence* p, char** out);
CYREG_API void cyreg_persistence_free(cyreg_persistence* p);

/* Interval matching. match_clouds builds X, Y and their union with the
 * given builder; match_filtrations uses explicit filtrations with the
 * inclusion-by-label maps into z, which must be valid. */
CYREG_API cyreg_status cyreg_match_clouds(const cyreg_point_cloud* x, const cyreg_point_cloud* y,
                                          const cyreg_builder* builder, int k,
                                          cyreg_matching** out);
CYREG_API cyreg_status cyreg_match_filtrations(const cyreg_filtration* x,
                                               const cyreg_filtration* y,
                                               const cyreg_filtration* z, int k,
                                               cyreg_matching** out);
CYREG_API size_t cyreg_matching_count(const cyreg_matching* m);
CYREG_API cyreg_status cyreg_matching_record(const cyreg_matching* m, size_t i, cyreg_match* out);
CYREG_API cyreg_status cyreg_matching_to_json(const cyreg_matching* m, char** out);
CYREG_API cyreg_status cyreg_matching_metrics(const cyreg_matching* m,
                                              const cyreg_metric_params* params,
                                              cyreg_metrics* out);
CYREG_API void cyreg_matching_free(cyreg_matching* m);

/* Checks the inclusion-by-label map x -> z. Returns CYREG_ERR_VALIDATION
 * with the first violation in cyreg_last_error() when it is not an
 * injective filtered simplicial map. */
CYREG_API cyreg_status cyreg_validate_inclusion(const cyreg_filtration* x,
                                                const cyreg_filtration* z);
/* Same for the map induced by vertex_map[v] (v < n). */
CYREG_API cyreg_status cyreg_validate_vertex_map(const cyreg_filtration* x,
                                                 const cyreg_filtration* z,
                                                 const uint32_t* vertex_map, size_t n);

/* Cycle prevalence. Entries are indexed in decreasing order of p_hat. */
CYREG_API cyreg_status cyreg_prevalence_compute(const cyreg_point_cloud* base,
                                                const cyreg_prevalence_params* params,
                                                cyreg_prevalence** out);
CYREG_API size_t cyreg_prevalence_count(const cyreg_prevalence* r);
CYREG_API cyreg_status cyreg_prevalence_get(const cyreg_prevalence* r, size_t i,
                                            cyreg_prevalence_entry* out);
CYREG_API cyreg_status cyreg_prevalence_to_json(const cyreg_prevalence* r, char** out);
CYREG_API cyreg_status cyreg_prevalence_to_csv(const cyreg_prevalence* r, char** out);
CYREG_API cyreg_status cyreg_prevalence_plot_tsv(const cyreg_prevalence* r, size_t top,
                                                 char** out);
CYREG_API void cyreg_prevalence_free(cyreg_prevalence* r);

#ifdef __cplusplus
}
#endif

#endif
