/*
 * C interface to the maximum weight bipartite matching library.
 *
 * Objects are opaque handles released with their matching *_destroy call.
 * Every fallible function returns an mwbm_status; on failure a description
 * is available from mwbm_last_error() on the calling thread until the next
 * call into the library from that thread. Strings returned through char**
 * out-parameters are owned by the caller and released with mwbm_string_free.
 */
#ifndef MWBM_H
#define MWBM_H

#include <stddef.h>
#include <stdint.h>

#if defined(MWBM_BUILDING_LIBRARY)
#define MWBM_API __attribute__((visibility("default")))
#else
#define MWBM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mwbm_status {
    MWBM_OK = 0,
    MWBM_ERR_INVALID_ARGUMENT = 1,
    MWBM_ERR_DUPLICATE_EDGE = 2,
    MWBM_ERR_NONPOSITIVE_WEIGHT = 3,
    MWBM_ERR_INDEX_OUT_OF_RANGE = 4,
    MWBM_ERR_EMPTY_GRAPH = 5,
    MWBM_ERR_OVERFLOW = 6,
    MWBM_ERR_PARSE = 7,
    MWBM_ERR_IO = 8,
    MWBM_ERR_H_OUT_OF_RANGE = 9,
    MWBM_ERR_NOT_MAXIMUM_MATCHING = 10,
    MWBM_ERR_INFEASIBLE_COVER = 11,
    MWBM_ERR_EXTRACTION_STUCK = 12,
    MWBM_ERR_TOO_LARGE = 13,
    MWBM_ERR_INTERNAL = 14
} mwbm_status;

typedef enum mwbm_mode { MWBM_MODE_MODIFIED = 0, MWBM_MODE_BASELINE = 1 } mwbm_mode;

typedef enum mwbm_generator { MWBM_GEN_SPLIT = 0, MWBM_GEN_UNIT = 1 } mwbm_generator;

typedef enum mwbm_format { MWBM_FORMAT_CSV = 0, MWBM_FORMAT_JSON = 1, MWBM_FORMAT_TSV = 2 } mwbm_format;

/* Edge with 0-based endpoint indices. */
typedef struct mwbm_edge {
    uint32_t left;
    uint32_t right;
    uint64_t weight;
} mwbm_edge;

typedef struct mwbm_graph_info {
    uint32_t n_left;
    uint32_t n_right;
    uint64_t edge_count;
    uint64_t total_weight;
    uint64_t max_weight;
    uint64_t distinct_weights;
} mwbm_graph_info;

typedef struct mwbm_solve_summary {
    uint64_t weight;
    uint64_t iterations;
    uint64_t w_prime;
} mwbm_solve_summary;

typedef struct mwbm_bench_config {
    const uint32_t* ns;      /* partition sizes */
    size_t n_count;
    const uint64_t* weights; /* total weights; every (n, W) pair is run */
    size_t weight_count;
    uint64_t seed;
    uint32_t repeats;
    int run_modified;
    int run_baseline;
    int average;
    mwbm_generator generator;
    mwbm_format format;
    uint32_t jobs;
} mwbm_bench_config;

typedef struct mwbm_graph mwbm_graph;

MWBM_API const char* mwbm_version(void);
MWBM_API const char* mwbm_status_string(mwbm_status status);
MWBM_API const char* mwbm_last_error(void);
MWBM_API void mwbm_string_free(char* s);

/* Graph construction and I/O */
MWBM_API mwbm_status mwbm_graph_create(uint32_t n_left, uint32_t n_right, const mwbm_edge* edges, size_t edge_count,
                                       mwbm_graph** out);
MWBM_API mwbm_status mwbm_graph_parse(const char* text, mwbm_graph** out);
MWBM_API mwbm_status mwbm_graph_load(const char* path, mwbm_graph** out);
MWBM_API mwbm_status mwbm_graph_save(const mwbm_graph* g, const char* path);
MWBM_API mwbm_status mwbm_graph_serialize(const mwbm_graph* g, char** out);
MWBM_API void mwbm_graph_destroy(mwbm_graph* g);

MWBM_API mwbm_status mwbm_graph_info_get(const mwbm_graph* g, mwbm_graph_info* out);
/* Copies up to capacity edges sorted by (left, right); *count receives the total. */
MWBM_API mwbm_status mwbm_graph_edges(const mwbm_graph* g, mwbm_edge* out, size_t capacity, size_t* count);
MWBM_API mwbm_status mwbm_graph_top_two(const mwbm_graph* g, uint64_t* h1, uint64_t* h2);
MWBM_API mwbm_status mwbm_graph_gcd(const mwbm_graph* g, uint64_t* out);
MWBM_API mwbm_status mwbm_graph_scale(const mwbm_graph* g, uint64_t alpha, mwbm_graph** out);

/* Maximum weight matching weight. trace_json may be NULL. */
MWBM_API mwbm_status mwbm_solve(const mwbm_graph* g, mwbm_mode mode, mwbm_solve_summary* out, char** trace_json);

/* Minimum weight cover written to left[n_left] and right[n_right]. */
MWBM_API mwbm_status mwbm_min_cover(const mwbm_graph* g, uint64_t* left, uint64_t* right, uint64_t* weight);
MWBM_API mwbm_status mwbm_cover_feasible(const mwbm_graph* g, const uint64_t* left, const uint64_t* right,
                                         int* feasible);

/* Maximum weight matching recovered from a minimum cover. `out` must hold
 * min(n_left, n_right) edges. */
MWBM_API mwbm_status mwbm_extract_matching(const mwbm_graph* g, const uint64_t* left, const uint64_t* right,
                                           mwbm_edge* out, size_t* count, uint64_t* weight);

/* Brute-force weight, limited to min(n_left, n_right) <= 15. */
MWBM_API mwbm_status mwbm_oracle(const mwbm_graph* g, uint64_t* weight);

MWBM_API mwbm_status mwbm_generate(uint32_t n, uint64_t total_weight, uint64_t seed, mwbm_generator generator,
                                   mwbm_graph** out);

/* Runs the grid and writes the emitted table to *table; *metadata (may be
 * NULL) receives the RNG identity as JSON. */
MWBM_API mwbm_status mwbm_bench(const mwbm_bench_config* config, char** table, char** metadata);

#ifdef __cplusplus
}
#endif

#endif /* MWBM_H */
