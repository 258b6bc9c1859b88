/*
 * hlnet C API.
 *
 * Hypercube-like networks built from recursive matching recipes, the
 * closed-form extremal edge function e_g, (g+1)-component edge connectivity,
 * the extremal-subgraph and minimum-cut constructions, and the brute-force
 * oracles that check them.
 *
 * Conventions:
 *   - Every fallible call returns hl_status; HL_OK is zero. On failure
 *     hl_last_error() describes the problem (thread-local, valid until the
 *     next failing call on the same thread). Out-parameters are untouched.
 *   - Objects are opaque handles created by hl_*_create / constructor calls
 *     and released with the matching hl_*_free. Passing NULL to a free
 *     function is a no-op. Handles are immutable after construction (except
 *     hl_report, which grows) and may be read from several threads at once.
 *   - Caller-provided buffers come with a capacity; the required length is
 *     always written to *len, and HL_ERROR_INVALID_ARGUMENT is returned if
 *     the capacity is too small.
 *   - Strings returned through char** are owned by the caller and released
 *     with hl_string_free.
 */
#ifndef HLNET_H
#define HLNET_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(HLNET_BUILDING_LIBRARY)
#    define HLNET_API __declspec(dllexport)
#  else
#    define HLNET_API __declspec(dllimport)
#  endif
#else
#  define HLNET_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hl_status {
    HL_OK = 0,
    HL_ERROR_INVALID_ARGUMENT = 1,
    HL_ERROR_DOMAIN = 2,
    HL_ERROR_PARSE = 3,
    HL_ERROR_IO = 4,
    HL_ERROR_OVERFLOW = 5,
    HL_ERROR_LIMIT = 6,
    HL_ERROR_INTERNAL = 99
} hl_status;

typedef struct hl_recipe hl_recipe;
typedef struct hl_graph hl_graph;
typedef struct hl_edges hl_edges;
typedef struct hl_report hl_report;
typedef struct hl_suite_result hl_suite_result;

HLNET_API const char* hl_version(void);
HLNET_API const char* hl_last_error(void);
HLNET_API void hl_string_free(char* s);

/* Largest dimension that may be built or materialized (default 20). */
HLNET_API int hl_max_dimension(void);
HLNET_API hl_status hl_set_max_dimension(int n);

/* ---- recipes ------------------------------------------------------------ */

HLNET_API hl_status hl_recipe_leaf(hl_recipe** out);
HLNET_API hl_status hl_recipe_hypercube(int n, hl_recipe** out);
HLNET_API hl_status hl_recipe_random(int n, uint64_t seed, hl_recipe** out);
HLNET_API hl_status hl_recipe_g84(hl_recipe** out);
/* "hypercube", "g84", "random:seed=S" or "file:PATH"; n < 0 means "any"
 * for sources that carry their own dimension. */
HLNET_API hl_status hl_recipe_from_source(const char* source, int n, hl_recipe** out);
/* matching[i] is the right-half index joined to left-half index i. */
HLNET_API hl_status hl_recipe_compose(const hl_recipe* left, const hl_recipe* right,
                                      const uint32_t* matching, size_t matching_len,
                                      hl_recipe** out);
/* Any of the three outputs may be NULL. The matching buffer needs
 * 2^(dim-1) entries. */
HLNET_API hl_status hl_recipe_split(const hl_recipe* r, hl_recipe** left, hl_recipe** right,
                                    uint32_t* matching, size_t capacity, size_t* len);
HLNET_API int hl_recipe_dim(const hl_recipe* r);
HLNET_API int hl_recipe_equal(const hl_recipe* a, const hl_recipe* b);
HLNET_API hl_status hl_recipe_to_json(const hl_recipe* r, char** out);
HLNET_API hl_status hl_recipe_from_json(const char* text, hl_recipe** out);
HLNET_API hl_status hl_recipe_save(const hl_recipe* r, const char* path);
HLNET_API hl_status hl_recipe_load(const char* path, hl_recipe** out);
HLNET_API void hl_recipe_free(hl_recipe* r);

/* ---- graphs ------------------------------------------------------------- */

HLNET_API hl_status hl_graph_materialize(const hl_recipe* r, hl_graph** out);
/* pairs holds 2*count labels: u0 v0 u1 v1 ... */
HLNET_API hl_status hl_graph_from_edges(int n, const uint32_t* pairs, size_t count,
                                        hl_graph** out);
HLNET_API hl_status hl_graph_load(const char* path, hl_graph** out);
HLNET_API hl_status hl_graph_save(const hl_graph* g, const char* path);
HLNET_API int hl_graph_dim(const hl_graph* g);
HLNET_API uint64_t hl_graph_vertex_count(const hl_graph* g);
HLNET_API uint64_t hl_graph_edge_count(const hl_graph* g);
HLNET_API int hl_graph_is_connected(const hl_graph* g);
HLNET_API hl_status hl_graph_neighbors(const hl_graph* g, uint32_t v, uint32_t* out,
                                       size_t capacity, size_t* len);
HLNET_API void hl_graph_free(hl_graph* g);

HLNET_API hl_status hl_induced_edge_count(const hl_graph* g, const uint32_t* vertices,
                                          size_t count, int64_t* out);
HLNET_API hl_status hl_boundary_edges(const hl_graph* g, const uint32_t* vertices, size_t count,
                                      hl_edges** out);

/* ---- edge sets ---------------------------------------------------------- */

HLNET_API hl_status hl_edges_create(const uint32_t* pairs, size_t count, hl_edges** out);
HLNET_API size_t hl_edges_size(const hl_edges* e);
HLNET_API hl_status hl_edges_at(const hl_edges* e, size_t index, uint32_t* u, uint32_t* v);
HLNET_API hl_status hl_edges_load(const char* path, hl_edges** out);
/* Writes the "# hl-cut n=<n> g=<g> size=<|F|>" edge-list format. */
HLNET_API hl_status hl_edges_save_cut(const hl_edges* e, int n, uint64_t g, const char* path);
HLNET_API void hl_edges_free(hl_edges* e);

/* ---- closed forms ------------------------------------------------------- */

HLNET_API hl_status hl_decompose(uint64_t g, int* exponents, size_t capacity, size_t* len);
HLNET_API hl_status hl_extremal_edges(uint64_t g, int64_t* out);
HLNET_API hl_status hl_extremal_increment(uint64_t i, int64_t* out);

typedef enum hl_cut_mode { HL_MODE_STRICT = 0, HL_MODE_PERMISSIVE = 1 } hl_cut_mode;

/* n*g - e_g; *proven is 1 inside n >= 8, g <= 2^ceil(n/2). */
HLNET_API hl_status hl_component_edge_connectivity(int n, uint64_t g, hl_cut_mode mode,
                                                   int64_t* value, int* proven);
HLNET_API uint64_t hl_proven_g_limit(int n);
HLNET_API hl_status hl_check_superadditive(uint64_t g0, uint64_t g1, int* holds);
HLNET_API hl_status hl_check_slack(int n, uint64_t g, int* holds);
HLNET_API hl_status hl_check_merge(uint64_t i, uint64_t j, int* holds);
HLNET_API hl_status hl_check_strict_increase(int n, uint64_t g, int* holds);

/* ---- constructions ------------------------------------------------------ */

/* Vertices selected by the nested-subcube construction (sorted, g entries). */
HLNET_API hl_status hl_extremal_subgraph(const hl_recipe* r, uint64_t g, uint32_t* vertices,
                                         size_t capacity, size_t* len);
HLNET_API hl_status hl_build_component_cut(const hl_recipe* r, uint64_t g, hl_edges** out);

typedef struct hl_cut_report {
    int64_t cut_size;
    int64_t component_count;
    int64_t isolated_count;
    int64_t predicted_size;
    int matches_prediction;
} hl_cut_report;

HLNET_API hl_status hl_verify_cut(const hl_graph* g, const hl_edges* cut, uint64_t target_g,
                                  hl_cut_report* out);

/* ---- oracles ------------------------------------------------------------ */

typedef struct hl_search_limits {
    uint64_t max_nodes_expanded; /* 0 = unlimited */
    double time_budget;          /* seconds, 0 = unlimited */
    unsigned threads;            /* 0 or 1 = calling thread */
} hl_search_limits;

typedef struct hl_search_result {
    int found;    /* 0 if the budget ran out before any candidate */
    int complete; /* 1 = exact */
    int64_t value;
    uint64_t nodes_expanded;
} hl_search_result;

/* witness (nullable) receives k sorted labels. limits may be NULL. */
HLNET_API hl_status hl_oracle_max_induced(const hl_graph* g, size_t k,
                                          const hl_search_limits* limits, hl_search_result* out,
                                          uint32_t* witness, size_t capacity);
/* block_of (nullable) receives the block index of every vertex. */
HLNET_API hl_status hl_oracle_min_cut(const hl_graph* g, size_t parts,
                                      const hl_search_limits* limits, hl_search_result* out,
                                      uint32_t* block_of, size_t capacity);
/* Components of g - removed; component_of (nullable) gets one index per
 * vertex, components numbered by smallest label. */
HLNET_API hl_status hl_components_after(const hl_graph* g, const hl_edges* removed,
                                        size_t* count, uint32_t* component_of, size_t capacity);
/* Writes "# partition blocks=<k> cross=<value>" and one block per line. */
HLNET_API hl_status hl_partition_save(const hl_graph* g, const uint32_t* block_of, size_t len,
                                      const char* path);
HLNET_API hl_status hl_isomorphic_small(const hl_graph* a, const hl_graph* b, int* out);

/* ---- reports ------------------------------------------------------------ */

typedef enum hl_format { HL_FORMAT_CSV = 0, HL_FORMAT_JSON = 1, HL_FORMAT_TEXT = 2 } hl_format;

typedef struct hl_report_row {
    const char* check;
    int n;
    uint64_t g;
    int64_t formula_value;
    int has_construction;
    int64_t construction_value;
    int has_oracle;
    int64_t oracle_value;
    const char* status;
    int64_t elapsed_ms;
} hl_report_row;

HLNET_API hl_status hl_parse_format(const char* name, hl_format* out);
HLNET_API hl_status hl_report_create(hl_report** out);
HLNET_API hl_status hl_report_add_row(hl_report* report, const hl_report_row* row);
HLNET_API size_t hl_report_row_count(const hl_report* report);
/* String members stay valid until the report is modified or freed. */
HLNET_API hl_status hl_report_get_row(const hl_report* report, size_t index, hl_report_row* out);
HLNET_API hl_status hl_report_render(const hl_report* report, hl_format format, char** out);
HLNET_API hl_status hl_report_save(const hl_report* report, hl_format format, const char* path);
HLNET_API void hl_report_free(hl_report* report);

/* ---- property suite ----------------------------------------------------- */

enum {
    HL_SUITE_LEMMAS = 1,
    HL_SUITE_CONSTRUCTION = 2,
    HL_SUITE_ORACLES = 4,
    HL_SUITE_ALL = 7
};

typedef struct hl_suite_config {
    uint64_t g_max;
    int n_max;
    int monotone_n_max;
    uint64_t increment_max;
    int construct_n_min;
    int construct_n_max;
    int random_recipes;
    uint64_t seed;
    int oracle_n_max;
    hl_search_limits limits;
    int timing;
    int sections; /* HL_SUITE_* bitmask */
} hl_suite_config;

HLNET_API void hl_suite_config_default(hl_suite_config* cfg);
HLNET_API hl_status hl_suite_run(const hl_suite_config* cfg, hl_suite_result** out);
/* Borrowed; valid while the result lives. */
HLNET_API const hl_report* hl_suite_result_report(const hl_suite_result* r);
HLNET_API size_t hl_suite_result_violation_count(const hl_suite_result* r);
HLNET_API const char* hl_suite_result_violation(const hl_suite_result* r, size_t index);
HLNET_API int hl_suite_result_budget_exhausted(const hl_suite_result* r);
HLNET_API void hl_suite_result_free(hl_suite_result* r);

#ifdef __cplusplus
}
#endif

#endif /* HLNET_H */
