/* ksat — construction, verification and exhaustive search of K_{r+1}-saturated
 * graphs, with spectral-radius bound reports.
 *
 * C API over opaque handles.  Every function that can fail returns a
 * ksat_status; results travel through out-parameters.  A human-readable
 * detail message for the most recent failure on the calling thread is
 * available from ksat_last_error().  Graphs have at most 64 vertices.
 *
 * All query functions are safe to call concurrently on distinct or shared
 * handles; handles are immutable after construction except via the
 * functions that take a non-const pointer.
 */

#ifndef KSAT_H
#define KSAT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define KSAT_API __declspec(dllexport)
#else
#  define KSAT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

#define KSAT_MAX_VERTICES 64

/* Longest emittable graph6 string (n = 62) plus terminator. */
#define KSAT_G6_BUFSIZE 324

typedef enum ksat_status {
    KSAT_OK = 0,
    KSAT_ERR_PARAM = 1,         /* argument out of range or invalid */
    KSAT_ERR_PARSE = 2,         /* malformed graph6 input */
    KSAT_ERR_NOT_SATURATED = 3, /* operation requires a saturated graph */
    KSAT_ERR_LIMIT = 4,         /* beyond a documented size limit */
    KSAT_ERR_NUMERIC = 5,       /* eigensolver failed to converge */
    KSAT_ERR_BUFFER = 6         /* caller buffer too small */
} ksat_status;

KSAT_API const char* ksat_status_name(ksat_status s);
KSAT_API const char* ksat_last_error(void); /* thread-local; empty string if none */

/* ---------------------------------------------------------------- graphs */

typedef struct ksat_graph ksat_graph;

KSAT_API ksat_status ksat_graph_new(int n, ksat_graph** out);
KSAT_API ksat_status ksat_graph_copy(const ksat_graph* g, ksat_graph** out);
KSAT_API void ksat_graph_free(ksat_graph* g);

KSAT_API ksat_status ksat_graph_add_edge(ksat_graph* g, int u, int v);
KSAT_API int ksat_graph_order(const ksat_graph* g);
KSAT_API long ksat_graph_edge_count(const ksat_graph* g);
KSAT_API long ksat_graph_non_edge_count(const ksat_graph* g);
KSAT_API int ksat_graph_has_edge(const ksat_graph* g, int u, int v); /* -1 on bad args */
KSAT_API int ksat_graph_degree(const ksat_graph* g, int v);          /* -1 on bad args */
KSAT_API uint64_t ksat_graph_neighbors(const ksat_graph* g, int v);  /* bitset; 0 on bad args */

/* girth: 0 means acyclic.  diameter: -1 means disconnected. */
KSAT_API ksat_status ksat_graph_girth(const ksat_graph* g, int* out);
KSAT_API ksat_status ksat_graph_diameter(const ksat_graph* g, int* out);
KSAT_API int ksat_graph_component_count(const ksat_graph* g);
/* Vertex bitset of the connected component containing v; 0 on bad args. */
KSAT_API uint64_t ksat_graph_component_of(const ksat_graph* g, int v);

/* found is set to 0/1.  When found and witness != NULL, witness[0..k-1]
 * receives a k-clique (ascending, lexicographically least). */
KSAT_API ksat_status ksat_graph_contains_clique(const ksat_graph* g, int k, int* found,
                                                int* witness);

KSAT_API ksat_status ksat_graph_from_g6(const char* text, ksat_graph** out);
KSAT_API ksat_status ksat_graph_to_g6(const ksat_graph* g, char* buf, size_t bufsize);
/* Canonical representative's graph6; exact up to 10 vertices. */
KSAT_API ksat_status ksat_graph_canonical_g6(const ksat_graph* g, char* buf, size_t bufsize);

/* ---------------------------------------------------------- constructions */

typedef enum ksat_family {
    KSAT_FAMILY_S = 0,                 /* s_graph(n, r); needs n, r */
    KSAT_FAMILY_TURAN = 1,             /* Turan graph; needs n, r */
    KSAT_FAMILY_C5 = 2,                /* 5-cycle */
    KSAT_FAMILY_PETERSEN = 3,          /* Petersen graph */
    KSAT_FAMILY_HOFFMAN_SINGLETON = 4  /* Hoffman-Singleton graph */
} ksat_family;

/* n and r are ignored for the three fixed Moore graphs. */
KSAT_API ksat_status ksat_construct(ksat_family family, int n, int r, ksat_graph** out);

/* ------------------------------------------------------------- saturation */

typedef enum ksat_verdict {
    KSAT_SATURATED = 0,
    KSAT_NOT_FREE = 1,   /* contains K_{r+1} */
    KSAT_NOT_MAXIMAL = 2 /* some non-edge completes no K_{r+1} */
} ksat_verdict;

typedef struct ksat_certificate ksat_certificate;

KSAT_API ksat_status ksat_saturation_check(const ksat_graph* g, int r, ksat_certificate** out);
KSAT_API ksat_verdict ksat_certificate_verdict(const ksat_certificate* c);
/* NOT_FREE: writes the violating (r+1)-clique and its length.
 * NOT_MAXIMAL: writes the two endpoints of the uncompletable non-edge.
 * SATURATED: writes nothing (len 0). */
KSAT_API ksat_status ksat_certificate_failure(const ksat_certificate* c, int* buf, int cap,
                                              int* len);
KSAT_API long ksat_certificate_witness_count(const ksat_certificate* c);
/* For a saturated graph: the idx-th non-edge {x, y} together with an
 * (r-1)-clique from the common neighborhood, written to clique[0..r-2]. */
KSAT_API ksat_status ksat_certificate_witness(const ksat_certificate* c, long idx, int* x,
                                              int* y, int* clique);
KSAT_API void ksat_certificate_free(ksat_certificate* c);

/* Number of non-adjacent pairs {x, y} in N(v) whose common neighborhood with
 * v contains an (r-2)-clique. */
KSAT_API ksat_status ksat_apex_pair_count(const ksat_graph* g, int v, int r, long* out);

/* Aggregate apex inequality over a saturated graph:
 * (r-1) * non_edges  <=  sum over v of apex_pair_count(v).
 * apexes, if non-NULL, receives the per-non-edge apex count; non-edges are
 * ordered by (y, x), y major, matching ksat_graph_non_edge_count entries. */
KSAT_API ksat_status ksat_apex_sum_check(const ksat_graph* g, int r, long* lhs, long* rhs,
                                         int* holds, long* min_apexes, long* apexes,
                                         long apexes_cap);

/* Per-vertex cap apex_pair_count(v) <= C(d(v)-r+2, 2). */
KSAT_API ksat_status ksat_apex_cap_check(const ksat_graph* g, int v, int r, long* count,
                                         long* cap, int* holds);

/* Pairs inside N(v): adjacent / inert non-adjacent / completable (insertion
 * creates a K_r in the induced neighborhood). */
KSAT_API ksat_status ksat_neighborhood_pair_split(const ksat_graph* g, int v, int r,
                                                  long* adjacent, long* inert,
                                                  long* completable);

/* --------------------------------------------------------------- spectral */

typedef enum ksat_spectral_method {
    KSAT_METHOD_POWER_ITERATION = 0,
    KSAT_METHOD_FULL_SOLVER = 1
} ksat_spectral_method;

KSAT_API ksat_status ksat_spectral_radius(const ksat_graph* g, double* rho,
                                          ksat_spectral_method* method /* nullable */);
/* values must hold at least n doubles; count receives n.  Eigenvalues are
 * sorted nonincreasing. */
KSAT_API ksat_status ksat_full_spectrum(const ksat_graph* g, double* values, int cap,
                                        int* count, double* residual /* nullable */);
KSAT_API ksat_status ksat_rayleigh_degree_bound(const ksat_graph* g, double* out);

/* cell_of assigns each vertex a cell id 0..s-1 (all cells nonempty).
 * q, if non-NULL, receives the s*s row-major averages; equitable and rho_q
 * are individually nullable. */
KSAT_API ksat_status ksat_quotient_matrix(const ksat_graph* g, const int* cell_of, int s,
                                          double* q, int* equitable, double* rho_q);

/* Closed form (r-2 + sqrt((r-2)^2 + 4(r-1)(n-r+1))) / 2. */
KSAT_API ksat_status ksat_s_graph_spectral_radius(int n, int r, double* out);

/* Smallest eigenvalue against -2^{r+1} m^r / (r n^{2r-1}); the graph must be
 * K_{r+1}-free with at least one edge. */
KSAT_API ksat_status ksat_lambda_min_check(const ksat_graph* g, int r, double* lambda_min,
                                           double* bound, int* holds);

/* ----------------------------------------------------------------- bounds */

KSAT_API ksat_status ksat_sat_number(int n, int r, long* out);
KSAT_API ksat_status ksat_ex_number(int n, int r, long* out);
KSAT_API ksat_status ksat_degree_square_lower_bound(int n, int r, long* out);
KSAT_API ksat_status ksat_shifted_degree_lower_bound(int n, int r, long* out);
KSAT_API ksat_status ksat_spectral_lower_bound(int n, int r, double* out);

typedef struct ksat_bounds_report {
    int n, r;
    long edges;

    long sum_d2;        /* sum of squared degrees */
    long sum_d2_bound;  /* (n-1)^2 (r-1) + (r-1)^2 (n-r+1) */
    long sum_d2_slack;
    int sum_d2_equal;

    long shifted_sum;   /* sum (d+1)(d+1-r) */
    long shifted_bound; /* (r-1) n (n-r) */
    long shifted_slack;
    int shifted_equal;

    double rho;
    double rho_lower; /* sqrt(sum_d2_bound / n) */
    double rho_lower_slack;
    int rho_lower_equal;

    double rho_turan; /* spectral radius of the Turan graph */
    double rho_turan_slack;
    int rho_turan_equal;

    long sat_edges;
    long ex_edges;

    int all_hold;
} ksat_bounds_report;

/* Requires a saturated graph (KSAT_ERR_NOT_SATURATED otherwise).
 * spectral_tol <= 0 selects the default 1e-9. */
KSAT_API ksat_status ksat_verify_graph(const ksat_graph* g, int r, double spectral_tol,
                                       ksat_bounds_report* out);

/* ----------------------------------------------------------------- search */

typedef struct ksat_census ksat_census;

typedef struct ksat_census_options {
    int workers;       /* <= 0: hardware concurrency */
    int shard_bits;    /* < 0: default */
    int allow_order_8; /* n = 8 sweeps 2^28 graphs; opt in */
    double spectral_tol; /* <= 0: default 1e-9 */
} ksat_census_options;

/* Exhaustive isomorphism-free census of K_{r+1}-saturated graphs,
 * 3 <= n <= 8 (n = 8 behind the option), 2 <= r < n.  Deterministic:
 * members are sorted by canonical key regardless of worker count. */
KSAT_API ksat_status ksat_census_run(int n, int r, const ksat_census_options* opt /* nullable */,
                                     ksat_census** out);
KSAT_API void ksat_census_free(ksat_census* c);

KSAT_API long ksat_census_count(const ksat_census* c);
KSAT_API ksat_status ksat_census_member_g6(const ksat_census* c, long idx, char* buf,
                                           size_t bufsize);
KSAT_API ksat_status ksat_census_member_graph(const ksat_census* c, long idx, ksat_graph** out);
KSAT_API ksat_status ksat_census_member_stats(const ksat_census* c, long idx, long* edges,
                                              long* sum_d2, double* rho, int* sum_d2_tight);

typedef struct ksat_census_summary {
    int n, r;
    long count;
    long min_edges, max_edges;
    long min_sum_d2;
    double min_rho;
    long min_edge_attainers;
    long sum_d2_attainers; /* exact equality with the degree-square bound */
    long min_sum_d2_attainers;
    long min_rho_attainers;
    double s_graph_rho;  /* closed-form spectral radius of s_graph(n, r) */
    double rho_lower;    /* spectral_lower_bound(n, r) */
    long s_graph_index;  /* index into the census, -1 if absent */
    int s_graph_attains_min_rho; /* evidence report, not an assertion */
} ksat_census_summary;

KSAT_API ksat_status ksat_census_summary_get(const ksat_census* c, ksat_census_summary* out);

/* Attainer lists; kind selects which one. */
typedef enum ksat_attainer_kind {
    KSAT_ATTAINER_MIN_EDGES = 0,
    KSAT_ATTAINER_SUM_D2_BOUND = 1,
    KSAT_ATTAINER_MIN_SUM_D2 = 2,
    KSAT_ATTAINER_MIN_RHO = 3
} ksat_attainer_kind;

KSAT_API ksat_status ksat_census_attainers(const ksat_census* c, ksat_attainer_kind kind,
                                           long* indices, long cap, long* len);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* KSAT_H */
