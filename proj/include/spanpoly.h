/*
 * spanpoly C API: spanning-subgraph generating polynomials, zero-free
 * region certification, and partition-function observables behind opaque
 * handles and status codes.
 *
 * Every function returning spz_status leaves a human-readable detail for
 * the calling thread in spz_last_error() on failure. Strings returned
 * through char** out-parameters are allocated by the library and must be
 * released with spz_string_free().
 */
#ifndef SPANPOLY_H
#define SPANPOLY_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum spz_status {
    SPZ_OK = 0,
    SPZ_ERR_ARGUMENT = 1, /* bad parameters or shape mismatch */
    SPZ_ERR_PARSE = 2,    /* malformed input text */
    SPZ_ERR_RESOURCE = 3, /* an enforced cap was exceeded */
    SPZ_ERR_NUMERIC = 4,  /* root finding or consistency failure */
    SPZ_ERR_INTERNAL = 5
} spz_status;

typedef struct spz_graph spz_graph;
typedef struct spz_activities spz_activities;

const char* spz_version(void);

/* Detail message for the most recent failure on this thread. */
const char* spz_last_error(void);

void spz_string_free(char* s);

/* ---- graphs ---------------------------------------------------------- */

/* JSON: {"vertices":[0,1,...], "edges":[{"u":0,"v":1,"lambda":"3/2"},...]}
 * lambda may be "p/q", an integer, a float, or {"re":..,"im":..}. */
spz_status spz_graph_parse(const char* json, spz_graph** out);

/* kind: "path:5", "cycle:6", "complete:4", "torus:3,2", "petersen",
 * "random_regular:8,3,42" (n, d, seed). */
spz_status spz_graph_generate(const char* kind, spz_graph** out);

spz_status spz_graph_to_json(const spz_graph* g, char** json_out);
void spz_graph_free(spz_graph* g);

/* ---- activities ------------------------------------------------------ */

/* JSON: {"activities":{"0":["1","1","0"],...}} or {"all":["1","1","0"]}. */
spz_status spz_activities_parse(const spz_graph* g, const char* json, spz_activities** out);

/* family: "matching", "interval:f..g", "ruelle:u", "sym2k:u",
 * "reciprocal", "explicit:[u0,u1,...]". */
spz_status spz_activities_from_family(const spz_graph* g, const char* family,
                                      spz_activities** out);

spz_status spz_activities_to_json(const spz_graph* g, const spz_activities* a, char** json_out);
void spz_activities_free(spz_activities* a);

/* ---- polynomials ----------------------------------------------------- */

/* The expanded product over edges of (1 + lambda_e x_u x_v). */
spz_status spz_poly_omega(const spz_graph* g, char** json_out);

/* Z(G, lambda, u; x), multivariate. */
spz_status spz_poly_z(const spz_graph* g, const spz_activities* a, char** json_out);

/* Z(G, lambda, u; y^{1/2} 1) as {"coeffs":[...]}. */
spz_status spz_poly_z_univariate(const spz_graph* g, const spz_activities* a, char** json_out);

/* Roots of a univariate polynomial given as {"coeffs":[...]} (or a bare
 * coefficient array). as_csv != 0 selects "re,im,mult,modulus,arg" CSV. */
spz_status spz_unipoly_roots(const char* unipoly_json, int as_csv, char** out);

/* Key polynomial report (coefficients, roots, sector/disk/exterior data)
 * for one family at one vertex degree. */
spz_status spz_key_analysis(const char* family, unsigned degree, char** json_out);

/* ---- theorem engine --------------------------------------------------
 * verdict out-parameters: 0 = pass, 1 = certified failure / violation /
 * counterexample candidate. */

/* options JSON (all fields optional):
 *   {"weight_classes":["nonneg","bounded:2","atleast:1","bounded","atleast"],
 *    "alpha":0.5, "kappa":0.25}
 * "bounded"/"atleast" without a number use the graph's actual extreme
 * moduli. Default weight class list: ["nonneg"]. */
spz_status spz_certify(const spz_graph* g, const spz_activities* a, const char* options_json,
                       char** report_out, int* verdict);

/* options JSON: {"region":"sector:1.5707"|"disk:0.5"|"exterior:2"|"auto",
 *   "samples":10000, "seed":1, "threads":0, "weight_class":"nonneg"} */
spz_status spz_falsify(const spz_graph* g, const spz_activities* a, const char* options_json,
                       char** report_out, int* verdict);

/* sequence JSON: ["1","6","3"] (rational strings or integers). */
spz_status spz_logcc(const char* sequence_json, char** report_out, int* verdict);

/* options JSON: {"trials":500, "seed":7, "max_vertices":8, "max_edges":10,
 *   "width":1, "threads":0}; omit "width" for unrestricted intervals. */
spz_status spz_scan(const char* options_json, char** report_out, int* verdict);

/* ---- statistical mechanics -------------------------------------------
 * options JSON:
 *   {"beta":1.0, "J":0.0, "mu":[0,"inf",0],
 *    "family":"cycle"|"torus:r", "sizes":[3,4,5],
 *    "sweep":{"param":"J"|"beta","from":-1,"to":1,"steps":11},
 *    "csv":false}
 * Pass a graph handle for single-graph observables, or null with
 * "family"/"sizes" for free-energy sequences. The report carries observable
 * rows plus the analyticity clauses for the model's key polynomial. With
 * "csv":true the rows are rendered as CSV inside the "csv" field. */
spz_status spz_statmech(const spz_graph* g_or_null, const char* options_json, char** report_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SPANPOLY_H */
