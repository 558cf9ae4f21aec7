#ifndef RPG_H
#define RPG_H

/* C interface to the reduced-power-graph toolkit.
 *
 * All functions returning rpg_status report failure details through
 * rpg_last_error(), which holds a thread-local message for the most
 * recent failing call on the calling thread. Strings returned through
 * char** out-parameters are heap-allocated and must be released with
 * rpg_string_free().
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef struct rpg_group rpg_group;
typedef struct rpg_graph rpg_graph;

typedef enum {
    RPG_OK = 0,
    RPG_ERR_PARSE = 1,        /* malformed spec string or table document */
    RPG_ERR_INVALID = 2,      /* invalid parameter or unknown option */
    RPG_ERR_NOT_A_GROUP = 3,  /* table fails a group axiom */
    RPG_ERR_CAP = 4,          /* order or solver cap exceeded */
    RPG_ERR_UNSUPPORTED = 5,  /* operation not defined for this input */
    RPG_ERR_INTERNAL = 6
} rpg_status;

typedef struct {
    int max_order;        /* group construction bound (default 512) */
    int solver_cap;       /* clique/chromatic/alpha/kappa bound (default 256) */
    int hamiltonian_cap;  /* hamiltonicity search bound (default 64) */
    int perfect_cap;      /* perfectness check bound (default 40) */
} rpg_caps;

void rpg_caps_default(rpg_caps* caps);

/* Group construction. spec follows the grammar Z<n>, D<2n>, Q<4n>,
 * SD<8n>, E<p>^<k>, with direct products joined by 'x' (e.g. "Z4xZ2"). */
rpg_status rpg_group_from_spec(const char* spec, const rpg_caps* caps, rpg_group** out);
rpg_status rpg_group_from_table_json(const char* text, const rpg_caps* caps, rpg_group** out);
rpg_status rpg_group_from_table_csv(const char* text, const char* label, const rpg_caps* caps,
                                    rpg_group** out);
void rpg_group_free(rpg_group* g);

int rpg_group_order(const rpg_group* g);
const char* rpg_group_label(const rpg_group* g);
/* format: "json" or "csv" for the Cayley table, "summary" for a
 * human-readable description (order, element orders, basic flags). */
rpg_status rpg_group_export(const rpg_group* g, const char* format, char** out);

/* Graph construction. reduced selects RP over P; proper drops the
 * identity vertex; directed builds the arc version. */
rpg_status rpg_build_graph(const rpg_group* g, int reduced, int directed, int proper,
                           rpg_graph** out);
void rpg_graph_free(rpg_graph* gr);
int rpg_graph_vertex_count(const rpg_graph* gr);
int rpg_graph_edge_count(const rpg_graph* gr);
/* format: "dot", "json", "csv", or "table". */
rpg_status rpg_graph_export(const rpg_graph* gr, const char* format, char** out);

/* Invariant report for the undirected (reduced) power graph variant.
 * format: "json" or "table". Fields above their caps are reported as
 * skipped, not errors. */
rpg_status rpg_invariants(const rpg_group* g, int reduced, int proper, const rpg_caps* caps,
                          const char* format, char** out);

/* Run the verification suite over the built-in catalog up to max_order.
 * only: comma-separated check ids ("T1,T6"), or NULL/empty for all;
 * an unknown id is RPG_ERR_INVALID. format: "json" or "table".
 * failures receives the number of failed checks (0 on full pass). */
rpg_status rpg_verify(int max_order, const char* only, const rpg_caps* caps, int parallelism,
                      const char* format, char** report, int* failures);

/* Newline-separated "label<TAB>order" listing of the catalog. */
rpg_status rpg_catalog(int max_order, const rpg_caps* caps, char** out);

/* List of known check ids with one-line descriptions, one per line. */
rpg_status rpg_check_ids(char** out);

const char* rpg_last_error(void);
void rpg_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* RPG_H */
