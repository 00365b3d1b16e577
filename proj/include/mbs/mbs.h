#ifndef MBS_H
#define MBS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(MBS_BUILDING)
#    define MBS_API __declspec(dllexport)
#  else
#    define MBS_API __declspec(dllimport)
#  endif
#else
#  define MBS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values 1..25 mirror mbs::ErrorCode in declaration order. */
typedef enum mbs_status {
    MBS_OK = 0,
    MBS_ERR_EMPTY_SECTOR_BOUNDARY = 1,
    MBS_ERR_DANGLING_BRANCH_REFERENCE = 2,
    MBS_ERR_ZERO_DEGREE = 3,
    MBS_ERR_ISOLATED_BRANCH = 4,
    MBS_ERR_DUPLICATE_IDENTIFIER = 5,
    MBS_ERR_NEGATIVE_GENUS = 6,
    MBS_ERR_UNKNOWN_BRANCH = 7,
    MBS_ERR_UNKNOWN_SECTOR = 8,
    MBS_ERR_NOT_REGULAR = 9,
    MBS_ERR_DISCONNECTED = 10,
    MBS_ERR_NONORIENTABLE_SECTOR = 11,
    MBS_ERR_NONORIENTABLE_BOUNDARY = 12,
    MBS_ERR_INTERNAL_MISMATCH = 13,
    MBS_ERR_ODD_COMPONENT_CHI = 14,
    MBS_ERR_NOT_AN_ANNULUS = 15,
    MBS_ERR_DEGREE_NOT_ONE = 16,
    MBS_ERR_SAME_BRANCH = 17,
    MBS_ERR_RESULT_CAP_EXCEEDED = 18,
    MBS_ERR_SEARCH_BUDGET_EXCEEDED = 19,
    MBS_ERR_DEGREE_TOO_SMALL = 20,
    MBS_ERR_EMPTY_DEGREES = 21,
    MBS_ERR_ISOLATED_VERTEX = 22,
    MBS_ERR_INVALID_ARGUMENT = 23,
    MBS_ERR_SYNTAX = 24,
    MBS_ERR_SEMANTIC = 25,
    MBS_ERR_NULL_ARGUMENT = 100,
    MBS_ERR_OUT_OF_RANGE = 101,
    MBS_ERR_INTERNAL = 102
} mbs_status;

typedef struct mbs_surface mbs_surface;
typedef struct mbs_document mbs_document;
typedef struct mbs_group mbs_group;
typedef struct mbs_heegaard mbs_heegaard;

typedef enum mbs_export_object {
    MBS_EXPORT_DUAL_GRAPH = 0,
    MBS_EXPORT_BOUNDARY = 1,
    MBS_EXPORT_SPINE = 2,
    MBS_EXPORT_SURFACE = 3
} mbs_export_object;

typedef enum mbs_export_format { MBS_FORMAT_JSON = 0, MBS_FORMAT_DOT = 1 } mbs_export_format;

typedef enum mbs_obstruction_verdict {
    MBS_OMEGA_CANDIDATE = 0,
    MBS_OMEGA_NOT_CANDIDATE = 1,
    MBS_OMEGA_UNKNOWN = 2
} mbs_obstruction_verdict;

/* Errors. The message and position belong to the calling thread and stay valid
   until its next failing call. */
MBS_API const char* mbs_last_error(void);
MBS_API void mbs_last_error_position(size_t* line, size_t* column);
MBS_API const char* mbs_status_name(mbs_status status);

/* Every char* and int* handed out by the library is released with these. */
MBS_API void mbs_string_free(char* s);
MBS_API void mbs_ints_free(int* values);

/* Text format and lifetime. */
MBS_API mbs_status mbs_document_parse(const char* text, mbs_document** out);
MBS_API size_t mbs_document_size(const mbs_document* doc);
MBS_API mbs_status mbs_document_get(const mbs_document* doc, size_t index, mbs_surface** out);
MBS_API void mbs_document_free(mbs_document* doc);

MBS_API mbs_status mbs_surface_parse(const char* text, mbs_surface** out);
MBS_API mbs_status mbs_surface_from_json(const char* json, mbs_surface** out);
MBS_API mbs_status mbs_surface_serialize(const mbs_surface* s, char** out);
MBS_API mbs_surface* mbs_surface_clone(const mbs_surface* s);
MBS_API void mbs_surface_free(mbs_surface* s);

MBS_API size_t mbs_surface_branch_count(const mbs_surface* s);
MBS_API size_t mbs_surface_sector_count(const mbs_surface* s);
MBS_API mbs_status mbs_surface_name(const mbs_surface* s, char** out);
MBS_API mbs_status mbs_surface_branch_id(const mbs_surface* s, size_t index, char** out);

/* Elementary invariants. */
MBS_API mbs_status mbs_validate(const mbs_surface* s, int prune, mbs_surface** out);
MBS_API mbs_status mbs_is_regular(const mbs_surface* s, int* out);
MBS_API mbs_status mbs_is_connected(const mbs_surface* s, int* out);
MBS_API mbs_status mbs_euler_characteristic(const mbs_surface* s, int64_t* out);
MBS_API mbs_status mbs_branch_index(const mbs_surface* s, const char* branch, size_t* out);
MBS_API mbs_status mbs_branch_degree(const mbs_surface* s, const char* branch, int64_t* out);

/* Homology. Invariant factors are decimal strings: they may exceed 64 bits. */
MBS_API mbs_status mbs_h1(const mbs_surface* s, mbs_group** out);
MBS_API size_t mbs_group_free_rank(const mbs_group* g);
MBS_API size_t mbs_group_factor_count(const mbs_group* g);
MBS_API mbs_status mbs_group_factor(const mbs_group* g, size_t index, char** out);
MBS_API mbs_status mbs_group_to_string(const mbs_group* g, char** out);
MBS_API mbs_status mbs_group_torsion_string(const mbs_group* g, char** out);
MBS_API void mbs_group_free(mbs_group* g);

/* *obstructed is 1 when H1 has torsion. */
MBS_API mbs_status mbs_s3_obstruction(const mbs_surface* s, int* obstructed, mbs_group** homology);

/* Genus bounds. */
MBS_API mbs_status mbs_genus_bound_sectors(const mbs_surface* s, size_t* out);
MBS_API mbs_status mbs_genus_bound_heegaard(const mbs_surface* s, uint64_t cap, int enumerate_flips,
                                            mbs_heegaard** out);
MBS_API int64_t mbs_heegaard_bound(const mbs_heegaard* h);
MBS_API int mbs_heegaard_exhaustive(const mbs_heegaard* h);
MBS_API int64_t mbs_heegaard_boundary_genus(const mbs_heegaard* h);
MBS_API int64_t mbs_heegaard_dual_betti(const mbs_heegaard* h);
MBS_API int mbs_heegaard_disconnected_dual(const mbs_heegaard* h);
MBS_API uint64_t mbs_heegaard_evaluated(const mbs_heegaard* h);
MBS_API uint64_t mbs_heegaard_rejected_flips(const mbs_heegaard* h);
/* Witness cyclic orders as text, one branch per line: "<branch>: <sector>.<slot> ...". */
MBS_API mbs_status mbs_heegaard_witness(const mbs_heegaard* h, char** out);
MBS_API void mbs_heegaard_free(mbs_heegaard* h);
MBS_API mbs_status mbs_best_genus_bound(const mbs_surface* s, uint64_t cap, int64_t* out);
MBS_API mbs_status mbs_permutation_system_count(const mbs_surface* s, uint64_t* total);

/* Exports use the input-order permutation system without flips. */
MBS_API mbs_status mbs_export(const mbs_surface* s, mbs_export_object object, mbs_export_format format,
                              char** out);

/* Minors and isomorphism. */
MBS_API mbs_status mbs_canonical_form(const mbs_surface* s, char** out);
MBS_API mbs_status mbs_are_isomorphic(const mbs_surface* a, const mbs_surface* b, int* out);
/* Canonical forms of all minors, sorted, one per line. */
MBS_API mbs_status mbs_all_minors(const mbs_surface* s, size_t max_results, size_t* count, char** out);
MBS_API mbs_status mbs_is_minor(const mbs_surface* minor, const mbs_surface* host, size_t max_results,
                                int* out);
/* *certificate is a JSON document, or NULL when nothing was found within the depth. */
MBS_API mbs_status mbs_neighborhood_minor(const mbs_surface* minor, const mbs_surface* host, size_t depth,
                                          size_t budget, int* found, char** certificate);
MBS_API mbs_status mbs_replay_certificate(const char* certificate, const mbs_surface* target, int* ok);
MBS_API mbs_status mbs_omega_candidate(const mbs_surface* s, size_t max_results,
                                       mbs_obstruction_verdict* verdict, size_t* proper_minors,
                                       char** note);
MBS_API mbs_status mbs_standard_decomposition(const mbs_surface* s, mbs_surface** disks, int** closed_genera,
                                              size_t* count);

MBS_API mbs_status mbs_remove_sector(const mbs_surface* s, const char* sector, mbs_surface** out);
MBS_API mbs_status mbs_contract_annulus(const mbs_surface* s, const char* sector, mbs_surface** out);
MBS_API mbs_status mbs_reduce_degree(const mbs_surface* s, const char* branch, mbs_surface** out);
MBS_API mbs_status mbs_torus_sum(const mbs_surface* s, const char* sector, mbs_surface** out);

/* Builders. `signs` may be NULL. `endpoints` holds 2 * edge_count vertex numbers. */
MBS_API mbs_status mbs_build_seifert(const int64_t* p, size_t n, mbs_surface** out);
MBS_API mbs_status mbs_build_one_sector(int genus, const int64_t* degrees, const int* signs, size_t n,
                                        mbs_surface** out);
MBS_API mbs_status mbs_build_pants(mbs_surface** out);
MBS_API mbs_status mbs_build_rose(int n, mbs_surface** out);
MBS_API mbs_status mbs_build_graph(size_t vertices, const size_t* endpoints, size_t edge_count,
                                   mbs_surface** out);
MBS_API mbs_status mbs_build_obstruction(mbs_surface** out);

#ifdef __cplusplus
}
#endif

#endif /* MBS_H */
