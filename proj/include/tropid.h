/* C interface to the tropid identity checker.
 *
 * Every function returns a tropid_status. On failure the message is available
 * from tropid_last_error() until the next call on the same thread. Strings
 * returned through char** are owned by the caller and released with
 * tropid_string_free(). Handles are released with their *_free function;
 * passing NULL to a free function is a no-op. */
#ifndef TROPID_H
#define TROPID_H

#include <stddef.h>
#include <stdint.h>

#if defined(TROPID_BUILDING_LIBRARY)
#define TROPID_API __attribute__((visibility("default")))
#else
#define TROPID_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tropid_status {
    TROPID_OK = 0,
    TROPID_ERR_PARSE = 1,
    TROPID_ERR_INVALID_ARGUMENT = 2,
    TROPID_ERR_PRECONDITION = 3,
    TROPID_ERR_INTERNAL = 4,
    TROPID_ERR_NULL_POINTER = 5
} tropid_status;

typedef enum tropid_model {
    TROPID_MODEL_UTN = 0,
    TROPID_MODEL_POSET = 1,
    TROPID_MODEL_BICYCLIC = 2,
    TROPID_MODEL_FMIM = 3
} tropid_model;

typedef enum tropid_polys_mode { TROPID_POLYS_RAW = 0, TROPID_POLYS_ESSENTIAL = 1 } tropid_polys_mode;

typedef struct tropid_identity tropid_identity;
typedef struct tropid_poset tropid_poset;

typedef struct tropid_check_options {
    int fast_two_letter; /* n = 2 over two letters: univariate restrictions */
} tropid_check_options;

typedef struct tropid_oracle_config {
    tropid_model model;
    size_t n;                  /* TROPID_MODEL_UTN */
    const tropid_poset* poset; /* TROPID_MODEL_POSET */
    size_t trials;
    int64_t range;             /* 0: max(|w|, |v|) */
    double bottom_probability;
    uint64_t seed;
} tropid_oracle_config;

TROPID_API const char* tropid_version(void);
TROPID_API const char* tropid_status_name(tropid_status status);
TROPID_API const char* tropid_last_error(void);
TROPID_API void tropid_string_free(char* s);

/* alphabet may be NULL: the letters occurring in the identity. */
TROPID_API tropid_status tropid_identity_parse(const char* text, const char* alphabet, tropid_identity** out);
TROPID_API tropid_status tropid_identity_to_string(const tropid_identity* id, char** out);
TROPID_API void tropid_identity_free(tropid_identity* id);

TROPID_API tropid_status tropid_poset_from_json(const char* json, tropid_poset** out);
TROPID_API tropid_status tropid_poset_chain(size_t n, tropid_poset** out);
TROPID_API tropid_status tropid_poset_to_json(const tropid_poset* poset, char** out);
TROPID_API tropid_status tropid_poset_max_chain(const tropid_poset* poset, size_t* out);
TROPID_API void tropid_poset_free(tropid_poset* poset);

/* *holds is 1 or 0; *json receives the verdict (with a witness when it fails).
 * options may be NULL. */
TROPID_API tropid_status tropid_check(const tropid_identity* id, size_t n, const tropid_check_options* options,
                                      int* holds, char** json);
TROPID_API tropid_status tropid_check_poset(const tropid_identity* id, const tropid_poset* poset,
                                            const tropid_check_options* options, int* holds, char** json);

/* *found is 0 when the identity holds in the model; *json is then NULL. */
TROPID_API tropid_status tropid_witness_utn(const tropid_identity* id, size_t n, int* found, char** json);
TROPID_API tropid_status tropid_witness_bicyclic(const tropid_identity* id, int* found, char** json);

TROPID_API tropid_status tropid_polys(const tropid_identity* id, size_t n, tropid_polys_mode mode, char** json);

/* Evaluates both sides under a JSON assignment. For TROPID_MODEL_UTN an n of
 * 0 takes the dimension from the first matrix; poset is used by
 * TROPID_MODEL_POSET only. *equal is 1 when the sides coincide. */
TROPID_API tropid_status tropid_eval(const tropid_identity* id, tropid_model model, size_t n,
                                     const tropid_poset* poset, const char* assignment_json, int* equal,
                                     char** json);

/* Random search by direct evaluation. *found is 1 with a verified witness. */
TROPID_API tropid_status tropid_oracle(const tropid_identity* id, const tropid_oracle_config* config, int* found,
                                       char** json);

#ifdef __cplusplus
}
#endif

#endif /* TROPID_H */
