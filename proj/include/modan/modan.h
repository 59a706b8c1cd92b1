/* modan: exact rational calculus for multipliers, derivations, connections,
 * and cohomology of finite-dimensional commutative associative algebras and
 * their modules.
 *
 * Every computation runs against a workspace loaded from a single JSON
 * document (algebra + optional module / kappa / potential / g / pair blocks).
 * Results come back as heap-allocated JSON strings; release them with
 * modan_string_free. All rationals are exact and serialized as strings.
 *
 * Thread-safety: distinct workspaces may be used from distinct threads;
 * one workspace must not be shared without external locking. The error
 * message buffer is thread-local.
 */

#ifndef MODAN_H
#define MODAN_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum modan_status {
  MODAN_OK = 0,
  /* Input text is not valid JSON or misses required fields. */
  MODAN_ERR_PARSE = 1,
  /* The data parses but violates an axiom (commutativity, associativity,
   * module compatibility). The message carries a witness. */
  MODAN_ERR_INVALID = 2,
  /* A well-formed request that cannot be satisfied for this workspace
   * (wrong shapes, missing blocks, no unit, not free, and so on). */
  MODAN_ERR_ARGUMENT = 3,
  /* The computation refuses to proceed: a section has nonzero residual or
   * curvature where flatness is required, or a size cap was exceeded. */
  MODAN_ERR_REFUSED = 4,
  /* Internal invariant failure; always a bug worth reporting. */
  MODAN_ERR_INTERNAL = 5
} modan_status;

/* Opaque handle to a loaded and validated workspace. */
typedef struct modan_workspace modan_workspace;

/* Library version as "major.minor.patch"; static storage, do not free. */
const char* modan_version(void);

/* Message for the most recent failure on this thread; static storage valid
 * until the next API call on the same thread, do not free. */
const char* modan_last_error(void);

/* Release a string returned through an out_json parameter. NULL is ok. */
void modan_string_free(char* s);

/* Parse and validate a workspace from JSON text / from a file on disk.
 * On success *out receives the handle. On failure *out is NULL and the
 * status tells whether the input failed to parse or failed validation. */
modan_status modan_workspace_open(const char* json_text, modan_workspace** out);
modan_status modan_workspace_open_file(const char* path, modan_workspace** out);
void modan_workspace_close(modan_workspace* ws);

/* Dimensions, unit, annihilators, and detected structure of the loaded
 * algebra (and module, when present). */
modan_status modan_describe(modan_workspace* ws, char** out_json);

/* Solution spaces, each reported as ambient dimension + canonical basis:
 * operators R with R(f*g) = f*R(g); module endomorphism-compatible pairs
 * (Delta, R); derivations X with the Leibniz law; pairs (nabla, X) with the
 * mixed Leibniz law. The module_* verbs need a module block. */
modan_status modan_multipliers(modan_workspace* ws, char** out_json);
modan_status modan_module_multipliers(modan_workspace* ws, char** out_json);
modan_status modan_derivations(modan_workspace* ws, char** out_json);
modan_status modan_module_derivations(modan_workspace* ws, char** out_json);

/* Linear section of the projection (nabla, X) -> X over a free module,
 * with its computed properties and curvature table.
 * kappa_spec: NULL or "lift" for the componentwise lift; "potential" for
 * lift + the workspace potential block; literal JSON ('{' or '[') holding
 * a potential (one matrix per base derivation). */
modan_status modan_connection(modan_workspace* ws, const char* kappa_spec, char** out_json);

/* Conjugate the module component of a pair by an invertible A-linear g:
 * target "multiplier" maps (Delta, R) to (g Delta g^-1, R), target
 * "derivation" likewise for (nabla, X). g_json / pair_json may be NULL to
 * use the workspace blocks. */
modan_status modan_gauge(modan_workspace* ws, const char* g_json, const char* target,
                         const char* pair_json, char** out_json);

/* Cohomology of the multiplier-space complex for degrees 0..q_max.
 * kappa_spec: NULL or "id" for the identity assignment; "workspace" for the
 * workspace kappa block; literal JSON holding a matrix. Refuses when the
 * assignment has nonzero composition residual. */
modan_status modan_hochschild(modan_workspace* ws, const char* kappa_spec, size_t q_max,
                              char** out_json);

/* Cohomology of the derivation-space form complex for degrees 0..q_max.
 * kappa_spec: NULL or "id" for the identity self-assignment; "lift" /
 * "potential" / literal potential JSON for the connection from base
 * derivations into module derivation pairs; literal JSON with a "kappa"
 * matrix for an explicit assignment. Refuses on nonzero curvature. */
modan_status modan_derham(modan_workspace* ws, const char* kappa_spec, size_t q_max,
                          char** out_json);

/* Verify on every basis form and basis derivation up to q_max that the Lie
 * derivative equals the anticommutator of the differential with the
 * interior product (identity assignment). */
modan_status modan_check_magic(modan_workspace* ws, size_t q_max, char** out_json);

/* Verify on every basis form up to q_max that contraction with the
 * canonical degree operator inverts the differential, which exhibits the
 * form complex of the module as exact. Needs a module block. */
modan_status modan_homotopy(modan_workspace* ws, size_t q_max, char** out_json);

/* Run the full structural check suite (seeded, deterministic) and report
 * one pass/fail/skip entry per check. */
modan_status modan_check(modan_workspace* ws, size_t q_max, unsigned long long seed,
                         char** out_json);

/* Recompute every dimension along an independent brute-force path and
 * report agreement with the primary solver, statement by statement. */
modan_status modan_oracle(modan_workspace* ws, size_t q_max, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* MODAN_H */
