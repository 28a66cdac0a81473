#ifndef MFV_H
#define MFV_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>

// Result codes.
typedef enum MfvStatus {
  MFV_STATUS_OK = 0,
  // A required pointer argument was null.
  MFV_STATUS_NULL_ARGUMENT = 1,
  // A string argument was not valid UTF-8.
  MFV_STATUS_INVALID_UTF8 = 2,
  // Ideal text or a polynomial failed to parse.
  MFV_STATUS_PARSE = 3,
  // The case id is not known.
  MFV_STATUS_UNKNOWN_CASE = 4,
  // The computation rejected its input, for example a non-homogeneous ideal.
  MFV_STATUS_ALGEBRA = 5,
  // A Rust panic was caught at the boundary.
  MFV_STATUS_PANIC = 6,
} MfvStatus;

// A verification certificate.
typedef struct MfvCertificate MfvCertificate;

// An ideal together with its ring.
typedef struct MfvIdeal MfvIdeal;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread, or an empty string.
// The pointer stays valid until the next `mfv_*` call on the same thread.
const char *mfv_last_error(void);

// Library version as a static string.
const char *mfv_version(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and must not be used afterwards.
void mfv_string_free(char *s);

// Parses ideal-file text (`ring:` header followed by one generator per line).
//
// # Safety
// `text` must be a NUL-terminated string and `out` a writable pointer.
enum MfvStatus mfv_ideal_parse(const char *text, struct MfvIdeal **out);

// Releases an ideal. Null is ignored.
//
// # Safety
// `ideal` must come from [`mfv_ideal_parse`] and must not be used afterwards.
void mfv_ideal_free(struct MfvIdeal *ideal);

// Writes the reduced Gröbner basis as ideal-file text.
//
// # Safety
// `ideal` must be a live handle and `out` a writable pointer.
enum MfvStatus mfv_ideal_groebner_basis(const struct MfvIdeal *ideal, char **out);

// Decides `poly ∈ ideal`, or `poly ∈ √ideal` when `radical` is true.
//
// # Safety
// `ideal` must be a live handle, `poly` a NUL-terminated string and `out` writable.
enum MfvStatus mfv_ideal_contains(const struct MfvIdeal *ideal,
                                  const char *poly,
                                  bool radical,
                                  bool *out);

// Writes the Hilbert series of the quotient, for example `(1 + t)/(1 - t)^4`.
//
// # Safety
// `ideal` must be a live handle and `out` a writable pointer.
enum MfvStatus mfv_ideal_hilbert_series(const struct MfvIdeal *ideal, char **out);

// Runs one case, addressed as `fiber:<type>` or `deformation:<case>`.
//
// # Safety
// `case_id` must be a NUL-terminated string and `out` a writable pointer.
enum MfvStatus mfv_verify_case(const char *case_id, bool fast, struct MfvCertificate **out);

// True when no check failed. A null handle counts as not passed.
//
// # Safety
// `cert` must be null or a live handle.
bool mfv_certificate_passed(const struct MfvCertificate *cert);

// Number of checks in the certificate; zero for a null handle.
//
// # Safety
// `cert` must be null or a live handle.
size_t mfv_certificate_check_count(const struct MfvCertificate *cert);

// Writes the certificate as JSON.
//
// # Safety
// `cert` must be a live handle and `out` a writable pointer.
enum MfvStatus mfv_certificate_json(const struct MfvCertificate *cert, char **out);

// Releases a certificate. Null is ignored.
//
// # Safety
// `cert` must come from [`mfv_verify_case`] and must not be used afterwards.
void mfv_certificate_free(struct MfvCertificate *cert);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MFV_H */
