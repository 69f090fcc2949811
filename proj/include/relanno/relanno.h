/* Copyright 2026 The relanno Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

/* C interface to the relation triplet annotation engine.
 *
 * Sessions are opaque handles. Every call returns a relanno_status; outputs
 * are written through pointer arguments only on RELANNO_OK. Strings are
 * UTF-8; strings returned by the library are owned by the caller and must be
 * released with relanno_string_free(). Offsets count Unicode scalar values.
 *
 * After a failed call, relanno_last_error() returns a message describing the
 * failure on the calling thread. A session must not be used from two threads
 * at once. */

#ifndef RELANNO_RELANNO_H_
#define RELANNO_RELANNO_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(RELANNO_BUILDING_LIBRARY)
#    define RELANNO_API __declspec(dllexport)
#  else
#    define RELANNO_API __declspec(dllimport)
#  endif
#else
#  define RELANNO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum relanno_status {
  RELANNO_OK = 0,
  RELANNO_ERR_EMPTY_INPUT = 1,
  RELANNO_ERR_INVALID_TEXT = 2,
  RELANNO_ERR_OUT_OF_BOUNDS = 3,
  RELANNO_ERR_UNKNOWN_SENTENCE = 4,
  RELANNO_ERR_UNKNOWN_ENTITY = 5,
  RELANNO_ERR_UNKNOWN_LABEL = 6,
  RELANNO_ERR_DUPLICATE_SPAN = 7,
  RELANNO_ERR_SELF_PAIR = 8,
  RELANNO_ERR_INVALID_SESSION = 9,
  RELANNO_ERR_PARSE = 10,
  RELANNO_ERR_SCHEMA = 11,
  RELANNO_ERR_SPAN_MISMATCH = 12,
  RELANNO_ERR_MALFORMED_LOG = 13,
  RELANNO_ERR_INVALID_ARGUMENT = 100,
  RELANNO_ERR_INTERNAL = 101
} relanno_status;

typedef struct relanno_session relanno_session;

/* Millisecond clock; must be non-decreasing. */
typedef int64_t (*relanno_clock_fn)(void *user_data);

typedef struct relanno_pair {
  size_t arg1;
  size_t arg2;
} relanno_pair;

typedef struct relanno_corpus_stats {
  size_t sentence_count;
  size_t entity_count;
  size_t relation_pair_count;
  size_t triplet_count;
  double avg_entities_per_sentence;
  double avg_relation_pairs_per_sentence;
  double avg_triplets_per_sentence;
} relanno_corpus_stats;

typedef struct relanno_timing_stats {
  size_t timed_sentence_count;
  double total_seconds;
  double avg_minutes_per_sentence;
} relanno_timing_stats;

typedef struct relanno_validation {
  size_t error_count;
  size_t warning_count;
} relanno_validation;

RELANNO_API const char *relanno_status_name(relanno_status status);
RELANNO_API const char *relanno_last_error(void);
RELANNO_API void relanno_string_free(char *s);

/* Session lifetime. */
RELANNO_API relanno_status relanno_session_create(relanno_session **out);
RELANNO_API relanno_status relanno_session_create_with_clock(
    relanno_clock_fn clock, void *user_data, relanno_session **out);
RELANNO_API relanno_status relanno_session_demo(relanno_session **out);
RELANNO_API void relanno_session_destroy(relanno_session *session);
RELANNO_API relanno_status relanno_session_reset(relanno_session *session);

/* Annotation workflow. */
RELANNO_API relanno_status relanno_ingest_sentences(relanno_session *session,
                                                    const char *raw,
                                                    size_t *added);
RELANNO_API relanno_status relanno_ingest_labels(relanno_session *session,
                                                 const char *raw,
                                                 size_t *added);
RELANNO_API relanno_status relanno_add_entity(relanno_session *session,
                                              size_t sentence_id, size_t start,
                                              size_t end, size_t *entity_id);
RELANNO_API relanno_status relanno_delete_entity(relanno_session *session,
                                                 size_t entity_id,
                                                 size_t *cascaded);

/* Writes up to `capacity` pairs to `pairs` and the total pair count to
 * `count`. Pass capacity 0 to query the count. */
RELANNO_API relanno_status relanno_entity_pairs(const relanno_session *session,
                                                size_t sentence_id,
                                                relanno_pair *pairs,
                                                size_t capacity, size_t *count);

/* `on` nonzero sets the label, zero clears it. `label_count` receives the
 * size of the pair's label set afterwards. */
RELANNO_API relanno_status relanno_set_relation(relanno_session *session,
                                                size_t sentence_id, size_t arg1,
                                                size_t arg2, const char *label,
                                                int on, size_t *label_count);

/* Pair label set as newline-separated names (empty string for none). */
RELANNO_API relanno_status relanno_relation_labels(
    const relanno_session *session, size_t sentence_id, size_t arg1,
    size_t arg2, char **names);

/* Matching labels as newline-separated names. */
RELANNO_API relanno_status relanno_search_labels(
    const relanno_session *session, const char *query, char **names);

RELANNO_API relanno_status relanno_sentence_count(
    const relanno_session *session, size_t *count);
RELANNO_API relanno_status relanno_sentence_text(
    const relanno_session *session, size_t sentence_id, char **text);

/* Serialization. */
RELANNO_API relanno_status relanno_export_json(const relanno_session *session,
                                               char **json);
RELANNO_API relanno_status relanno_import_json(const char *json,
                                               relanno_session **out);
RELANNO_API relanno_status relanno_export_brat(const relanno_session *session,
                                               char **text,
                                               char **annotations);

/* Metrics. `report` receives one finding per line, each prefixed by
 * "error: " or "warning: "; it may be NULL. */
RELANNO_API relanno_status relanno_validate(const relanno_session *session,
                                            relanno_validation *summary,
                                            char **report);
RELANNO_API relanno_status relanno_compute_corpus_stats(
    const relanno_session *session, relanno_corpus_stats *stats);
RELANNO_API relanno_status relanno_compute_timing_stats(
    const relanno_session *session, relanno_timing_stats *stats);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* RELANNO_RELANNO_H_ */
