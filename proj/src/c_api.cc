// Copyright 2026 The relanno Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "relanno/relanno.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "relanno/demo.h"
#include "relanno/error.h"
#include "relanno/metrics.h"
#include "relanno/serialization.h"
#include "relanno/session.h"

struct relanno_session {
  relanno::AnnotationSession session;
};

namespace {

thread_local std::string last_error;

relanno_status Fail(relanno_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
relanno_status Guard(Body &&body) {
  try {
    last_error.clear();
    body();
    return RELANNO_OK;
  } catch (const relanno::Error &e) {
    return Fail(static_cast<relanno_status>(e.code()), e.what());
  } catch (const std::bad_alloc &) {
    return Fail(RELANNO_ERR_INTERNAL, "out of memory");
  } catch (const std::exception &e) {
    return Fail(RELANNO_ERR_INTERNAL, e.what());
  }
}

char *CopyString(const std::string &s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string JoinLines(const std::vector<std::string> &lines) {
  std::string out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (i > 0) out += '\n';
    out += lines[i];
  }
  return out;
}

#define RELANNO_REQUIRE(cond)                                           \
  do {                                                                  \
    if (!(cond)) {                                                      \
      return Fail(RELANNO_ERR_INVALID_ARGUMENT, "null argument: " #cond); \
    }                                                                   \
  } while (0)

}  // namespace

extern "C" {

const char *relanno_status_name(relanno_status status) {
  switch (status) {
    case RELANNO_OK: return "OK";
    case RELANNO_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case RELANNO_ERR_INTERNAL: return "Internal";
    default:
      if (status >= RELANNO_ERR_EMPTY_INPUT &&
          status <= RELANNO_ERR_MALFORMED_LOG) {
        return relanno::ErrorCodeName(static_cast<relanno::ErrorCode>(status));
      }
      return "Unknown";
  }
}

const char *relanno_last_error(void) { return last_error.c_str(); }

void relanno_string_free(char *s) { std::free(s); }

relanno_status relanno_session_create(relanno_session **out) {
  RELANNO_REQUIRE(out);
  return Guard([&] { *out = new relanno_session{relanno::AnnotationSession()}; });
}

relanno_status relanno_session_create_with_clock(relanno_clock_fn clock,
                                                 void *user_data,
                                                 relanno_session **out) {
  RELANNO_REQUIRE(clock);
  RELANNO_REQUIRE(out);
  return Guard([&] {
    *out = new relanno_session{relanno::AnnotationSession(
        [clock, user_data] { return clock(user_data); })};
  });
}

relanno_status relanno_session_demo(relanno_session **out) {
  RELANNO_REQUIRE(out);
  return Guard(
      [&] { *out = new relanno_session{relanno::demo::BuildDemoSession()}; });
}

void relanno_session_destroy(relanno_session *session) { delete session; }

relanno_status relanno_session_reset(relanno_session *session) {
  RELANNO_REQUIRE(session);
  return Guard([&] { session->session.Reset(); });
}

relanno_status relanno_ingest_sentences(relanno_session *session,
                                        const char *raw, size_t *added) {
  RELANNO_REQUIRE(session);
  RELANNO_REQUIRE(raw);
  return Guard([&] {
    const std::size_t n = session->session.IngestSentences(raw);
    if (added) *added = n;
  });
}

relanno_status relanno_ingest_labels(relanno_session *session, const char *raw,
                                     size_t *added) {
  RELANNO_REQUIRE(session);
  RELANNO_REQUIRE(raw);
  return Guard([&] {
    const std::size_t n = session->session.IngestLabels(raw);
    if (added) *added = n;
  });
}

relanno_status relanno_add_entity(relanno_session *session, size_t sentence_id,
                                  size_t start, size_t end,
                                  size_t *entity_id) {
  RELANNO_REQUIRE(session);
  return Guard([&] {
    const relanno::EntityId id =
        session->session.AddEntity(sentence_id, relanno::Span{start, end});
    if (entity_id) *entity_id = id;
  });
}

relanno_status relanno_delete_entity(relanno_session *session,
                                     size_t entity_id, size_t *cascaded) {
  RELANNO_REQUIRE(session);
  return Guard([&] {
    const std::size_t n = session->session.DeleteEntity(entity_id);
    if (cascaded) *cascaded = n;
  });
}

relanno_status relanno_entity_pairs(const relanno_session *session,
                                    size_t sentence_id, relanno_pair *pairs,
                                    size_t capacity, size_t *count) {
  RELANNO_REQUIRE(session);
  RELANNO_REQUIRE(count);
  RELANNO_REQUIRE(pairs || capacity == 0);
  return Guard([&] {
    const auto all = session->session.EntityPairs(sentence_id);
    for (std::size_t i = 0; i < all.size() && i < capacity; ++i) {
      pairs[i] = relanno_pair{all[i].first, all[i].second};
    }
    *count = all.size();
  });
}

relanno_status relanno_set_relation(relanno_session *session,
                                    size_t sentence_id, size_t arg1,
                                    size_t arg2, const char *label, int on,
                                    size_t *label_count) {
  RELANNO_REQUIRE(session);
  RELANNO_REQUIRE(label);
  return Guard([&] {
    const auto names =
        session->session.SetRelation(sentence_id, arg1, arg2, label, on != 0);
    if (label_count) *label_count = names.size();
  });
}

relanno_status relanno_relation_labels(const relanno_session *session,
                                       size_t sentence_id, size_t arg1,
                                       size_t arg2, char **names) {
  RELANNO_REQUIRE(session);
  RELANNO_REQUIRE(names);
  return Guard([&] {
    const relanno::RelationMention *r =
        session->session.FindRelation({sentence_id, arg1, arg2});
    *names = CopyString(r ? JoinLines(r->relation_names) : std::string());
  });
}

relanno_status relanno_search_labels(const relanno_session *session,
                                     const char *query, char **names) {
  RELANNO_REQUIRE(session);
  RELANNO_REQUIRE(query);
  RELANNO_REQUIRE(names);
  return Guard([&] {
    *names = CopyString(JoinLines(session->session.SearchLabels(query)));
  });
}

relanno_status relanno_sentence_count(const relanno_session *session,
                                      size_t *count) {
  RELANNO_REQUIRE(session);
  RELANNO_REQUIRE(count);
  *count = session->session.sentences().size();
  return RELANNO_OK;
}

relanno_status relanno_sentence_text(const relanno_session *session,
                                     size_t sentence_id, char **text) {
  RELANNO_REQUIRE(session);
  RELANNO_REQUIRE(text);
  const relanno::Sentence *s = session->session.FindSentence(sentence_id);
  if (s == nullptr) {
    return Fail(RELANNO_ERR_UNKNOWN_SENTENCE,
                "no sentence with id " + std::to_string(sentence_id));
  }
  return Guard([&] { *text = CopyString(s->text); });
}

relanno_status relanno_export_json(const relanno_session *session,
                                   char **json) {
  RELANNO_REQUIRE(session);
  RELANNO_REQUIRE(json);
  return Guard(
      [&] { *json = CopyString(relanno::ExportJson(session->session)); });
}

relanno_status relanno_import_json(const char *json, relanno_session **out) {
  RELANNO_REQUIRE(json);
  RELANNO_REQUIRE(out);
  return Guard(
      [&] { *out = new relanno_session{relanno::ImportJson(json)}; });
}

relanno_status relanno_export_brat(const relanno_session *session, char **text,
                                   char **annotations) {
  RELANNO_REQUIRE(session);
  RELANNO_REQUIRE(text);
  RELANNO_REQUIRE(annotations);
  return Guard([&] {
    const relanno::BratDocument doc = relanno::ExportBrat(session->session);
    char *t = CopyString(doc.text);
    try {
      *annotations = CopyString(doc.annotations);
    } catch (...) {
      std::free(t);
      throw;
    }
    *text = t;
  });
}

relanno_status relanno_validate(const relanno_session *session,
                                relanno_validation *summary, char **report) {
  RELANNO_REQUIRE(session);
  RELANNO_REQUIRE(summary);
  return Guard([&] {
    const auto findings = relanno::ValidateSession(session->session);
    const std::size_t errors = relanno::CountErrors(findings);
    if (report) {
      std::string text;
      for (const relanno::Finding &f : findings) text += f.ToString() + "\n";
      *report = CopyString(text);
    }
    *summary = relanno_validation{errors, findings.size() - errors};
  });
}

relanno_status relanno_compute_corpus_stats(const relanno_session *session,
                                            relanno_corpus_stats *stats) {
  RELANNO_REQUIRE(session);
  RELANNO_REQUIRE(stats);
  return Guard([&] {
    const relanno::CorpusStats s =
        relanno::ComputeCorpusStats(session->session);
    *stats = relanno_corpus_stats{s.sentence_count,
                                  s.entity_count,
                                  s.relation_pair_count,
                                  s.triplet_count,
                                  s.avg_entities_per_sentence,
                                  s.avg_relation_pairs_per_sentence,
                                  s.avg_triplets_per_sentence};
  });
}

relanno_status relanno_compute_timing_stats(const relanno_session *session,
                                            relanno_timing_stats *stats) {
  RELANNO_REQUIRE(session);
  RELANNO_REQUIRE(stats);
  return Guard([&] {
    const relanno::TimingStats t =
        relanno::ComputeTimingStats(session->session.events());
    *stats = relanno_timing_stats{t.per_sentence_seconds.size(),
                                  t.total_seconds, t.avg_minutes_per_sentence};
  });
}

}  // extern "C"
