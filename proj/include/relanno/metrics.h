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

// Session validation and the density/timing statistics computed over a
// finished annotation session.

#ifndef RELANNO_METRICS_H_
#define RELANNO_METRICS_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "relanno/annotation_model.h"
#include "relanno/session.h"

namespace relanno {

enum class Severity { kError, kWarning };

const char *SeverityName(Severity severity);

// Where a finding was detected. Unset fields do not apply.
struct Location {
  std::optional<SentenceId> sentence_id;
  std::optional<EntityId> entity_id;
  std::optional<EntityPair> pair;

  std::string ToString() const;
};

// Error codes:
//   INVALID_SENTENCE   blank text, embedded newline or bad UTF-8
//   DANGLING_SENTENCE  entity or relation refers to a missing sentence
//   DANGLING_ENTITY    relation argument is not a live entity
//   DANGLING_LABEL     relation label is not in the label set
//   CROSS_SENTENCE     relation argument belongs to another sentence
//   SPAN_OUT_OF_BOUNDS entity span does not fit its sentence
//   SPAN_MISMATCH      entity text differs from the sentence slice
//   DUPLICATE_SPAN     two entities share (sentence, span)
//   EMPTY_RELATION     relation mention with no label
//   DUPLICATE_LABEL    relation mention lists a label twice
//   SELF_PAIR          relation mention with arg1 == arg2
// Warning codes:
//   OVERLAP            two entities of a sentence overlap
//   NO_RELATIONS       sentence has entities but no labeled pair
struct Finding {
  Severity severity = Severity::kError;
  std::string code;
  std::string message;
  Location location;

  // "error: CODE [location] message"
  std::string ToString() const;
};

// Returns all findings, errors first in detection order, then warnings.
// An empty result means the session is valid.
std::vector<Finding> ValidateSession(const AnnotationSession &session);

std::size_t CountErrors(const std::vector<Finding> &findings);

struct CorpusStats {
  std::size_t sentence_count = 0;
  std::size_t entity_count = 0;
  std::size_t relation_pair_count = 0;  // pairs bearing at least one label
  std::size_t triplet_count = 0;        // sum of label counts over pairs
  double avg_entities_per_sentence = 0.0;
  double avg_relation_pairs_per_sentence = 0.0;
  double avg_triplets_per_sentence = 0.0;
};

// Averages divide by sentence_count; zero sentences give zero averages.
CorpusStats ComputeCorpusStats(const AnnotationSession &session);

struct TimingStats {
  std::map<SentenceId, double> per_sentence_seconds;
  double total_seconds = 0.0;
  double avg_minutes_per_sentence = 0.0;
};

// Per-sentence time is the span between the first and the last event that
// names the sentence. Events without a sentence are ignored. Throws
// Error(kMalformedLog) if timestamps decrease anywhere in the log.
TimingStats ComputeTimingStats(const EventLog &log);

}  // namespace relanno

#endif  // RELANNO_METRICS_H_
