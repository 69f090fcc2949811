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

// In-memory annotation session: sentence and label ingestion, entity span
// annotation, directed pair enumeration and relation toggling.
//
// Every mutating call commits to the session before returning; there is no
// separate save step and no persistence. Stages may be run in any order.
// A session is owned by one thread at a time.

#ifndef RELANNO_SESSION_H_
#define RELANNO_SESSION_H_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "relanno/annotation_model.h"

namespace relanno {

enum class EventKind {
  kSentencesAdded,
  kLabelsAdded,
  kEntityAdded,
  kEntityDeleted,
  kRelationSet,
  kRelationUnset,
};

const char *EventKindName(EventKind kind);

struct Event {
  std::int64_t timestamp_ms = 0;
  EventKind kind = EventKind::kSentencesAdded;
  std::optional<SentenceId> sentence_id;

  friend bool operator==(const Event &, const Event &) = default;
};

struct EventLog {
  std::vector<Event> entries;
};

// Monotonic millisecond clock. Tests inject a deterministic one.
using Clock = std::function<std::int64_t()>;
Clock SteadyClock();

// Raw session contents. Used to rebuild a session from an export without
// going through the checked operations.
struct SessionParts {
  std::vector<Sentence> sentences;
  std::vector<RelationLabel> labels;
  std::vector<EntityMention> entities;
  std::vector<RelationMention> relations;
};

using EntityPair = std::pair<EntityId, EntityId>;

class AnnotationSession {
 public:
  explicit AnnotationSession(Clock clock = SteadyClock());

  // Assembles a session from parts without checking any invariant. Entity
  // ids are kept; later AddEntity calls continue after the largest entity or
  // relation argument id. Relations with the same key are overwritten.
  // Use metrics ValidateSession() to inspect the result.
  static AnnotationSession FromParts(SessionParts parts,
                                     Clock clock = SteadyClock());

  // Appends every non-blank line (trimmed) as a sentence. Returns the number
  // added. Throws kEmptyInput if all lines are blank, kInvalidText on
  // malformed UTF-8; the session is unchanged on error.
  std::size_t IngestSentences(std::string_view raw);

  // Adds every non-blank trimmed line as a label unless already present.
  // Returns the number of new labels.
  std::size_t IngestLabels(std::string_view raw);

  EntityId AddEntity(SentenceId sentence_id, const Span &span);

  // Removes the entity and every relation mention that uses it. Returns the
  // number of relation mentions removed.
  std::size_t DeleteEntity(EntityId entity_id);

  // All ordered pairs of distinct live entities of the sentence, sorted by
  // (arg1, arg2).
  std::vector<EntityPair> EntityPairs(SentenceId sentence_id) const;

  // Turns `label` on or off for the directed pair and returns the pair's
  // label set afterwards. A pair whose last label is turned off is removed.
  std::vector<std::string> SetRelation(SentenceId sentence_id, EntityId arg1,
                                       EntityId arg2, std::string_view label,
                                       bool on);

  // Labels containing `query`, ignoring ASCII case, in insertion order.
  std::vector<std::string> SearchLabels(std::string_view query) const;

  void Reset();

  const std::vector<Sentence> &sentences() const { return sentences_; }
  const std::vector<RelationLabel> &labels() const { return labels_; }
  const std::map<EntityId, EntityMention> &entities() const {
    return entities_;
  }
  const std::map<PairKey, RelationMention> &relations() const {
    return relations_;
  }
  const EventLog &events() const { return events_; }

  const Sentence *FindSentence(SentenceId id) const;
  const EntityMention *FindEntity(EntityId id) const;
  const RelationMention *FindRelation(const PairKey &key) const;
  bool HasLabel(std::string_view name) const;

  // Live entity ids of one sentence in ascending order.
  std::vector<EntityId> EntitiesOf(SentenceId sentence_id) const;

 private:
  void Log(EventKind kind, std::optional<SentenceId> sentence_id);
  const Sentence &RequireSentence(SentenceId id) const;

  Clock clock_;
  std::vector<Sentence> sentences_;
  std::vector<RelationLabel> labels_;
  std::map<EntityId, EntityMention> entities_;
  std::map<PairKey, RelationMention> relations_;
  EventLog events_;
  EntityId next_entity_id_ = 0;
};

}  // namespace relanno

#endif  // RELANNO_SESSION_H_
