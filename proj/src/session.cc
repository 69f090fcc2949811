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

#include "relanno/session.h"

#include <algorithm>
#include <chrono>

#include "relanno/error.h"
#include "text_util.h"

namespace relanno {

const char *EventKindName(EventKind kind) {
  switch (kind) {
    case EventKind::kSentencesAdded: return "sentences_added";
    case EventKind::kLabelsAdded: return "labels_added";
    case EventKind::kEntityAdded: return "entity_added";
    case EventKind::kEntityDeleted: return "entity_deleted";
    case EventKind::kRelationSet: return "relation_set";
    case EventKind::kRelationUnset: return "relation_unset";
  }
  return "unknown";
}

Clock SteadyClock() {
  return [] {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
  };
}

namespace {

std::vector<std::string_view> CheckedLines(std::string_view raw,
                                           const char *what) {
  if (!utf8::IsValid(raw)) {
    throw Error(ErrorCode::kInvalidText,
                std::string(what) + " input is not valid UTF-8");
  }
  std::vector<std::string_view> lines = internal::NonBlankLines(raw);
  if (lines.empty()) {
    throw Error(ErrorCode::kEmptyInput,
                std::string(what) + " input has no non-blank line");
  }
  return lines;
}

}  // namespace

AnnotationSession::AnnotationSession(Clock clock) : clock_(std::move(clock)) {}

AnnotationSession AnnotationSession::FromParts(SessionParts parts,
                                               Clock clock) {
  AnnotationSession session(std::move(clock));
  session.sentences_ = std::move(parts.sentences);
  session.labels_ = std::move(parts.labels);
  for (EntityMention &e : parts.entities) {
    session.next_entity_id_ = std::max(session.next_entity_id_, e.id + 1);
    const EntityId id = e.id;
    session.entities_.insert_or_assign(id, std::move(e));
  }
  for (RelationMention &r : parts.relations) {
    // Dangling argument ids stay reserved.
    session.next_entity_id_ =
        std::max({session.next_entity_id_, r.arg1 + 1, r.arg2 + 1});
    const PairKey key = r.key();
    session.relations_.insert_or_assign(key, std::move(r));
  }
  return session;
}

void AnnotationSession::Log(EventKind kind,
                            std::optional<SentenceId> sentence_id) {
  std::int64_t now = clock_();
  if (!events_.entries.empty()) {
    now = std::max(now, events_.entries.back().timestamp_ms);
  }
  events_.entries.push_back(Event{now, kind, sentence_id});
}

const Sentence &AnnotationSession::RequireSentence(SentenceId id) const {
  const Sentence *sentence = FindSentence(id);
  if (sentence == nullptr) {
    throw Error(ErrorCode::kUnknownSentence,
                "no sentence with id " + std::to_string(id));
  }
  return *sentence;
}

std::size_t AnnotationSession::IngestSentences(std::string_view raw) {
  const std::vector<std::string_view> lines = CheckedLines(raw, "sentence");
  for (const std::string_view line : lines) {
    sentences_.push_back(Sentence{sentences_.size(), std::string(line)});
  }
  Log(EventKind::kSentencesAdded, std::nullopt);
  return lines.size();
}

std::size_t AnnotationSession::IngestLabels(std::string_view raw) {
  const std::vector<std::string_view> lines = CheckedLines(raw, "relation");
  std::size_t added = 0;
  for (const std::string_view line : lines) {
    if (HasLabel(line)) continue;
    labels_.push_back(RelationLabel{std::string(line)});
    ++added;
  }
  Log(EventKind::kLabelsAdded, std::nullopt);
  return added;
}

EntityId AnnotationSession::AddEntity(SentenceId sentence_id,
                                      const Span &span) {
  const Sentence &sentence = RequireSentence(sentence_id);
  std::string text = SpanText(sentence, span);
  for (const auto &[id, e] : entities_) {
    if (e.sentence_id == sentence_id && e.span == span) {
      throw Error(ErrorCode::kDuplicateSpan,
                  "span [" + std::to_string(span.start) + ", " +
                      std::to_string(span.end) +
                      ") is already entity " + std::to_string(id));
    }
  }
  const EntityId id = next_entity_id_++;
  entities_.emplace(id, EntityMention{id, sentence_id, span, std::move(text)});
  Log(EventKind::kEntityAdded, sentence_id);
  return id;
}

std::size_t AnnotationSession::DeleteEntity(EntityId entity_id) {
  const auto it = entities_.find(entity_id);
  if (it == entities_.end()) {
    throw Error(ErrorCode::kUnknownEntity,
                "no entity with id " + std::to_string(entity_id));
  }
  const SentenceId sentence_id = it->second.sentence_id;
  entities_.erase(it);
  const std::size_t removed = std::erase_if(relations_, [&](const auto &kv) {
    return kv.first.arg1 == entity_id || kv.first.arg2 == entity_id;
  });
  Log(EventKind::kEntityDeleted, sentence_id);
  return removed;
}

std::vector<EntityPair> AnnotationSession::EntityPairs(
    SentenceId sentence_id) const {
  RequireSentence(sentence_id);
  const std::vector<EntityId> ids = EntitiesOf(sentence_id);
  std::vector<EntityPair> pairs;
  pairs.reserve(ids.size() * (ids.size() > 0 ? ids.size() - 1 : 0));
  for (const EntityId a : ids) {
    for (const EntityId b : ids) {
      if (a != b) pairs.emplace_back(a, b);
    }
  }
  return pairs;
}

std::vector<std::string> AnnotationSession::SetRelation(
    SentenceId sentence_id, EntityId arg1, EntityId arg2,
    std::string_view label, bool on) {
  RequireSentence(sentence_id);
  for (const EntityId id : {arg1, arg2}) {
    const EntityMention *e = FindEntity(id);
    if (e == nullptr || e->sentence_id != sentence_id) {
      throw Error(ErrorCode::kUnknownEntity,
                  "no entity " + std::to_string(id) + " in sentence " +
                      std::to_string(sentence_id));
    }
  }
  if (arg1 == arg2) {
    throw Error(ErrorCode::kSelfPair,
                "entity " + std::to_string(arg1) + " paired with itself");
  }
  if (!HasLabel(label)) {
    throw Error(ErrorCode::kUnknownLabel,
                "label '" + std::string(label) + "' is not in the label set");
  }

  const PairKey key{sentence_id, arg1, arg2};
  auto it = relations_.find(key);
  if (on) {
    if (it == relations_.end()) {
      it = relations_.emplace(key, RelationMention{sentence_id, arg1, arg2, {}})
               .first;
    }
    std::vector<std::string> &names = it->second.relation_names;
    if (std::find(names.begin(), names.end(), label) == names.end()) {
      names.emplace_back(label);
      Log(EventKind::kRelationSet, sentence_id);
    }
    return names;
  }

  if (it == relations_.end()) return {};
  std::vector<std::string> &names = it->second.relation_names;
  const auto pos = std::find(names.begin(), names.end(), label);
  if (pos == names.end()) return names;
  names.erase(pos);
  Log(EventKind::kRelationUnset, sentence_id);
  if (names.empty()) {
    relations_.erase(it);
    return {};
  }
  return names;
}

std::vector<std::string> AnnotationSession::SearchLabels(
    std::string_view query) const {
  const std::string needle = internal::AsciiLower(query);
  std::vector<std::string> result;
  for (const RelationLabel &label : labels_) {
    if (internal::AsciiLower(label.name).find(needle) != std::string::npos) {
      result.push_back(label.name);
    }
  }
  return result;
}

void AnnotationSession::Reset() {
  sentences_.clear();
  labels_.clear();
  entities_.clear();
  relations_.clear();
  events_.entries.clear();
  next_entity_id_ = 0;
}

const Sentence *AnnotationSession::FindSentence(SentenceId id) const {
  if (id >= sentences_.size()) return nullptr;
  return &sentences_[id];
}

const EntityMention *AnnotationSession::FindEntity(EntityId id) const {
  const auto it = entities_.find(id);
  return it == entities_.end() ? nullptr : &it->second;
}

const RelationMention *AnnotationSession::FindRelation(
    const PairKey &key) const {
  const auto it = relations_.find(key);
  return it == relations_.end() ? nullptr : &it->second;
}

bool AnnotationSession::HasLabel(std::string_view name) const {
  return std::any_of(labels_.begin(), labels_.end(),
                     [&](const RelationLabel &l) { return l.name == name; });
}

std::vector<EntityId> AnnotationSession::EntitiesOf(
    SentenceId sentence_id) const {
  std::vector<EntityId> ids;
  for (const auto &[id, e] : entities_) {
    if (e.sentence_id == sentence_id) ids.push_back(id);
  }
  return ids;
}

}  // namespace relanno
