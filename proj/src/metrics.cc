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

#include "relanno/metrics.h"

#include <algorithm>
#include <set>
#include <utility>

#include "relanno/error.h"

namespace relanno {

const char *SeverityName(Severity severity) {
  return severity == Severity::kError ? "error" : "warning";
}

std::string Location::ToString() const {
  std::string out;
  const auto add = [&](const std::string &part) {
    if (!out.empty()) out += ", ";
    out += part;
  };
  if (sentence_id) add("sentence " + std::to_string(*sentence_id));
  if (entity_id) add("entity " + std::to_string(*entity_id));
  if (pair) {
    add("pair " + std::to_string(pair->first) + "->" +
        std::to_string(pair->second));
  }
  return out;
}

std::string Finding::ToString() const {
  std::string out = std::string(SeverityName(severity)) + ": " + code;
  const std::string where = location.ToString();
  if (!where.empty()) out += " [" + where + "]";
  return out + " " + message;
}

namespace {

class Validator {
 public:
  explicit Validator(const AnnotationSession &session) : session_(session) {}

  std::vector<Finding> Run() {
    CheckSentences();
    CheckEntities();
    CheckRelations();
    std::vector<Finding> all = std::move(errors_);
    all.insert(all.end(), warnings_.begin(), warnings_.end());
    return all;
  }

 private:
  void Error(std::string code, std::string message, Location where) {
    errors_.push_back(
        {Severity::kError, std::move(code), std::move(message), where});
  }
  void Warn(std::string code, std::string message, Location where) {
    warnings_.push_back(
        {Severity::kWarning, std::move(code), std::move(message), where});
  }

  void CheckSentences() {
    const auto &sentences = session_.sentences();
    for (std::size_t i = 0; i < sentences.size(); ++i) {
      const Sentence &s = sentences[i];
      Location where{i, std::nullopt, std::nullopt};
      if (s.id != i) {
        Error("INVALID_SENTENCE",
              "sentence id " + std::to_string(s.id) + " stored at index " +
                  std::to_string(i),
              where);
      }
      if (!utf8::IsValid(s.text)) {
        Error("INVALID_SENTENCE", "text is not valid UTF-8", where);
      } else if (s.text.find('\n') != std::string::npos) {
        Error("INVALID_SENTENCE", "text contains a newline", where);
      } else if (s.text.find_first_not_of(" \t\r\f\v") == std::string::npos) {
        Error("INVALID_SENTENCE", "text is blank", where);
      }
    }
  }

  void CheckEntities() {
    std::map<SentenceId, std::vector<const EntityMention *>> by_sentence;
    for (const auto &[id, e] : session_.entities()) {
      Location where{e.sentence_id, id, std::nullopt};
      const Sentence *sentence = session_.FindSentence(e.sentence_id);
      if (sentence == nullptr) {
        Error("DANGLING_SENTENCE",
              "entity refers to missing sentence " +
                  std::to_string(e.sentence_id),
              where);
        continue;
      }
      if (!utf8::IsValid(sentence->text)) continue;
      const std::size_t length = utf8::ScalarLength(sentence->text);
      if (e.span.start >= e.span.end || e.span.end > length) {
        Error("SPAN_OUT_OF_BOUNDS",
              "span [" + std::to_string(e.span.start) + ", " +
                  std::to_string(e.span.end) + ") outside sentence of length " +
                  std::to_string(length),
              where);
        continue;
      }
      const std::string slice = SpanText(*sentence, e.span);
      if (slice != e.text) {
        Error("SPAN_MISMATCH",
              "entity text '" + e.text + "' differs from slice '" + slice +
                  "'",
              where);
      }
      by_sentence[e.sentence_id].push_back(&e);
    }

    for (const auto &[sentence_id, list] : by_sentence) {
      for (std::size_t i = 0; i < list.size(); ++i) {
        for (std::size_t j = i + 1; j < list.size(); ++j) {
          const EntityMention &a = *list[i];
          const EntityMention &b = *list[j];
          if (a.span == b.span) {
            Error("DUPLICATE_SPAN",
                  "entities " + std::to_string(a.id) + " and " +
                      std::to_string(b.id) + " share a span",
                  {sentence_id, b.id, std::nullopt});
          } else if (SpansOverlap(a.span, b.span)) {
            Warn("OVERLAP",
                 "entity '" + a.text + "' overlaps entity '" + b.text + "'",
                 {sentence_id, std::nullopt, EntityPair{a.id, b.id}});
          }
        }
      }
    }
  }

  void CheckRelations() {
    std::set<SentenceId> with_relations;
    for (const auto &[key, r] : session_.relations()) {
      Location where{r.sentence_id, std::nullopt, EntityPair{r.arg1, r.arg2}};
      if (session_.FindSentence(r.sentence_id) == nullptr) {
        Error("DANGLING_SENTENCE",
              "relation refers to missing sentence " +
                  std::to_string(r.sentence_id),
              where);
      }
      for (const EntityId arg : {r.arg1, r.arg2}) {
        const EntityMention *e = session_.FindEntity(arg);
        if (e == nullptr) {
          Error("DANGLING_ENTITY",
                "relation refers to missing entity " + std::to_string(arg),
                where);
        } else if (e->sentence_id != r.sentence_id) {
          Error("CROSS_SENTENCE",
                "entity " + std::to_string(arg) + " belongs to sentence " +
                    std::to_string(e->sentence_id),
                where);
        }
      }
      if (r.arg1 == r.arg2) {
        Error("SELF_PAIR", "relation pairs an entity with itself", where);
      }
      if (r.relation_names.empty()) {
        Error("EMPTY_RELATION", "relation mention has no label", where);
      }
      std::set<std::string> seen;
      for (const std::string &name : r.relation_names) {
        if (!seen.insert(name).second) {
          Error("DUPLICATE_LABEL", "label '" + name + "' listed twice", where);
        }
        if (!session_.HasLabel(name)) {
          Error("DANGLING_LABEL",
                "label '" + name + "' is not in the label set", where);
        }
      }
      if (!r.relation_names.empty()) with_relations.insert(r.sentence_id);
    }

    std::set<SentenceId> with_entities;
    for (const auto &[id, e] : session_.entities()) {
      if (session_.FindSentence(e.sentence_id)) {
        with_entities.insert(e.sentence_id);
      }
    }
    for (const SentenceId s : with_entities) {
      if (!with_relations.contains(s)) {
        Warn("NO_RELATIONS", "sentence has entities but no labeled pair",
             {s, std::nullopt, std::nullopt});
      }
    }
  }

  const AnnotationSession &session_;
  std::vector<Finding> errors_;
  std::vector<Finding> warnings_;
};

}  // namespace

std::vector<Finding> ValidateSession(const AnnotationSession &session) {
  return Validator(session).Run();
}

std::size_t CountErrors(const std::vector<Finding> &findings) {
  return std::count_if(findings.begin(), findings.end(), [](const Finding &f) {
    return f.severity == Severity::kError;
  });
}

CorpusStats ComputeCorpusStats(const AnnotationSession &session) {
  CorpusStats stats;
  stats.sentence_count = session.sentences().size();
  stats.entity_count = session.entities().size();
  for (const auto &[key, r] : session.relations()) {
    if (r.relation_names.empty()) continue;
    ++stats.relation_pair_count;
    stats.triplet_count += r.relation_names.size();
  }
  if (stats.sentence_count > 0) {
    const auto n = static_cast<double>(stats.sentence_count);
    stats.avg_entities_per_sentence =
        static_cast<double>(stats.entity_count) / n;
    stats.avg_relation_pairs_per_sentence =
        static_cast<double>(stats.relation_pair_count) / n;
    stats.avg_triplets_per_sentence =
        static_cast<double>(stats.triplet_count) / n;
  }
  return stats;
}

TimingStats ComputeTimingStats(const EventLog &log) {
  std::map<SentenceId, std::pair<std::int64_t, std::int64_t>> bounds;
  for (std::size_t i = 0; i < log.entries.size(); ++i) {
    const Event &event = log.entries[i];
    if (i > 0 && event.timestamp_ms < log.entries[i - 1].timestamp_ms) {
      throw relanno::Error(ErrorCode::kMalformedLog,
                           "timestamp decreases at entry " + std::to_string(i));
    }
    if (!event.sentence_id) continue;
    auto [it, inserted] = bounds.try_emplace(
        *event.sentence_id, event.timestamp_ms, event.timestamp_ms);
    if (!inserted) it->second.second = event.timestamp_ms;
  }

  TimingStats stats;
  for (const auto &[sentence_id, interval] : bounds) {
    const double seconds =
        static_cast<double>(interval.second - interval.first) / 1000.0;
    stats.per_sentence_seconds.emplace(sentence_id, seconds);
    stats.total_seconds += seconds;
  }
  if (!bounds.empty()) {
    stats.avg_minutes_per_sentence =
        stats.total_seconds / 60.0 / static_cast<double>(bounds.size());
  }
  return stats;
}

}  // namespace relanno
