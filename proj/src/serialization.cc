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

#include "relanno/serialization.h"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "json.hpp"
#include "relanno/error.h"
#include "relanno/metrics.h"

namespace relanno {

using Json = nlohmann::ordered_json;

namespace {

void RequireValid(const AnnotationSession &session) {
  const std::vector<Finding> findings = ValidateSession(session);
  if (CountErrors(findings) == 0) return;
  std::string message = "session does not validate:";
  for (const Finding &f : findings) {
    if (f.severity == Severity::kError) message += "\n  " + f.ToString();
  }
  throw Error(ErrorCode::kInvalidSession, message);
}

// One sentence's entities and relation mentions in export order.
struct SortedSentence {
  std::vector<const EntityMention *> entities;
  std::vector<const RelationMention *> relations;
};

std::vector<SortedSentence> SortForExport(const AnnotationSession &session) {
  std::vector<SortedSentence> out(session.sentences().size());
  for (const auto &[id, e] : session.entities()) {
    out[e.sentence_id].entities.push_back(&e);
  }
  for (const auto &[key, r] : session.relations()) {
    out[r.sentence_id].relations.push_back(&r);
  }
  for (SortedSentence &s : out) {
    std::sort(s.entities.begin(), s.entities.end(),
              [](const EntityMention *a, const EntityMention *b) {
                return a->span < b->span;
              });
    const auto sort_key = [&](const RelationMention *r) {
      const EntityMention &a1 = *session.FindEntity(r->arg1);
      const EntityMention &a2 = *session.FindEntity(r->arg2);
      return std::tie(a1.span.start, a2.span.start, a1.text, a2.text);
    };
    std::sort(s.relations.begin(), s.relations.end(),
              [&](const RelationMention *a, const RelationMention *b) {
                return sort_key(a) < sort_key(b);
              });
  }
  return out;
}

std::string Dump(const Json &json) {
  return json.dump(2, ' ', false, Json::error_handler_t::strict);
}

// Field access with the JSON path in every error message.
class RecordReader {
 public:
  RecordReader(const Json &object, std::string path)
      : object_(object), path_(std::move(path)) {
    if (!object_.is_object()) Fail(path_, "expected an object");
  }

  [[noreturn]] static void Fail(const std::string &path,
                                const std::string &what) {
    throw Error(ErrorCode::kSchemaError, path + ": " + what);
  }

  const Json *Find(const char *field) const {
    const auto it = object_.find(field);
    return it == object_.end() ? nullptr : &*it;
  }

  std::string FieldPath(const char *field) const {
    return path_ + "." + field;
  }

  const std::string &String(const char *field) const {
    const Json *value = Find(field);
    if (value == nullptr) Fail(FieldPath(field), "missing required field");
    if (!value->is_string()) Fail(FieldPath(field), "expected a string");
    return value->get_ref<const std::string &>();
  }

  const Json &Array(const char *field) const {
    const Json *value = Find(field);
    if (value == nullptr) Fail(FieldPath(field), "missing required field");
    if (!value->is_array()) Fail(FieldPath(field), "expected an array");
    return *value;
  }

  std::optional<std::size_t> Offset(const char *field) const {
    const Json *value = Find(field);
    if (value == nullptr) return std::nullopt;
    if (!value->is_number_unsigned()) {
      Fail(FieldPath(field), "expected a non-negative integer");
    }
    return value->get<std::size_t>();
  }

 private:
  const Json &object_;
  std::string path_;
};

std::string Quote(const std::string &s) { return "'" + s + "'"; }

// Scalar-value offset of the first occurrence of `needle` in `hay`.
std::optional<std::size_t> FindScalar(const std::u32string &hay,
                                      const std::u32string &needle) {
  if (needle.empty()) return std::nullopt;
  const std::size_t pos = hay.find(needle);
  if (pos == std::u32string::npos) return std::nullopt;
  return pos;
}

}  // namespace

std::string ExportJson(const AnnotationSession &session) {
  RequireValid(session);
  const std::vector<SortedSentence> sorted = SortForExport(session);

  Json records = Json::array();
  for (const Sentence &sentence : session.sentences()) {
    const SortedSentence &s = sorted[sentence.id];
    Json entities = Json::array();
    for (const EntityMention *e : s.entities) {
      Json entity = Json::object();
      entity["Text"] = e->text;
      entity["Start"] = e->span.start;
      entity["End"] = e->span.end;
      entities.push_back(std::move(entity));
    }
    Json relations = Json::array();
    for (const RelationMention *r : s.relations) {
      const EntityMention &a1 = *session.FindEntity(r->arg1);
      const EntityMention &a2 = *session.FindEntity(r->arg2);
      Json relation = Json::object();
      relation["Arg1Text"] = a1.text;
      relation["Arg1Start"] = a1.span.start;
      relation["Arg2Text"] = a2.text;
      relation["Arg2Start"] = a2.span.start;
      relation["RelationNames"] = r->relation_names;
      relations.push_back(std::move(relation));
    }
    Json record = Json::object();
    record["SentText"] = sentence.text;
    record["EntityMentions"] = std::move(entities);
    record["RelationMentions"] = std::move(relations);
    records.push_back(std::move(record));
  }
  return Dump(records);
}

AnnotationSession ImportJson(std::string_view json, Clock clock) {
  Json root;
  try {
    root = Json::parse(json.begin(), json.end());
  } catch (const Json::parse_error &e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  if (!root.is_array()) RecordReader::Fail("$", "expected an array");

  SessionParts parts;
  std::set<std::string> known_labels;
  EntityId next_id = 0;

  // Relation arguments are resolved per record, so collect them after the
  // entity ids of every record are fixed.
  struct PendingArg {
    std::string text;
    std::optional<std::size_t> start;
  };
  struct PendingRelation {
    SentenceId sentence_id;
    PendingArg arg1;
    PendingArg arg2;
    std::vector<std::string> names;
  };
  std::vector<PendingRelation> pending;

  for (std::size_t i = 0; i < root.size(); ++i) {
    const std::string path = "$[" + std::to_string(i) + "]";
    const RecordReader record(root[i], path);
    const std::string &text = record.String("SentText");
    if (text.find('\n') != std::string::npos) {
      RecordReader::Fail(record.FieldPath("SentText"), "contains a newline");
    }
    if (text.find_first_not_of(" \t\r\f\v") == std::string::npos) {
      RecordReader::Fail(record.FieldPath("SentText"), "is blank");
    }
    parts.sentences.push_back(Sentence{i, text});
    const std::u32string scalars = utf8::Decode(text);

    const Json &entities = record.Array("EntityMentions");
    for (std::size_t j = 0; j < entities.size(); ++j) {
      const std::string entry_path =
          record.FieldPath("EntityMentions") + "[" + std::to_string(j) + "]";
      const RecordReader entry(entities[j], entry_path);
      const std::string &entity_text = entry.String("Text");
      const std::optional<std::size_t> start = entry.Offset("Start");
      const std::optional<std::size_t> end = entry.Offset("End");
      if (start.has_value() != end.has_value()) {
        RecordReader::Fail(entry_path, "Start and End must appear together");
      }
      const std::string where = "record " + std::to_string(i) +
                                ": EntityMentions[" + std::to_string(j) + "]";
      Span span;
      if (start) {
        span = Span{*start, *end};
        if (span.start >= span.end || span.end > scalars.size()) {
          throw Error(ErrorCode::kSpanMismatch,
                      where + " offsets [" + std::to_string(span.start) +
                          ", " + std::to_string(span.end) +
                          ") do not fit SentText");
        }
        const std::string slice = SpanText(text, span);
        if (slice != entity_text) {
          throw Error(ErrorCode::kSpanMismatch,
                      where + " Text " + Quote(entity_text) +
                          " does not match slice " + Quote(slice));
        }
      } else {
        const std::optional<std::size_t> found =
            FindScalar(scalars, utf8::Decode(entity_text));
        if (!found) {
          throw Error(ErrorCode::kSpanMismatch,
                      where + " Text " + Quote(entity_text) +
                          " does not occur in SentText");
        }
        span = Span{*found, *found + utf8::ScalarLength(entity_text)};
      }
      parts.entities.push_back(EntityMention{next_id++, i, span, entity_text});
    }

    const Json &relations = record.Array("RelationMentions");
    for (std::size_t j = 0; j < relations.size(); ++j) {
      const std::string entry_path = record.FieldPath("RelationMentions") +
                                     "[" + std::to_string(j) + "]";
      const RecordReader entry(relations[j], entry_path);
      PendingRelation relation{i,
                               {entry.String("Arg1Text"),
                                entry.Offset("Arg1Start")},
                               {entry.String("Arg2Text"),
                                entry.Offset("Arg2Start")},
                               {}};
      const Json &names = entry.Array("RelationNames");
      for (std::size_t k = 0; k < names.size(); ++k) {
        const std::string name_path = entry.FieldPath("RelationNames") + "[" +
                                      std::to_string(k) + "]";
        if (!names[k].is_string()) {
          RecordReader::Fail(name_path, "expected a string");
        }
        const std::string &name = names[k].get_ref<const std::string &>();
        if (name.empty() || name.find('\n') != std::string::npos) {
          RecordReader::Fail(name_path, "is not a valid relation name");
        }
        if (known_labels.insert(name).second) {
          parts.labels.push_back(RelationLabel{name});
        }
        relation.names.push_back(name);
      }
      pending.push_back(std::move(relation));
    }
  }

  std::vector<std::vector<const EntityMention *>> by_record(
      parts.sentences.size());
  for (const EntityMention &e : parts.entities) {
    by_record[e.sentence_id].push_back(&e);
  }
  const auto resolve = [&](SentenceId sentence_id, const PendingArg &arg) {
    const EntityMention *best = nullptr;
    for (const EntityMention *e : by_record[sentence_id]) {
      if (e->text != arg.text) continue;
      if (arg.start && e->span.start != *arg.start) continue;
      if (best == nullptr || e->span < best->span) best = e;
    }
    return best != nullptr ? best->id : next_id++;
  };

  std::map<PairKey, RelationMention> merged;
  std::vector<PairKey> order;
  for (const PendingRelation &p : pending) {
    const PairKey key{p.sentence_id, resolve(p.sentence_id, p.arg1),
                      resolve(p.sentence_id, p.arg2)};
    auto [it, inserted] = merged.try_emplace(
        key, RelationMention{key.sentence_id, key.arg1, key.arg2, {}});
    if (inserted) order.push_back(key);
    std::vector<std::string> &names = it->second.relation_names;
    names.insert(names.end(), p.names.begin(), p.names.end());
  }
  for (const PairKey &key : order) {
    parts.relations.push_back(std::move(merged.at(key)));
  }
  return AnnotationSession::FromParts(std::move(parts), std::move(clock));
}

std::string SanitizeBratLabel(std::string_view label) {
  std::string out;
  for (const char32_t cp : utf8::Decode(label)) {
    const bool keep = (cp >= 'A' && cp <= 'Z') || (cp >= 'a' && cp <= 'z') ||
                      (cp >= '0' && cp <= '9') || cp == '_';
    out.push_back(keep ? static_cast<char>(cp) : '_');
  }
  return out;
}

BratDocument ExportBrat(const AnnotationSession &session) {
  RequireValid(session);
  const std::vector<SortedSentence> sorted = SortForExport(session);

  BratDocument doc;
  std::map<EntityId, std::size_t> t_index;
  std::string relation_lines;
  std::size_t next_t = 1;
  std::size_t next_r = 1;
  std::size_t shift = 0;
  for (const Sentence &sentence : session.sentences()) {
    if (sentence.id > 0) doc.text += '\n';
    doc.text += sentence.text;
    const SortedSentence &s = sorted[sentence.id];
    for (const EntityMention *e : s.entities) {
      t_index[e->id] = next_t;
      doc.annotations += "T" + std::to_string(next_t++) + "\tEntity " +
                         std::to_string(shift + e->span.start) + " " +
                         std::to_string(shift + e->span.end) + "\t" + e->text +
                         "\n";
    }
    for (const RelationMention *r : s.relations) {
      for (const std::string &name : r->relation_names) {
        relation_lines += "R" + std::to_string(next_r++) + "\t" +
                          SanitizeBratLabel(name) + " Arg1:T" +
                          std::to_string(t_index.at(r->arg1)) + " Arg2:T" +
                          std::to_string(t_index.at(r->arg2)) + "\n";
      }
    }
    shift += utf8::ScalarLength(sentence.text) + 1;
  }
  doc.annotations += relation_lines;
  return doc;
}

}  // namespace relanno
