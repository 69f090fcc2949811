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

// Value types shared by the annotation engine, the serializers and the
// statistics code.
//
// All character offsets count Unicode scalar values of the UTF-8 encoded
// sentence text, never bytes. A span [start, end) is half-open.

#ifndef RELANNO_ANNOTATION_MODEL_H_
#define RELANNO_ANNOTATION_MODEL_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace relanno {

using SentenceId = std::size_t;
using EntityId = std::size_t;

struct Sentence {
  SentenceId id = 0;
  std::string text;  // UTF-8, never contains '\n'

  friend bool operator==(const Sentence &, const Sentence &) = default;
};

struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t length() const { return end - start; }

  friend auto operator<=>(const Span &, const Span &) = default;
};

struct RelationLabel {
  std::string name;

  friend bool operator==(const RelationLabel &, const RelationLabel &) = default;
};

struct EntityMention {
  EntityId id = 0;
  SentenceId sentence_id = 0;
  Span span;
  std::string text;

  friend bool operator==(const EntityMention &, const EntityMention &) = default;
};

// Key of a directed entity pair. (a, b) and (b, a) are different pairs.
struct PairKey {
  SentenceId sentence_id = 0;
  EntityId arg1 = 0;
  EntityId arg2 = 0;

  friend auto operator<=>(const PairKey &, const PairKey &) = default;
};

struct RelationMention {
  SentenceId sentence_id = 0;
  EntityId arg1 = 0;
  EntityId arg2 = 0;
  // Label names in the order they were first set on the pair.
  std::vector<std::string> relation_names;

  PairKey key() const { return {sentence_id, arg1, arg2}; }

  friend bool operator==(const RelationMention &,
                         const RelationMention &) = default;
};

// Returns the slice text[span.start, span.end) counted in scalar values.
// Throws Error(kOutOfBounds) unless start < end <= ScalarLength(text).
std::string SpanText(std::string_view text, const Span &span);
inline std::string SpanText(const Sentence &sentence, const Span &span) {
  return SpanText(sentence.text, span);
}

// True iff the two half-open spans share at least one position.
constexpr bool SpansOverlap(const Span &a, const Span &b) {
  const std::size_t lo = a.start > b.start ? a.start : b.start;
  const std::size_t hi = a.end < b.end ? a.end : b.end;
  return lo < hi;
}

namespace utf8 {

// True if `text` is well-formed UTF-8 (no surrogates, no overlongs).
bool IsValid(std::string_view text);

// Number of scalar values. `text` must be valid UTF-8.
std::size_t ScalarLength(std::string_view text);

// Byte offset of every scalar value boundary, including text.size() at the
// end; result has ScalarLength(text) + 1 entries.
std::vector<std::size_t> Boundaries(std::string_view text);

// Decodes `text` into code points.
std::u32string Decode(std::string_view text);

// Encodes a single scalar value.
void Append(char32_t cp, std::string *out);

}  // namespace utf8

}  // namespace relanno

#endif  // RELANNO_ANNOTATION_MODEL_H_
