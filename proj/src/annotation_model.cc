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

#include "relanno/annotation_model.h"

#include <string>

#include "relanno/error.h"

namespace relanno {

const char *ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kInvalidText: return "InvalidText";
    case ErrorCode::kOutOfBounds: return "OutOfBounds";
    case ErrorCode::kUnknownSentence: return "UnknownSentence";
    case ErrorCode::kUnknownEntity: return "UnknownEntity";
    case ErrorCode::kUnknownLabel: return "UnknownLabel";
    case ErrorCode::kDuplicateSpan: return "DuplicateSpan";
    case ErrorCode::kSelfPair: return "SelfPair";
    case ErrorCode::kInvalidSession: return "InvalidSession";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kSchemaError: return "SchemaError";
    case ErrorCode::kSpanMismatch: return "SpanMismatch";
    case ErrorCode::kMalformedLog: return "MalformedLog";
  }
  return "Unknown";
}

namespace utf8 {
namespace {

// Decodes one scalar value starting at text[pos]. Returns the number of
// bytes consumed, or 0 if the sequence is malformed.
std::size_t DecodeOne(std::string_view text, std::size_t pos, char32_t *cp) {
  const auto byte = [&](std::size_t i) {
    return static_cast<unsigned char>(text[i]);
  };
  const unsigned char lead = byte(pos);
  std::size_t len;
  char32_t value;
  char32_t min;
  if (lead < 0x80) {
    *cp = lead;
    return 1;
  } else if ((lead & 0xE0) == 0xC0) {
    len = 2, value = lead & 0x1F, min = 0x80;
  } else if ((lead & 0xF0) == 0xE0) {
    len = 3, value = lead & 0x0F, min = 0x800;
  } else if ((lead & 0xF8) == 0xF0) {
    len = 4, value = lead & 0x07, min = 0x10000;
  } else {
    return 0;
  }
  if (pos + len > text.size()) return 0;
  for (std::size_t i = 1; i < len; ++i) {
    const unsigned char c = byte(pos + i);
    if ((c & 0xC0) != 0x80) return 0;
    value = (value << 6) | (c & 0x3F);
  }
  if (value < min || value > 0x10FFFF) return 0;
  if (value >= 0xD800 && value <= 0xDFFF) return 0;
  *cp = value;
  return len;
}

}  // namespace

bool IsValid(std::string_view text) {
  std::size_t pos = 0;
  char32_t cp;
  while (pos < text.size()) {
    const std::size_t n = DecodeOne(text, pos, &cp);
    if (n == 0) return false;
    pos += n;
  }
  return true;
}

std::size_t ScalarLength(std::string_view text) {
  std::size_t count = 0;
  for (const char c : text) {
    // Count every byte that is not a continuation byte.
    if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++count;
  }
  return count;
}

std::vector<std::size_t> Boundaries(std::string_view text) {
  std::vector<std::size_t> result;
  result.reserve(text.size() + 1);
  for (std::size_t i = 0; i < text.size(); ++i) {
    if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) {
      result.push_back(i);
    }
  }
  result.push_back(text.size());
  return result;
}

std::u32string Decode(std::string_view text) {
  std::u32string out;
  std::size_t pos = 0;
  char32_t cp;
  while (pos < text.size()) {
    const std::size_t n = DecodeOne(text, pos, &cp);
    if (n == 0) {
      cp = 0xFFFD;
      pos += 1;
    } else {
      pos += n;
    }
    out.push_back(cp);
  }
  return out;
}

void Append(char32_t cp, std::string *out) {
  if (cp < 0x80) {
    out->push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out->push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out->push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out->push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

}  // namespace utf8

std::string SpanText(std::string_view text, const Span &span) {
  const std::vector<std::size_t> bounds = utf8::Boundaries(text);
  const std::size_t length = bounds.size() - 1;
  if (span.start >= span.end || span.end > length) {
    throw Error(ErrorCode::kOutOfBounds,
                "span [" + std::to_string(span.start) + ", " +
                    std::to_string(span.end) +
                    ") is not inside text of length " +
                    std::to_string(length));
  }
  return std::string(
      text.substr(bounds[span.start], bounds[span.end] - bounds[span.start]));
}

}  // namespace relanno
