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

// Triplet JSON export/import and brat standoff export.
//
// The JSON document is a top-level array with one record per sentence, in
// sentence order:
//
//   [
//     {
//       "SentText": "...",
//       "EntityMentions": [ {"Text": "...", "Start": 0, "End": 6}, ... ],
//       "RelationMentions": [
//         {"Arg1Text": "...", "Arg1Start": 0, "Arg2Text": "...",
//          "Arg2Start": 9, "RelationNames": ["..."]}, ...
//       ]
//     }, ...
//   ]
//
// Offsets are Unicode scalar values. EntityMentions are sorted by
// (Start, End); RelationMentions by (Arg1Start, Arg2Start, Arg1Text,
// Arg2Text). Output is indented by two spaces, has no trailing newline, and
// depends only on session content, never on the event log.

#ifndef RELANNO_SERIALIZATION_H_
#define RELANNO_SERIALIZATION_H_

#include <string>
#include <string_view>

#include "relanno/session.h"

namespace relanno {

// Throws Error(kInvalidSession) listing the validator errors if the session
// does not validate.
std::string ExportJson(const AnnotationSession &session);

// Rebuilds a session from ExportJson output. Entity offsets may be omitted,
// in which case each text binds to its first occurrence in SentText; a
// relation argument without Arg*Start binds to the first entity of the
// record with that text. A relation argument that matches no entity is kept
// as a dangling reference for ValidateSession to report.
//
// Throws kParseError on malformed JSON, kSchemaError (with the field path)
// on a missing or mistyped field, kSpanMismatch (with the record index) when
// an entity text does not match its slice of SentText.
AnnotationSession ImportJson(std::string_view json,
                             Clock clock = SteadyClock());

struct BratDocument {
  std::string text;         // sentences joined by '\n'
  std::string annotations;  // T and R lines, each terminated by '\n'
};

// Entity lines "T<k>\tEntity <start> <end>\t<text>" and relation lines
// "R<k>\t<label> Arg1:T<i> Arg2:T<j>", one per (pair, label). Offsets are
// scalar-value offsets into BratDocument::text.
BratDocument ExportBrat(const AnnotationSession &session);

// Replaces every scalar value outside [A-Za-z0-9_] with '_'.
std::string SanitizeBratLabel(std::string_view label);

}  // namespace relanno

#endif  // RELANNO_SERIALIZATION_H_
