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

#include "relanno/demo.h"

#include <map>
#include <string>

#include "relanno/error.h"

namespace relanno::demo {
namespace {

constexpr std::string_view kLabels =
    "/business/company/founders\n"
    "/people/person/place_of_birth\n"
    "/business/person/company\n"
    "positive\n"
    "negative\n"
    "neutral\n"
    "Cause-Effect\n";

// Annotates the first occurrence of `surface` in the sentence. The demo
// sentences are ASCII, so byte and scalar offsets agree.
EntityId Mark(AnnotationSession &session, SentenceId sentence_id,
              std::string_view surface) {
  const std::string &text = session.sentences().at(sentence_id).text;
  const std::size_t pos = text.find(surface);
  if (pos == std::string::npos) {
    throw Error(ErrorCode::kOutOfBounds,
                "demo entity '" + std::string(surface) + "' not found");
  }
  return session.AddEntity(sentence_id, Span{pos, pos + surface.size()});
}

}  // namespace

AnnotationSession BuildDemoSession(Clock clock) {
  AnnotationSession session(std::move(clock));
  session.IngestSentences(std::string(kFoundersSentence) + "\n" +
                          std::string(kReviewSentence) + "\n" +
                          std::string(kCausalitySentence));
  session.IngestLabels(kLabels);

  constexpr SentenceId kFounders = 0;
  std::map<std::string_view, EntityId> e;
  for (const std::string_view name :
       {"Google", "Sergey Brin", "Larry Page", "Skype", "Janus Friis", "Apple",
        "Steve Wozniak", "Yahoo", "Jerry Yang", "YouTube", "Chad Hurley",
        "Tom Anderson", "MySpace"}) {
    e[name] = Mark(session, kFounders, name);
  }
  session.SetRelation(kFounders, e["Sergey Brin"], e["Google"],
                      "/business/person/company", true);
  session.SetRelation(kFounders, e["Jerry Yang"], e["Yahoo"],
                      "/business/person/company", true);
  session.SetRelation(kFounders, e["Google"], e["Sergey Brin"],
                      "/business/company/founders", true);

  constexpr SentenceId kReview = 1;
  const EntityId appetizers = Mark(session, kReview, "Appetizers");
  const EntityId excellent = Mark(session, kReview, "excellent");
  const EntityId meal = Mark(session, kReview, "meal");
  const EntityId great = Mark(session, kReview, "great");
  const EntityId expensive = Mark(session, kReview, "slightly expensive");
  session.SetRelation(kReview, appetizers, excellent, "positive", true);
  session.SetRelation(kReview, meal, great, "positive", true);
  session.SetRelation(kReview, meal, expensive, "negative", true);

  constexpr SentenceId kCausality = 2;
  const EntityId warmth = Mark(session, kCausality, "The warmth");
  const EntityId fireplace = Mark(session, kCausality, "the fireplace");
  session.SetRelation(kCausality, fireplace, warmth, "Cause-Effect", true);

  return session;
}

}  // namespace relanno::demo
