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

#ifndef RELANNO_DEMO_H_
#define RELANNO_DEMO_H_

#include <string_view>

#include "relanno/session.h"

namespace relanno::demo {

// Sample sentences shipped with the tool.
inline constexpr std::string_view kFoundersSentence =
    "Within a year of that age were Google 's Sergey Brin and Larry Page , "
    "Apple 's Steve Wozniak , Yahoo 's Jerry Yang , Skype 's Janus Friis , "
    "Chad Hurley from YouTube , and Tom Anderson from MySpace .";
inline constexpr std::string_view kReviewSentence =
    "Appetizers are excellent ; you can make a great ( but slightly "
    "expensive ) meal out of them .";
inline constexpr std::string_view kCausalitySentence =
    "The warmth was radiating from the fireplace to all corners of the room.";

// A ready-made session covering three annotation styles: person/company
// relations over the founders sentence, aspect-opinion sentiment over the
// review sentence and a cause-effect pair over the causality sentence.
// Built through the regular session operations.
AnnotationSession BuildDemoSession(Clock clock = SteadyClock());

}  // namespace relanno::demo

#endif  // RELANNO_DEMO_H_
