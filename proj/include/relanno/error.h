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

#ifndef RELANNO_ERROR_H_
#define RELANNO_ERROR_H_

#include <stdexcept>
#include <string>

namespace relanno {

// Failure categories raised by the engine. The numeric values are mirrored by
// the C API status codes, so they must stay stable.
enum class ErrorCode {
  kEmptyInput = 1,
  kInvalidText = 2,
  kOutOfBounds = 3,
  kUnknownSentence = 4,
  kUnknownEntity = 5,
  kUnknownLabel = 6,
  kDuplicateSpan = 7,
  kSelfPair = 8,
  kInvalidSession = 9,
  kParseError = 10,
  kSchemaError = 11,
  kSpanMismatch = 12,
  kMalformedLog = 13,
};

const char *ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace relanno

#endif  // RELANNO_ERROR_H_
