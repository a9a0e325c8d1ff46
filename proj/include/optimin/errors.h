// Copyright 2026 The Optimin Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef OPTIMIN_ERRORS_H_
#define OPTIMIN_ERRORS_H_

#include <stdexcept>
#include <string>

namespace optimin {

// Invalid game, profile, index or generator configuration.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed input text. `path` locates the offending field, e.g.
// "$.payoffs[3][1]"; it is empty for errors that are not tied to a field.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& message, std::string path = "")
      : std::runtime_error(path.empty() ? message : path + ": " + message),
        path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// Operation not defined for this game shape (e.g. mixed analysis on a
// 3-player game).
class UnsupportedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace optimin

#endif  // OPTIMIN_ERRORS_H_
