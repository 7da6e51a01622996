// Copyright 2026 The Forge Authors
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

#ifndef FORGE_ERROR_H_
#define FORGE_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace forge {

// Base class for all errors raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad or inconsistent configuration (unknown profile, invalid threshold,
// malformed table file, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Input that cannot be decoded. Carries the offending offset (bytes for
// UTF-8 input, codepoints for decoded text).
class DecodeError : public Error {
 public:
  DecodeError(const std::string &what, size_t offset)
      : Error(what + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  size_t offset() const { return offset_; }

 private:
  size_t offset_;
};

// A corpus that cannot support the requested estimation (e.g. no tokens).
class DegenerateCorpusError : public Error {
 public:
  using Error::Error;
};

// Precondition on sizes or list lengths violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace forge

#endif  // FORGE_ERROR_H_
