// Copyright 2026 The litscan Authors
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

#ifndef LITSCAN_ERRORS_HPP_
#define LITSCAN_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace litscan {

// Exit codes used by the CLI. Library errors carry the class they map to.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInput = 2,
  kExitLexicon = 3,
  kExitAdapter = 4,
};

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  virtual int exit_code() const { return kExitUsage; }
};

// Bad flags, bad config file, invalid parameter values.
class UsageError : public Error {
 public:
  using Error::Error;
  int exit_code() const override { return kExitUsage; }
};

// Unreadable/undecodable corpus input, unwritable outputs, malformed
// summary JSON handed back to `chart`.
class InputError : public Error {
 public:
  using Error::Error;
  int exit_code() const override { return kExitInput; }
};

// Malformed or inconsistent lexicon and gazetteer files.
class LexiconError : public Error {
 public:
  using Error::Error;
  int exit_code() const override { return kExitLexicon; }
};

// External emotion classifier failures: spawn, timeout, protocol.
class AdapterError : public Error {
 public:
  using Error::Error;
  int exit_code() const override { return kExitAdapter; }
};

}  // namespace litscan

#endif  // LITSCAN_ERRORS_HPP_
