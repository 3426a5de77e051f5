/*
 * Copyright 2026 The pmuspill-sim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PMUSPILL_ERRORS_H_
#define PMUSPILL_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pmuspill {

// Root of every error thrown by the library. Outcomes that are part of normal
// operation (an inconclusive decode, a failed leak) are values, not errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Assembler rejected a line. line() is 1-based.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class MappingConflict : public Error {
 public:
  using Error::Error;
};

class InvalidInstrClass : public Error {
 public:
  using Error::Error;
};

class InvalidSlot : public Error {
 public:
  using Error::Error;
};

class UnknownEvent : public Error {
 public:
  using Error::Error;
};

// Programming an event that a mitigation policy has switched off.
class EventDisabled : public Error {
 public:
  using Error::Error;
};

class PmuDisabled : public Error {
 public:
  using Error::Error;
};

class NoPrivilege : public Error {
 public:
  using Error::Error;
};

class IllegalSquash : public Error {
 public:
  using Error::Error;
};

class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

class InvalidSpec : public Error {
 public:
  using Error::Error;
};

// Malformed input file. line() is 0 when the position is unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0,
             std::size_t offset = 0)
      : Error(what), line_(line), offset_(offset) {}
  std::size_t line() const { return line_; }
  std::size_t offset() const { return offset_; }

 private:
  std::size_t line_;
  std::size_t offset_;
};

class DuplicateEvent : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

// Raised when an internal consistency check fails; the CLI maps it to exit 2.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace pmuspill

#endif  // PMUSPILL_ERRORS_H_
