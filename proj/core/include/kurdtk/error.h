// Copyright 2026 The kurdtk Authors.
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

#ifndef KURDTK_ERROR_H_
#define KURDTK_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kurdtk {

// Base class for every error the library throws. The CLI maps these to
// exit status 2 (data error); std::invalid_argument from option parsing
// maps to exit status 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A string that should name a language, script or label does not.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A precondition on an argument was violated (bad ratio, k == 0, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  IoError(const std::string& what, std::size_t record_index)
      : Error(what + " (record " + std::to_string(record_index) + ")"),
        record_index_(record_index) {}
  explicit IoError(const std::string& what)
      : Error(what), record_index_(static_cast<std::size_t>(-1)) {}

  std::size_t record_index() const { return record_index_; }

 private:
  std::size_t record_index_;
};

// One line of a line-record file could not be decoded or validated.
// Line numbers are 1-based.
class MalformedRecord : public Error {
 public:
  MalformedRecord(std::size_t line, const std::string& reason)
      : Error("malformed record at line " + std::to_string(line) + ": " +
              reason),
        line_(line),
        reason_(reason) {}

  std::size_t line() const { return line_; }
  const std::string& reason() const { return reason_; }

 private:
  std::size_t line_;
  std::string reason_;
};

class InvalidDocument : public Error {
 public:
  using Error::Error;
};

class EmptyExtraction : public Error {
 public:
  using Error::Error;
};

class InsufficientData : public Error {
 public:
  InsufficientData(const std::string& label, std::size_t have,
                   std::size_t need)
      : Error("insufficient data for label " + label + ": have " +
              std::to_string(have) + ", need " + std::to_string(need)),
        label_(label) {}

  const std::string& label() const { return label_; }

 private:
  std::string label_;
};

class InvalidTable : public Error {
 public:
  using Error::Error;
};

class EmptyCorpus : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

class RangeTooSmall : public Error {
 public:
  using Error::Error;
};

class DegenerateLabels : public Error {
 public:
  using Error::Error;
};

class NonFiniteLoss : public Error {
 public:
  explicit NonFiniteLoss(std::size_t step)
      : Error("training loss became non-finite at step " +
              std::to_string(step)),
        step_(step) {}

  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

class SchemeMismatch : public Error {
 public:
  using Error::Error;
};

class MissingScript : public Error {
 public:
  using Error::Error;
};

class UnparseableLabel : public Error {
 public:
  UnparseableLabel(std::size_t row, const std::string& text)
      : Error("unparseable label '" + text + "' at row " +
              std::to_string(row)),
        row_(row) {}

  std::size_t row() const { return row_; }

 private:
  std::size_t row_;
};

class InvalidModel : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace kurdtk

#endif  // KURDTK_ERROR_H_
