// Copyright 2026 The DIASEXP Authors.
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

#ifndef DIASEXP_ERROR_H_
#define DIASEXP_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace diasexp {

// Base class of every error raised by the library. The CLI maps these to
// exit code 2 (data/format error).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptyInput : public Error {
 public:
  EmptyInput() : Error("empty input") {}
};

class EmptySentence : public Error {
 public:
  EmptySentence() : Error("empty sentence") {}
};

class NoPredicate : public Error {
 public:
  explicit NoPredicate(const std::string &sentence)
      : Error("no predicate found in \"" + sentence + "\"") {}
};

class UnknownWhWord : public Error {
 public:
  explicit UnknownWhWord(const std::string &word)
      : Error("unknown interrogative word \"" + word + "\"") {}
};

// Lexicon file or entry problem. line is 0 when not tied to a file line.
class ParseError : public Error {
 public:
  ParseError(std::string file, int line, const std::string &reason)
      : Error(Format(file, line, reason)),
        file_(std::move(file)),
        line_(line),
        reason_(reason) {}

  const std::string &file() const { return file_; }
  int line() const { return line_; }
  const std::string &reason() const { return reason_; }

 private:
  static std::string Format(const std::string &file, int line,
                            const std::string &reason) {
    if (file.empty()) return "parse error: " + reason;
    return file + ":" + std::to_string(line) + ": " + reason;
  }

  std::string file_;
  int line_;
  std::string reason_;
};

class UnknownTable : public Error {
 public:
  explicit UnknownTable(std::string name)
      : Error("unknown lexicon table \"" + name + "\""),
        name_(std::move(name)) {}
  const std::string &name() const { return name_; }

 private:
  std::string name_;
};

class UnknownClarification : public Error {
 public:
  explicit UnknownClarification(const std::string &id)
      : Error("no pending clarification with id \"" + id + "\"") {}
};

class InvalidChoice : public Error {
 public:
  explicit InvalidChoice(const std::string &what)
      : Error("invalid clarification choice: " + what) {}
};

// I/O or malformed story data. offset is the byte offset of the bad line.
class StorageError : public Error {
 public:
  StorageError(const std::string &what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  explicit StorageError(const std::string &what)
      : Error(what), offset_(0) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class FormatVersionError : public Error {
 public:
  using Error::Error;
};

class UnsupportedGrammar : public Error {
 public:
  using Error::Error;
};

class UnknownWord : public Error {
 public:
  explicit UnknownWord(std::string word)
      : Error("unknown word \"" + word + "\""), word_(std::move(word)) {}
  const std::string &word() const { return word_; }

 private:
  std::string word_;
};

}  // namespace diasexp

#endif  // DIASEXP_ERROR_H_
