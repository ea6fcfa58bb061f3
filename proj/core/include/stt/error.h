// core/include/stt/error.h

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef STT_ERROR_H_
#define STT_ERROR_H_

#include <stdexcept>
#include <string>

namespace stt {

// Bad user input: malformed arguments, constraint violations, empty corpora.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string &msg) : std::runtime_error(msg) {}
};

// Filesystem / stream failures.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string &msg) : std::runtime_error(msg) {}
};

// Malformed file content; carries a 1-based line number when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string &msg, int line)
      : std::runtime_error(line > 0 ? msg + " (line " + std::to_string(line) + ")"
                                    : msg),
        line_(line) {}
  explicit ParseError(const std::string &msg) : ParseError(msg, 0) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace stt

#endif  // STT_ERROR_H_
