/*
 * Copyright (c) 2026, The farhash Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace farhash {

/** Base class of every error raised by the library. */
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** Invalid argument or violated precondition (bad parameters, dimension mismatch). */
class invalid_argument : public error {
 public:
  using error::error;
};

/** Malformed CSV or index file. `line()` is 1-based, 0 when unknown. */
class parse_error : public error {
 public:
  parse_error(const std::string& what, std::size_t line = 0)
    : error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line)
  {
  }

  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace farhash
