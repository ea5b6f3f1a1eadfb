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

// Shared text helpers for the CSV and index file formats.

#include <charconv>
#include <cstdint>
#include <span>
#include <cmath>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

namespace farhash::detail {

inline void write_real(std::ostream& out, double v)
{
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  out.write(buf, res.ptr - buf);
}

inline std::string_view trim(std::string_view s)
{
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) { s.remove_prefix(1); }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

// Finite reals only.
inline std::optional<double> parse_real(std::string_view s)
{
  s = trim(s);
  if (!s.empty() && s.front() == '+') { s.remove_prefix(1); }
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty() || !std::isfinite(v)) {
    return std::nullopt;
  }
  return v;
}

template <typename Int>
std::optional<Int> parse_int(std::string_view s)
{
  s = trim(s);
  Int v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) { return std::nullopt; }
  return v;
}

inline std::vector<std::string_view> split(std::string_view s, char sep)
{
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

// Whitespace-separated tokens.
inline std::vector<std::string_view> tokens(std::string_view s)
{
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) { ++i; }
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') { ++j; }
    if (j > i) { out.push_back(s.substr(i, j - i)); }
    i = j;
  }
  return out;
}

}  // namespace farhash::detail

#include <istream>

#include "farhash/error.hpp"

namespace farhash::detail {

// Line-oriented reader for the index formats; errors carry the line number.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  std::string next(const char* what)
  {
    std::string line;
    if (!std::getline(in_, line)) { throw parse_error(std::string("unexpected end of file, expected ") + what, line_ + 1); }
    ++line_;
    if (!line.empty() && line.back() == '\r') { line.pop_back(); }
    return line;
  }

  std::vector<double> reals(const char* what, std::size_t expected)
  {
    auto line = next(what);
    auto toks = tokens(line);
    if (toks.size() != expected) {
      fail(std::string(what) + ": expected " + std::to_string(expected) + " values, found " +
           std::to_string(toks.size()));
    }
    std::vector<double> out;
    out.reserve(toks.size());
    for (auto t : toks) {
      auto v = parse_real(t);
      if (!v) { fail(std::string(what) + ": bad number '" + std::string(t) + "'"); }
      out.push_back(*v);
    }
    return out;
  }

  std::vector<std::uint64_t> counts(const char* what, std::size_t expected)
  {
    auto line = next(what);
    auto toks = tokens(line);
    if (toks.size() != expected) {
      fail(std::string(what) + ": expected " + std::to_string(expected) + " integers, found " +
           std::to_string(toks.size()));
    }
    std::vector<std::uint64_t> out;
    for (auto t : toks) {
      auto v = parse_int<std::uint64_t>(t);
      if (!v) { fail(std::string(what) + ": bad integer '" + std::string(t) + "'"); }
      out.push_back(*v);
    }
    return out;
  }

  void expect_magic(std::string_view magic)
  {
    auto line = next("magic");
    if (trim(line) != magic) {
      fail("unrecognized header '" + std::string(trim(line)) + "', expected '" + std::string(magic) + "'");
    }
  }

  [[noreturn]] void fail(const std::string& what) const { throw parse_error(what, line_); }
  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

inline void write_reals(std::ostream& out, std::span<const double> v)
{
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) { out.put(' '); }
    write_real(out, v[i]);
  }
  out.put('\n');
}

}  // namespace farhash::detail
