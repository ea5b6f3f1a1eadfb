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

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace farhash {

/**
 * Worker count used when a caller passes `threads == 0`: the hardware
 * concurrency, capped by the FARHASH_THREADS environment variable when set.
 */
inline unsigned default_thread_count()
{
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("FARHASH_THREADS"); env != nullptr && *env != '\0') {
    try {
      const long cap = std::stol(env);
      if (cap >= 1) { n = std::min<unsigned>(n, static_cast<unsigned>(cap)); }
    } catch (const std::exception&) {
      // ignore malformed values
    }
  }
  return n;
}

namespace detail {

/** Runs fn(i) for i in [0, count) on up to `threads` workers (0 = default). */
template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn)
{
  if (threads == 0) { threads = default_thread_count(); }
  const std::size_t workers = std::min<std::size_t>(threads, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) { fn(i); }
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(count, begin + chunk);
    pool.emplace_back([&, begin, end] {
      try {
        for (std::size_t i = begin; i < end; ++i) { fn(i); }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) { failure = std::current_exception(); }
      }
    });
  }
  for (auto& t : pool) { t.join(); }
  if (failure) { std::rethrow_exception(failure); }
}

}  // namespace detail
}  // namespace farhash
