#pragma once

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

#include "designlab/common.hpp"

namespace designlab {

/// Splits [begin, end) into contiguous chunks, one per worker, and runs
/// body(chunk_begin, chunk_end) for each. Returns the per-chunk results in
/// chunk order so callers can merge deterministically.
template <class Result, class Body>
std::vector<Result> parallel_chunks(long begin, long end, Body&& body) {
  const long total = std::max(0L, end - begin);
  const long workers = std::max(1L, std::min<long>(worker_count(), total));
  std::vector<Result> results(static_cast<size_t>(workers));
  if (workers == 1) {
    results[0] = body(begin, end);
    return results;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(static_cast<size_t>(workers));
  const long step = (total + workers - 1) / workers;
  for (long w = 0; w < workers; ++w) {
    long lo = begin + w * step;
    long hi = std::min(end, lo + step);
    threads.emplace_back([&, w, lo, hi] {
      try {
        results[static_cast<size_t>(w)] = body(lo, hi);
      } catch (...) {
        errors[static_cast<size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

}  // namespace designlab
