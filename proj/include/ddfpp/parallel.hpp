#pragma once

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace ddfpp {

// Splits [begin, end) into contiguous chunks, one per worker. f(lo, hi) must only write disjoint data.
// With threads <= 1 this is a plain loop, so serial runs stay deterministic and allocation-free.
// An exception from any chunk is rethrown on the calling thread (lowest chunk first).
template <class F>
void parallel_for(int begin, int end, int threads, F&& f) {
  const int n = end - begin;
  if (n <= 0) return;
  const int workers = std::clamp(threads, 1, n);
  if (workers == 1) {
    f(begin, end);
    return;
  }
  const int chunk = (n + workers - 1) / workers;
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (int w = 1; w < workers; ++w) {
    const int lo = begin + w * chunk, hi = std::min(end, lo + chunk);
    if (lo >= hi) continue;
    pool.emplace_back([&f, &errors, w, lo, hi] {
      try {
        f(lo, hi);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  try {
    f(begin, std::min(end, begin + chunk));
  } catch (...) {
    errors[0] = std::current_exception();
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace ddfpp
