#pragma once

#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace qtop {

// Worker-count resolution: an explicit request wins, otherwise the
// QTOP_WORKERS environment variable, otherwise 1.
inline int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("QTOP_WORKERS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

// Evaluates fn(i) for i in [0, count) across contiguous chunks and returns
// the results in index order, so exact reductions stay deterministic.
template <class T, class F>
std::vector<T> parallel_map(size_t count, int workers, F&& fn) {
  std::vector<T> out(count);
  workers = resolve_workers(workers);
  if (workers <= 1 || count <= 1) {
    for (size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  const size_t nthreads = std::min<size_t>(workers, count);
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(nthreads);
  for (size_t t = 0; t < nthreads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (size_t i = t; i < count; i += nthreads) out[i] = fn(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace qtop
