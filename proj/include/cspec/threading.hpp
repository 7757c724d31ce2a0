#ifndef CSPEC_THREADING_HPP
#define CSPEC_THREADING_HPP

#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace cspec {

/// Parallelism cap: COMPLEX_SPECTRA_THREADS when set, else the hardware
/// concurrency (at least 1).
inline int thread_cap() {
  if (const char* env = std::getenv("COMPLEX_SPECTRA_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs fn(0..n-1) on up to thread_cap() threads.  Tasks must write only
/// to their own output slots; the first task exception is rethrown.
template <class Fn>
void parallel_for(int n, Fn&& fn) {
  const int threads = std::min(thread_cap(), n);
  if (threads <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(static_cast<size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t]() {
      try {
        for (int i = t; i < n; i += threads) fn(i);
      } catch (...) {
        errors[static_cast<size_t>(t)] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace cspec

#endif
