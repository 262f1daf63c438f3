#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace monometric::detail {

/// Runs body(i) for i in [0, count) across hardware threads. Bodies must
/// write only to their own slot; the exception from the lowest failing index
/// is rethrown so failures are reproducible.
template <class Body>
void parallel_for(std::size_t count, Body&& body) {
  const std::size_t workers =
      std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::exception_ptr> errors(count);
  auto run = [&](std::atomic<std::size_t>& next) {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        body(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::atomic<std::size_t> next{0};
  if (workers <= 1) {
    run(next);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back([&] { run(next); });
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace monometric::detail
