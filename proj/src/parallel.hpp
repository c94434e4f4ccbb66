#pragma once

#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>

namespace ordspace::detail {

/// Runs body(i) for i in [0, n) under OpenMP. The first exception thrown by
/// any iteration is rethrown on the calling thread.
template <class F>
void parallel_for(std::size_t n, F&& body) {
  std::exception_ptr error;
  std::mutex mu;
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace ordspace::detail
