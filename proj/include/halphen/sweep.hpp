#ifndef HALPHEN_SWEEP_HPP
#define HALPHEN_SWEEP_HPP

// Map a pure function over sample indices. The serial version is the
// reference; the OpenMP version must produce the same vector.

#include <cstddef>
#include <type_traits>
#include <vector>

namespace halphen {

template <class F>
auto serial_sweep(std::size_t n, F&& f) {
  using R = std::invoke_result_t<F&, std::size_t>;
  std::vector<R> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(f(i));
  }
  return out;
}

template <class F>
auto parallel_sweep(std::size_t n, F&& f) {
  using R = std::invoke_result_t<F&, std::size_t>;
  std::vector<R> out(n);
  const auto count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
  }
  return out;
}

}  // namespace halphen

#endif  // HALPHEN_SWEEP_HPP
