#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace tenspec::parallel {

// Global worker count for the deterministic helpers below. 1 = sequential.
void set_threads(unsigned n);
unsigned threads();

// Runs fn(0..n-1), partitioned across workers. Results must be written to
// index-owned slots; the partition never affects the output, only wall time.
void for_index(size_t n, const std::function<void(size_t)>& fn);

// Evaluates fn(0..n-1) and returns the results in index order.
template <class T>
std::vector<T> map(size_t n, const std::function<T(size_t)>& fn) {
  std::vector<std::optional<T>> slots(n);
  for_index(n, [&](size_t i) { slots[i].emplace(fn(i)); });
  std::vector<T> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace tenspec::parallel
