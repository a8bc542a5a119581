#pragma once

#include <cstddef>
#include <vector>

namespace gre::par {

// Global switch for the OpenMP kernels. The serial path is the reference
// implementation; parallel runs must produce byte-identical results.
bool enabled();
void set_enabled(bool on);

int max_threads();

// Evaluates f(i) for i in [0, n). Order of side effects is unspecified, so f
// must write only to its own slot.
template <typename F>
void parallel_for(std::size_t n, F&& f) {
  if (!enabled() || n < 2) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < static_cast<long long>(n); ++i)
    f(static_cast<std::size_t>(i));
}

// Keep-filter with deterministic output order: predicates run in parallel,
// the surviving items are collected serially in input order.
template <typename T, typename Pred>
std::vector<T> parallel_filter(const std::vector<T>& items, Pred&& pred) {
  std::vector<char> keep(items.size(), 0);
  parallel_for(items.size(), [&](std::size_t i) { keep[i] = pred(items[i]) ? 1 : 0; });
  std::vector<T> out;
  for (std::size_t i = 0; i < items.size(); ++i)
    if (keep[i]) out.push_back(items[i]);
  return out;
}

// Maps f over the index range in parallel, collecting results in input order.
template <typename R, typename F>
std::vector<R> parallel_map(std::size_t n, F&& f) {
  std::vector<R> out(n);
  parallel_for(n, [&](std::size_t i) { out[i] = f(i); });
  return out;
}

}  // namespace gre::par
