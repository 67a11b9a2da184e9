#pragma once

#include <omp.h>

#include <cstdint>
#include <vector>

namespace critgraph {

// Serial execution is the reference path; parallel must reproduce it
// exactly because every trial owns the stream indexed by its trial number.
enum class Execution { serial, parallel };

inline void set_worker_threads(int threads) {
  if (threads > 0) omp_set_num_threads(threads);
}

inline int worker_threads() { return omp_get_max_threads(); }

template <class Fn>
void for_each_trial(std::uint64_t trials, Execution exec, Fn&& fn) {
  const auto count = static_cast<std::int64_t>(trials);
  if (exec == Execution::serial) {
    for (std::int64_t i = 0; i < count; ++i) fn(static_cast<std::uint64_t>(i));
    return;
  }
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < count; ++i) fn(static_cast<std::uint64_t>(i));
}

// Number of trials i in [0, trials) for which pred(i) holds.
template <class Pred>
std::uint64_t count_trials(std::uint64_t trials, Execution exec, Pred&& pred) {
  const auto count = static_cast<std::int64_t>(trials);
  std::uint64_t hits = 0;
  if (exec == Execution::serial) {
    for (std::int64_t i = 0; i < count; ++i) hits += pred(static_cast<std::uint64_t>(i)) ? 1 : 0;
    return hits;
  }
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : hits)
  for (std::int64_t i = 0; i < count; ++i) hits += pred(static_cast<std::uint64_t>(i)) ? 1 : 0;
  return hits;
}

// results[i] = fn(first + i); output order is trial order.
template <class T, class Fn>
std::vector<T> map_trials(std::uint64_t first, std::uint64_t trials, Execution exec, Fn&& fn) {
  std::vector<T> out(trials);
  for_each_trial(trials, exec, [&](std::uint64_t i) { out[i] = fn(first + i); });
  return out;
}

}  // namespace critgraph
