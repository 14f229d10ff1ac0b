#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <numeric>
#include <span>
#include <thread>
#include <vector>

namespace shapeavoid {

inline int default_jobs() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Visits every permutation of S_n, split into n shards by first symbol.
// Each shard owns one accumulator, so the caller can reduce them in shard
// order and get a result that does not depend on the worker count.
//
// visit(word, acc) is called with the one-line word of each permutation.
template <class Acc, class Visit>
std::vector<Acc> sharded_scan(int n, int jobs, Visit visit) {
  const int shards = std::max(n, 1);
  std::vector<Acc> acc(static_cast<std::size_t>(shards));
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    std::vector<int> word(static_cast<std::size_t>(n));
    for (int shard; (shard = next.fetch_add(1)) < shards;) {
      try {
        if (n == 0) {
          visit(std::span<const int>(word), acc[0]);
          continue;
        }
        word[0] = shard + 1;
        int v = 1;
        for (std::size_t i = 1; i < word.size(); ++i, ++v) {
          if (v == shard + 1) ++v;
          word[i] = v;
        }
        do {
          visit(std::span<const int>(word), acc[static_cast<std::size_t>(shard)]);
        } while (std::next_permutation(word.begin() + 1, word.end()));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  const int workers = std::clamp(jobs, 1, shards);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return acc;
}

}  // namespace shapeavoid
