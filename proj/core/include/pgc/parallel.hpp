#pragma once

// Deterministic index partitioning: worker w of W visits w, w + W, w + 2W, ...

#include <cstdint>
#include <thread>
#include <vector>

namespace pgc {

template <typename MakeWorker>
auto run_partitioned(std::uint64_t n, unsigned workers, MakeWorker make) {
  using Worker = decltype(make());
  if (workers == 0) workers = 1;
  if (n < workers) workers = n == 0 ? 1 : static_cast<unsigned>(n);
  std::vector<Worker> states;
  states.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) states.push_back(make());
  auto body = [&](unsigned w) {
    for (std::uint64_t i = w; i < n; i += workers) states[w](i);
  };
  if (workers == 1) {
    body(0);
    return states;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body, w);
  for (auto& t : pool) t.join();
  return states;
}

}  // namespace pgc
