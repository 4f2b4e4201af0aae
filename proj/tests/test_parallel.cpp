#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <atomic>
#include <stdexcept>
#include <vector>

#include "casimir/parallel.hpp"

using namespace casimir;

TEST_CASE("every index is visited exactly once") {
  const int n = 257;
  std::vector<std::atomic<int>> hits(n);
  parallel_for(n, [&](int i) { hits[i].fetch_add(1); });
  for (int i = 0; i < n; ++i) CHECK(hits[i].load() == 1);
}

TEST_CASE("degenerate sizes are fine") {
  parallel_for(0, [&](int) { CHECK(false); });
  int count = 0;
  parallel_for(1, [&](int i) { count += i + 1; });
  CHECK(count == 1);
}

TEST_CASE("worker exceptions propagate to the caller") {
  auto boom = [](int i) {
    if (i == 3) throw std::runtime_error("index three failed");
  };
  CHECK_THROWS_WITH_AS(parallel_for(16, boom), "index three failed",
                       std::runtime_error);
}

TEST_CASE("thread budget is at least one") {
  CHECK(thread_budget() >= 1);
  CHECK(thread_budget() <= 256);
}
