#include <doctest.h>

#include <atomic>
#include <stdexcept>

#include "immunity/verify.hpp"

using namespace imm;

namespace {

VerifyOptions smoke() {
  VerifyOptions o;
  o.max_n = 4;
  o.jobs = 2;
  return o;
}

}  // namespace

TEST_CASE("parallel_for visits every index once and keeps errors per index") {
  std::vector<std::atomic<int>> hits(100);
  const auto errors = parallel_for(100, 4, [&](std::size_t i) {
    hits[i].fetch_add(1);
    if (i % 10 == 3) throw std::runtime_error("cell " + std::to_string(i));
  });
  REQUIRE(errors.size() == 100);
  for (std::size_t i = 0; i < 100; ++i) {
    CHECK(hits[i].load() == 1);
    CHECK(errors[i] == (i % 10 == 3 ? "cell " + std::to_string(i) : ""));
  }
  CHECK(parallel_for(0, 3, [](std::size_t) {}).empty());
}

TEST_CASE("smoke run of the suites") {
  const auto results = verify_all(smoke());
  REQUIRE(results.size() == 10);
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    CAPTURE(r.name);
    CAPTURE(r.failure);
    CHECK(r.id == static_cast<int>(i) + 1);
    CHECK(r.cells > 0);
    if (!r.observation) CHECK(r.passed);
  }
  CHECK(results[2].observation);
}

TEST_CASE("fault injection is caught") {
  auto o = smoke();
  o.inject_fault = true;
  const auto r = suite_not_mod_exact(o);
  CHECK_FALSE(r.passed);
  CHECK_FALSE(r.failure.empty());
}

TEST_CASE("results do not depend on the worker count") {
  auto o = smoke();
  o.jobs = 1;
  const auto a = verify_all(o);
  o.jobs = 5;
  const auto b = verify_all(o);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].passed == b[i].passed);
    CHECK(a[i].cells == b[i].cells);
    CHECK(a[i].failure == b[i].failure);
    CHECK(a[i].details == b[i].details);
  }
}
