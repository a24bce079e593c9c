// Seeded randomized suites (--seed=N); 16000 cases in total.
#include "support/properties.hpp"
#include "support/seed.hpp"

#include <doctest.h>

using namespace diagwin;

namespace {

constexpr std::size_t kCases = 3000;

void check(const property::Result& r, std::size_t cases) {
  INFO(r.failure.value_or(""));
  CHECK(r.ok());
  CHECK(r.cases == cases);
}

} // namespace

TEST_CASE("colon defining property") {
  check(property::colon_defining(test::seed(), kCases), kCases);
}

TEST_CASE("colon distributes over sums") {
  check(property::colon_distributes(test::seed(), kCases), kCases);
}

TEST_CASE("minimalize is idempotent and canonical") {
  check(property::minimalize_canonical(test::seed(), kCases), kCases);
}

TEST_CASE("product is commutative and associative") {
  check(property::product_laws(test::seed(), 1000), 1000);
}

TEST_CASE("diagonal order laws") {
  check(property::order_laws(test::seed(), kCases), kCases);
}

TEST_CASE("redistribution invariants") {
  check(property::redistribute_invariants(test::seed(), kCases), kCases);
}
