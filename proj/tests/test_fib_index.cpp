#include <set>

#include "catch_amalgamated.hpp"

#include "support/golden.hpp"
#include "toggle_group/fib_index.hpp"

using namespace toggle_group;

TEST_CASE("Fibonacci numbers", "[fib]")
{
  CHECK(fib(0) == 0);
  CHECK(fib(1) == 1);
  CHECK(fib(2) == 1);
  CHECK(fib(10) == 55);
  CHECK(fib(14) == 377);
  CHECK(fib(64) == 10610209857723ULL);
  CHECK_THROWS_AS(fib(65), RangeError);
  CHECK(FibTable(93)(93) == 12200160415121876738ULL);
  CHECK_THROWS_AS(FibTable(94), RangeError);
  CHECK(max_path_length() == 62);
}

TEST_CASE("index tables for small paths", "[fib][golden]")
{
  for (std::size_t n = 1; n <= 4; ++n) {
    INFO("n = " << n);
    CHECK(golden::index_table(n) ==
          golden::read("figure1_n" + std::to_string(n) + ".txt"));
  }
}

TEST_CASE("iota on literal sets", "[fib]")
{
  CHECK(iota(1, VertexSet::of(1, {})) == 1);
  CHECK(iota(1, VertexSet::of(1, {1})) == 2);
  CHECK(iota(2, VertexSet::of(2, {2})) == 3);
  CHECK(iota(4, VertexSet::of(4, {2, 4})) == 8);
  CHECK(iota(5, VertexSet::of(5, {1, 3, 5})) == 13);
  CHECK(iota(5, VertexSet::of(5, {5})) == 9);
  CHECK(format_set(iota_inverse(5, 11)) == "{2,5}");
  CHECK(format_set(iota_inverse(5, 12)) == "{3,5}");
  CHECK(format_set(iota_inverse(6, 21)) == "{2,4,6}");
}

TEST_CASE("iota rejects bad input", "[fib]")
{
  CHECK_THROWS_AS(iota(0, VertexSet(0)), RangeError);
  CHECK_THROWS_AS(iota(3, VertexSet(4)), RangeError);
  CHECK_THROWS_AS(iota(3, VertexSet::of(3, {1, 2})), IndependenceError);
  CHECK_THROWS_AS(iota_inverse(3, 0), RangeError);
  CHECK_THROWS_AS(iota_inverse(3, 6), RangeError);
  CHECK_THROWS_AS(iota(63, VertexSet(63)), RangeError);
}

TEST_CASE("iota is a bijection onto 1..f_{n+2}", "[fib][property]")
{
  for (std::size_t n = 1; n <= 16; ++n) {
    auto const listed = enumerate_independent_sets(PathGraph{n});
    REQUIRE(listed.size() == fib(n + 2));
    std::set<std::uint64_t> seen;
    for (std::size_t j = 0; j < listed.size(); ++j) {
      CHECK(iota(n, listed[j]) == j + 1);
      CHECK(iota_inverse(n, j + 1) == listed[j]);
      seen.insert(listed[j].mask());
    }
    CHECK(seen.size() == listed.size());
    // The same sets as the generic graph enumeration, in another order.
    std::set<std::uint64_t> generic;
    for (auto const &I : enumerate_independent_sets(path_graph(n)))
      generic.insert(I.mask());
    CHECK(generic == seen);
  }
}

TEST_CASE("iota at the top of the supported range", "[fib]")
{
  std::size_t const n = 62;
  std::uint64_t alternating = 0;
  for (std::size_t v = 2; v <= n; v += 2)
    alternating |= std::uint64_t{1} << (v - 1);
  CHECK(iota(n, VertexSet(n, alternating)) == fib(n + 2));
  CHECK(iota_inverse(n, fib(n + 2)) == VertexSet(n, alternating));
  CHECK(iota(n, VertexSet(n)) == 1);
}

TEST_CASE("removal map and shift identity", "[fib]")
{
  CHECK(format_set(phi(5, VertexSet::of(5, {2, 5}))) == "{2}");
  CHECK(phi(5, VertexSet::of(5, {2, 5})).ambient_size() == 3);
  CHECK_THROWS_AS(phi(5, VertexSet::of(5, {2})), RangeError);
  CHECK_THROWS_AS(phi(1, VertexSet::of(1, {1})), RangeError);
  for (std::size_t n = 3; n <= 20; ++n)
    CHECK(index_shift_identity_check(n));
  CHECK_THROWS_AS(index_shift_identity_check(2), RangeError);
}

TEST_CASE("enumeration bound", "[fib]")
{
  CHECK_THROWS_AS(enumerate_independent_sets(PathGraph{20}, 1000),
                  ResourceError);
  CHECK(enumerate_independent_sets(PathGraph{25}).size() == 196418);
}

TEST_CASE("indexed family", "[fib]")
{
  IndexedFamily const family(6);
  CHECK(family.size() == 21);
  CHECK(family.index_of(VertexSet::of(6, {1, 6})) ==
        iota(6, VertexSet::of(6, {1, 6})));
  CHECK(format_set(family.set_at(21)) == "{2,4,6}");
  CHECK_THROWS_AS(family.set_at(22), RangeError);
}
