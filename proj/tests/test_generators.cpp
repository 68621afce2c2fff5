#include <random>
#include <thread>

#include "catch_amalgamated.hpp"

#include "support/oracle.hpp"
#include "toggle_group/generators.hpp"
#include "toggle_group/stabilizer_chain.hpp"

using namespace toggle_group;

namespace
{

std::vector<std::string> texts(std::vector<Permutation> const &perms)
{
  std::vector<std::string> out;
  for (auto const &g : perms)
    out.push_back(format_cycles(g));
  return out;
}

} // namespace

TEST_CASE("block swaps", "[generators]")
{
  CHECK(format_cycles(hat_t(1)) == "(1,2)");
  CHECK(format_cycles(hat_t(2)) == "(1,3)");
  CHECK(format_cycles(hat_t(3)) == "(1,4)(2,5)");
  CHECK(format_cycles(hat_t(4)) == "(1,6)(2,7)(3,8)");
  CHECK(format_cycles(hat_t(5)) == "(1,9)(2,10)(3,11)(4,12)(5,13)");
  CHECK_THROWS_AS(hat_t(0), RangeError);
}

TEST_CASE("generator families for small n", "[generators]")
{
  using L = std::vector<std::string>;
  CHECK(texts(G(1).members) == L{"(1,2)"});
  CHECK(texts(G(2).members) == L{"(1,2)", "(1,3)"});
  CHECK(texts(G(3).members) == L{"(1,2)(4,5)", "(1,3)", "(1,4)(2,5)"});
  CHECK(texts(G(4).members) == L{"(1,2)(4,5)(6,7)", "(1,3)(6,8)",
                                 "(1,4)(2,5)", "(1,6)(2,7)(3,8)"});
  CHECK(texts(G_prime(3)) == L{"(1,2)(4,5)"});
  CHECK(texts(G_prime(4)) == L{"(1,2)(4,5)(6,7)", "(1,3)(6,8)"});
  CHECK(G(7).degree == 34);
  CHECK_THROWS_AS(G_prime(2), RangeError);
  CHECK_THROWS_AS(t(0, 3), RangeError);
  CHECK_THROWS_AS(t(4, 3), RangeError);
}

TEST_CASE("every t_{k,n} is an involution", "[generators][property]")
{
  for (std::size_t n = 1; n <= 12; ++n)
    for (std::size_t k = 1; k <= n; ++k) {
      auto const g = t(k, n);
      CHECK(g.degree() == fib(n + 2));
      CHECK_FALSE(g.is_identity());
      CHECK(compose(g, g).is_identity());
    }
}

TEST_CASE("toggle permutations coincide with t_{k,n}", "[generators]")
{
  for (std::size_t n = 1; n <= 9; ++n)
    for (std::size_t k = 1; k <= n; ++k) {
      INFO("n = " << n << ", k = " << k);
      CHECK(toggle_permutation(n, k) == t(k, n));
    }
  CHECK_THROWS_AS(toggle_permutation(3, 4), RangeError);
}

TEST_CASE("diagonal subgroup membership", "[generators]")
{
  TildeSubgroupSpec const spec(4); // f_4 = 3, shift f_5 = 5, degree 8
  CHECK(spec.degree() == 8);
  CHECK(in_tilde_S(spec, identity(8)));
  CHECK(in_tilde_S(spec, parse_cycles("(1,2)(6,7)", 8)));
  CHECK(in_tilde_S(spec, parse_cycles("(1,2,3)(6,7,8)", 8)));
  CHECK_FALSE(in_tilde_S(spec, parse_cycles("(1,2)", 8)));
  CHECK_FALSE(in_tilde_S(spec, parse_cycles("(1,2)(6,8)", 8)));
  CHECK_FALSE(in_tilde_S(spec, parse_cycles("(4,5)", 8)));
  CHECK_FALSE(in_tilde_S(spec, parse_cycles("(1,6)(2,7)(3,8)", 8)));
  CHECK_THROWS_AS(in_tilde_S(spec, identity(7)), DegreeError);
  CHECK_THROWS_AS(TildeSubgroupSpec(2), RangeError);
}

TEST_CASE("embedding into the diagonal subgroup", "[generators]")
{
  CHECK(format_cycles(varphi_embed(4, parse_cycles("(1,2)", 3))) ==
        "(1,2)(6,7)");
  CHECK(format_cycles(varphi_embed(3, parse_cycles("(1,2)", 2))) ==
        "(1,2)(4,5)");
  CHECK_THROWS_AS(varphi_embed(4, identity(4)), DegreeError);

  std::mt19937_64 rng(44);
  TildeSubgroupSpec const spec(6);
  for (int i = 0; i < 50; ++i) {
    auto const a = oracle::random_permutation(8, rng);
    auto const b = oracle::random_permutation(8, rng);
    auto const ea = varphi_embed(6, a);
    CHECK(in_tilde_S(spec, ea));
    CHECK(compose(ea, varphi_embed(6, b)) == varphi_embed(6, compose(a, b)));
  }
}

// For n ≥ 4 the members of G'_n move points of the middle block, so they
// do not lie in the diagonal subgroup. The group orders below come from
// brute-force closure.
TEST_CASE("G'_n against the diagonal subgroup", "[generators][oracle]")
{
  auto const g3 = G_prime(3);
  CHECK(in_tilde_S(TildeSubgroupSpec(3), g3[0]));
  auto const c3 = oracle::closure(g3, 5);
  REQUIRE(c3.has_value());
  CHECK(c3->size() == 2);

  auto const g4 = G_prime(4);
  CHECK_FALSE(in_tilde_S(TildeSubgroupSpec(4), g4[0]));
  CHECK(in_tilde_S(TildeSubgroupSpec(4), g4[1]));
  auto const c4 = oracle::closure(g4, 8);
  REQUIRE(c4.has_value());
  CHECK(c4->size() == 12);
  CHECK(StabilizerChain::build(g4, 8).order() == 12);

  auto const c5 = oracle::closure(G_prime(5), 13);
  REQUIRE(c5.has_value());
  CHECK(c5->size() == 720);
  CHECK(StabilizerChain::build(G_prime(6), 21).order() == 4838400);

  // The embedded image of G_{n-2} does generate the diagonal subgroup.
  for (std::size_t n = 3; n <= 8; ++n) {
    std::vector<Permutation> embedded;
    for (auto const &g : G(n - 2).members)
      embedded.push_back(varphi_embed(n, g));
    CHECK(StabilizerChain::build(embedded, fib(n + 2)).order() ==
          factorial(fib(n)));
  }
}

TEST_CASE("generator cache is safe under concurrent use", "[generators]")
{
  GeneratorCache cache;
  std::vector<std::thread> pool;
  std::vector<Permutation> results(8);
  for (std::size_t i = 0; i < results.size(); ++i)
    pool.emplace_back([&, i] { results[i] = cache.get(1 + i % 5, 10); });
  for (auto &th : pool)
    th.join();
  for (std::size_t i = 0; i < results.size(); ++i)
    CHECK(results[i] == t(1 + i % 5, 10));
}
