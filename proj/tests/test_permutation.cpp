#include <random>
#include <sstream>

#include "catch_amalgamated.hpp"

#include "support/oracle.hpp"
#include "toggle_group/permutation.hpp"

using namespace toggle_group;

TEST_CASE("identity and degree", "[permutation]")
{
  auto const e = identity(5);
  CHECK(e.degree() == 5);
  CHECK(e.is_identity());
  CHECK(format_cycles(e) == "()");
  CHECK_THROWS_AS(identity(0), DegreeError);
  CHECK(Permutation{}.degree() == 1);
}

TEST_CASE("images are one-based and validated", "[permutation]")
{
  auto const g = Permutation::from_images({2, 3, 1, 4});
  CHECK(g(1) == 2);
  CHECK(g(3) == 1);
  CHECK(g(4) == 4);
  CHECK_THROWS_AS(g(0), RangeError);
  CHECK_THROWS_AS(g(5), RangeError);
  CHECK_THROWS(Permutation::from_images({1, 1, 2}));
  CHECK_THROWS(Permutation::from_images({1, 4, 2}));
}

TEST_CASE("composition applies the right factor first", "[permutation]")
{
  auto const a = parse_cycles("(1,2)", 3);
  auto const b = parse_cycles("(2,3)", 3);
  // (a∘b)(2) = a(3) = 3, (a∘b)(3) = a(2) = 1.
  auto const ab = compose(a, b);
  CHECK(ab(2) == 3);
  CHECK(ab(3) == 1);
  CHECK(format_cycles(ab) == "(1,2,3)");
  CHECK(format_cycles(compose(b, a)) == "(1,3,2)");
  CHECK_THROWS_AS(compose(a, identity(4)), DegreeError);
}

TEST_CASE("conjugation relabels cycles", "[permutation]")
{
  auto const g = parse_cycles("(1,3)", 5);
  auto const by = parse_cycles("(1,4)(2,5)", 5);
  CHECK(format_cycles(conjugate(g, by)) == "(3,4)");
  CHECK(format_cycles(conjugate(parse_cycles("(1,2,3)", 4),
                                parse_cycles("(3,4)", 4))) == "(1,2,4)");
}

TEST_CASE("inverse, power and parity", "[permutation]")
{
  auto const g = parse_cycles("(1,2,3,4)(5,6)", 7);
  CHECK(format_cycles(inverse(g)) == "(1,4,3,2)(5,6)");
  CHECK(format_cycles(power(g, 2)) == "(1,3)(2,4)");
  CHECK(power(g, 4).is_identity());
  CHECK(power(g, 0).is_identity());
  CHECK(parity(g) == 1);
  CHECK(parity(parse_cycles("(1,2,3,4)", 7)) == -1);
  CHECK(parity(identity(3)) == 1);
  CHECK(cycle_type(g) == std::vector<std::size_t>{2, 4});
  CHECK(support(g) == std::vector<Point>{1, 2, 3, 4, 5, 6});
}

TEST_CASE("extend fixes the new points", "[permutation]")
{
  auto const g = parse_cycles("(1,2)", 2);
  auto const wide = extend(g, 5);
  CHECK(wide.degree() == 5);
  CHECK(format_cycles(wide) == "(1,2)");
  CHECK(wide(5) == 5);
  CHECK_THROWS_AS(extend(wide, 3), DegreeError);
}

TEST_CASE("canonical cycle text", "[permutation][format]")
{
  CHECK(format_cycles(from_cycles(8, {{6, 1}, {3, 8, 2}})) == "(1,6)(2,3,8)");
  CHECK(format_cycles(transposition(4, 4, 2)) == "(2,4)");
  std::ostringstream os;
  os << parse_cycles("(2,1)", 2);
  CHECK(os.str() == "(1,2)");
  auto const form = cycles(parse_cycles("(5,4)(3,1,2)", 6));
  CHECK(form.degree == 6);
  CHECK(form.cycles == std::vector<std::vector<Point>>{{1, 2, 3}, {4, 5}});
}

TEST_CASE("parse accepts whitespace and non-canonical starts", "[parse]")
{
  CHECK(format_cycles(parse_cycles(" ( 3 , 1 ) (4,2 ) ", 5)) == "(1,3)(2,4)");
  CHECK(parse_cycles("()", 3).is_identity());
  CHECK_THROWS_AS(parse_cycles("", 3), ParseError);
}

TEST_CASE("parse errors carry the position", "[parse]")
{
  auto position_of = [](std::string const &text, std::size_t degree) {
    try {
      parse_cycles(text, degree);
    } catch (ParseError const &e) {
      return static_cast<long>(e.position());
    }
    return -1L;
  };
  CHECK(position_of("(1,2", 3) == 4);
  CHECK(position_of("(1,4)", 3) == 3);
  CHECK(position_of("(1,2)(2,3)", 3) == 6);
  CHECK(position_of("(1)", 3) >= 0);
  CHECK(position_of("(1,2)()", 3) >= 0);
  CHECK(position_of("(1;2)", 3) == 2);
  CHECK(position_of("(0,1)", 3) == 1);
  CHECK_THROWS_AS(parse_cycles("x", 3), ParseError);
}

TEST_CASE("random permutations obey the group laws", "[permutation][property]")
{
  std::mt19937_64 rng(20260101);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t const m = 1 + trial % 12;
    auto const a = oracle::random_permutation(m, rng);
    auto const b = oracle::random_permutation(m, rng);
    auto const c = oracle::random_permutation(m, rng);
    CHECK(compose(a, compose(b, c)) == compose(compose(a, b), c));
    CHECK(compose(a, inverse(a)).is_identity());
    CHECK(compose(inverse(a), a).is_identity());
    CHECK(parse_cycles(format_cycles(a), m) == a);
    CHECK(from_cycles(m, cycles(a).cycles) == a);
    CHECK(parity(compose(a, b)) == parity(a) * parity(b));
    CHECK(conjugate(compose(a, b), c) == compose(conjugate(a, c), conjugate(b, c)));
    PermutationHash hash;
    CHECK(hash(a) == hash(Permutation::from_zero_based(
                       {a.table().begin(), a.table().end()})));
  }
}
