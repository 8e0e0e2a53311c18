#include <doctest.h>

#include <random>
#include <unordered_set>

#include "fillperm/permutation.hpp"

using namespace fillperm;

namespace {

Permutation random_perm(std::mt19937& rng, std::size_t n) {
  std::vector<Permutation::symbol> im(n);
  for (std::size_t i = 0; i < n; ++i) im[i] = static_cast<Permutation::symbol>(i + 1);
  std::shuffle(im.begin(), im.end(), rng);
  return Permutation::from_images(im);
}

}  // namespace

TEST_CASE("construction and validation") {
  const Permutation p = Permutation::from_images({2, 3, 1, 4});
  CHECK(p.degree() == 4);
  CHECK(p(1) == 2);
  CHECK(p(3) == 1);
  CHECK(p(4) == 4);
  CHECK_THROWS_AS(Permutation::from_images({1, 1, 2}), PermutationError);
  CHECK_THROWS_WITH(Permutation::from_images({1, 5}), doctest::Contains("not a permutation"));
  CHECK(Permutation::identity(5).is_identity());
  CHECK(Permutation::from_cycles(4, {{1, 2, 3}, {4}}) == p);
  CHECK_THROWS_AS(Permutation::from_cycles(4, {{1, 2}, {2, 3}}), PermutationError);
}

TEST_CASE("composition applies the right operand first") {
  const Permutation p = parse("(1,2)", 3);
  const Permutation q = parse("(2,3)", 3);
  // (p∘q)(2) = p(q(2)) = p(3) = 3
  CHECK(compose(p, q)(2) == 3);
  CHECK(compose(p, q) == parse("(1,2,3)", 3));
  CHECK(compose(q, p) == parse("(1,3,2)", 3));
  CHECK_THROWS_WITH(compose(p, Permutation::identity(4)), doctest::Contains("degree mismatch"));
}

TEST_CASE("inverse, power and conjugation") {
  const Permutation c = parse("(1,2,3,4,5)(6,7)", 7);
  CHECK(compose(c, inverse(c)).is_identity());
  CHECK(power(c, 10).is_identity());
  CHECK(power(c, 0).is_identity());
  CHECK(power(c, -1) == inverse(c));
  CHECK(power(c, 3) == compose(c, compose(c, c)));
  CHECK(order(c) == 10);
  const Permutation h = parse("(1,6)", 7);
  // h c h⁻¹ relabels the cycles of c by h
  CHECK(conjugate(c, h) == parse("(6,2,3,4,5)(1,7)", 7));
}

TEST_CASE("cycle structure") {
  const Permutation p = parse("(1,3)(2,5,4)", 6);
  const auto cs = cycles(p);
  REQUIRE(cs.size() == 3);
  CHECK(cs[0] == Permutation::Cycle{1, 3});
  CHECK(cs[1] == Permutation::Cycle{2, 5, 4});
  CHECK(cs[2] == Permutation::Cycle{6});
  CHECK(cycle_type(p) == std::vector<std::size_t>{3, 2, 1});
  CHECK_FALSE(is_n_cycle(p));
  CHECK(is_n_cycle(parse("(1,4,2,6,3,5)", 6)));
}

TEST_CASE("parity respecting") {
  CHECK(is_parity_respecting(parse("[2,3,4,1]")));
  CHECK(is_parity_respecting(parse("[1,2,3,4]")));
  CHECK_FALSE(is_parity_respecting(parse("[2,1,3,4]")));
  CHECK_THROWS_WITH(is_parity_respecting(parse("[1,2,3]")), doctest::Contains("parity undefined"));
}

TEST_CASE("text formats") {
  CHECK(format(parse("[2,3,4,1]")) == "[2,3,4,1]");
  CHECK(format(parse("[2 3 4 1]")) == "[2,3,4,1]");
  CHECK(format_cycles(parse("[2,3,4,1]")) == "(1,2,3,4)");
  CHECK(format_cycles(Permutation::identity(3)) == "()");
  CHECK(parse("n=6 (1,2)(5,6)").degree() == 6);
  CHECK(parse("(1 2)(5 6)", 8).degree() == 8);
  CHECK_THROWS_AS(parse("[2,3"), ParseError);
  CHECK_THROWS_AS(parse("(1,2"), ParseError);
  CHECK_THROWS_AS(parse("[1,x]"), ParseError);
  CHECK_THROWS_AS(parse("[2,3,4,1]", 5), PermutationError);
  try {
    parse("[1,2,?]");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
}

TEST_CASE("random permutations satisfy the group laws") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 17);
    const Permutation a = random_perm(rng, n), b = random_perm(rng, n), c = random_perm(rng, n);
    CHECK(compose(a, compose(b, c)) == compose(compose(a, b), c));
    CHECK(inverse(compose(a, b)) == compose(inverse(b), inverse(a)));
    CHECK(power(a, static_cast<long long>(order(a))).is_identity());
    CHECK(parse(format(a)) == a);
    CHECK(parse(format_cycles(a), n) == a);
    CHECK(cycle_type(conjugate(a, b)) == cycle_type(a));
    std::size_t total = 0;
    for (const auto& cy : cycles(a)) total += cy.size();
    CHECK(total == n);
  }
}

TEST_CASE("hash agrees with equality") {
  std::unordered_set<Permutation> s;
  s.insert(parse("[2,1,3]"));
  s.insert(parse("(1,2)", 3));
  s.insert(parse("[1,2,3]"));
  CHECK(s.size() == 2);
}
