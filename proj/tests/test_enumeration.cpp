#include <doctest.h>

#include <set>

#include "fillperm/enumeration.hpp"
#include "oracles.hpp"

using namespace fillperm;

TEST_CASE("base involution") {
  const BaseInvolution b1 = base_involution(GenusContext::make(1));
  CHECK(b1.perm == parse("(1,3)(2,4)", 4));
  CHECK(b1.odd.size() == 1);
  CHECK(b1.even.size() == 1);
  CHECK(base_involution(GenusContext::make(2)).perm == parse("(1,9)(2,10)(3,11)(4,12)(5,7)(6,8)", 12));
  const BaseInvolution b3 = base_involution(GenusContext::make(3));
  CHECK(b3.odd.size() == 5);
  CHECK(b3.even.size() == 5);
  for (const auto& t : b3.odd) CHECK((t.a % 2 == 1 && t.b % 2 == 1 && t.odd));
  for (const auto& t : b3.even) CHECK((t.a % 2 == 0 && t.b % 2 == 0 && !t.odd));
}

TEST_CASE("torus roots") {
  const auto roots = square_roots(GenusContext::make(1));
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == parse("(1,2,3,4)", 4));
  CHECK(roots[1] == parse("(1,4,3,2)", 4));
}

TEST_CASE("root generator matches backtracking oracle") {
  for (int g = 1; g <= 3; ++g) {
    const GenusContext ctx = GenusContext::make(g);
    const auto roots = square_roots(ctx);
    const auto expected = oracle::parity_square_roots(g);
    const std::set<Permutation> a(roots.begin(), roots.end()), b(expected.begin(), expected.end());
    CHECK(a.size() == roots.size());
    CHECK(a == b);
  }
}

TEST_CASE("root counts and square property") {
  const std::uint64_t expected[] = {2, 48, 3840, 645120};
  for (int g = 1; g <= 4; ++g) {
    const GenusContext ctx = GenusContext::make(g);
    const Permutation target = base_involution(ctx).perm;
    std::uint64_t count = 0, bad = 0;
    for_each_square_root(ctx, [&](const Permutation& c) {
      ++count;
      bad += !(compose(c, c) == target);
      return true;
    });
    CHECK(count == expected[g - 1]);
    CHECK(bad == 0);
    CHECK(root_count(g) == expected[g - 1]);
  }
}

TEST_CASE("realize follows the documented interleaving") {
  const BaseInvolution b = base_involution(GenusContext::make(1));
  CHECK(realize(b, {{0}, {0}}) == parse("(1,2,3,4)", 4));
  CHECK(realize(b, {{0}, {1}}) == parse("(1,4,3,2)", 4));
  CHECK_THROWS_AS(realize(base_involution(GenusContext::make(2)), {{0, 0}, {0, 0}}), std::invalid_argument);
}

TEST_CASE("enumeration results") {
  CHECK(enumerate_filling(GenusContext::make(1)).size() == 2);
  CHECK(enumerate_filling(GenusContext::make(2)).empty());
  CHECK(count_classes(GenusContext::make(1)) == 1);
  CHECK(count_classes(GenusContext::make(2)) == 0);
  for (int g : {1, 2, 3}) {
    const GenusContext ctx = GenusContext::make(g);
    std::set<Permutation> expected;
    for (const auto& c : oracle::parity_square_roots(g)) {
      const Permutation s = compose(oracle::fixed(g).iota, c);
      if (oracle::is_filling(g, s)) expected.insert(s);
    }
    std::set<Permutation> got;
    for (const auto& f : enumerate_filling(ctx)) got.insert(f.perm());
    CHECK(got == expected);
  }
  CHECK_FALSE(enumerate_filling(GenusContext::make(4)).empty());
}

TEST_CASE("enumeration is independent of the worker count") {
  const GenusContext ctx = GenusContext::make(4);
  const auto one = enumerate_roots(ctx, {1});
  for (unsigned jobs : {2U, 3U, 8U}) {
    const auto many = enumerate_roots(ctx, {jobs});
    CHECK(many.root_count == one.root_count);
    CHECK(many.fillings == one.fillings);
    CHECK(class_representatives(ctx, many.fillings, jobs) == class_representatives(ctx, one.fillings, 1));
  }
}

TEST_CASE("guard") {
  const GenusContext ctx = GenusContext::make(6);
  CHECK_THROWS_AS(enumerate_filling(ctx), GuardExceeded);
  try {
    enumerate_filling(GenusContext::make(3), {1, 2, false});
    FAIL("expected refusal");
  } catch (const GuardExceeded& e) {
    CHECK(e.genus() == 3);
    CHECK(e.guard() == 2);
    CHECK(std::string(e.what()).find("3840") != std::string::npos);
  }
  CHECK(enumerate_filling(GenusContext::make(3), {1, 2, true}).size() == 600);
}

TEST_CASE("class counts within the bounds") {
  const std::size_t n3 = count_classes(GenusContext::make(3));
  const BoundsReport b3 = bounds_report(3);
  REQUIRE(b3.lower);
  CHECK(BigRational(n3) >= *b3.lower);
  CHECK(n3 >= 1);
  CHECK(BigInt(n3) <= b3.upper);
  const std::size_t n4 = count_classes(GenusContext::make(4), {4});
  CHECK(n4 >= 1);
  CHECK(BigInt(n4) <= upper_bound(4));
}

TEST_CASE("closed under twisting conjugation") {
  for (int g = 1; g <= 3; ++g) {
    const GenusContext ctx = GenusContext::make(g);
    std::set<Permutation> all;
    for (const auto& f : enumerate_filling(ctx)) all.insert(f.perm());
    const auto group = twisting_group(ctx);
    for (const auto& p : all)
      for (const auto& h : group) CHECK(all.count(conjugate(p, h)) == 1);
  }
}

TEST_CASE("bound formulas") {
  CHECK(upper_bound(3) == 672);
  CHECK(upper_bound(4) == 84480);
  CHECK(*lower_bound(3) == BigRational(1, 100));
  CHECK(*lower_bound(5) == BigRational(4, 4 * 81));
  CHECK_FALSE(lower_bound(4).has_value());
  CHECK(bounds_report(4).lower_note == "not implemented (even-genus chain)");
  CHECK_THROWS_WITH(upper_bound(2), "bounds not defined");
  CHECK_THROWS_WITH(lower_bound(1), "bounds not defined");
  // exact arithmetic far beyond 64 bits
  BigInt f23 = 1, f41 = 1;
  for (int k = 2; k <= 23; ++k) f23 *= k;
  for (int k = 2; k <= 41; ++k) f41 *= k;
  CHECK(root_count(12) == (BigInt(1) << 23) * f23);
  CHECK(upper_bound(22) == (BigInt(1) << 42) * 83 * f41);
}

TEST_CASE("L_g counts") {
  CHECK(count_Lg(3) == 1);
  CHECK(count_Lg(5) == 4);
  CHECK(count_Lg(7) == 22);
  for (int g = 3; g <= 13; g += 2) CHECK(count_Lg(g) == oracle::count_Lg_bruteforce(g));
  CHECK_THROWS_AS(count_Lg(4), std::invalid_argument);
  CHECK_THROWS_AS(count_Lg(1), std::invalid_argument);
}

TEST_CASE("exclusion family") {
  const GenusContext ctx = GenusContext::make(3);
  const auto excluded = excluded_roots(ctx);
  CHECK(excluded.size() == 480);
  CHECK(excluded_count(3) == 480);
  const std::set<Permutation> distinct(excluded.begin(), excluded.end());
  CHECK(distinct.size() == 480);
  const auto roots = square_roots(ctx);
  const std::set<Permutation> root_set(roots.begin(), roots.end());
  const Permutation iota = canonical_perms(ctx).iota;
  std::set<Permutation> filling_roots;
  for (const auto& f : enumerate_filling(ctx)) filling_roots.insert(compose(iota, f.perm()));
  for (const auto& c : excluded) {
    CHECK(root_set.count(c) == 1);
    CHECK(filling_roots.count(c) == 0);
    const Permutation s = compose(iota, c);
    CHECK(s(s(1)) == 1);
    CHECK_FALSE(is_n_cycle(s));
  }
  // 3840 - 480 = 2^{2g-2}(4g-5)(2g-1)!/(2g-2) at g = 3
  CHECK(root_count(3) - excluded_count(3) == BigInt(16) * 7 * 120 / 4);
  CHECK(excluded_roots(GenusContext::make(4)).size() == excluded_count(4));
  CHECK_THROWS_AS(excluded_roots(GenusContext::make(2)), std::invalid_argument);
}
