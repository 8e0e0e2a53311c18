#include <doctest.h>

#include "fillperm/crossing_diagram.hpp"
#include "fillperm/enumeration.hpp"

using namespace fillperm;

TEST_CASE("diagram validation") {
  CHECK_THROWS_AS(CrossingDiagram({}, {}), std::invalid_argument);
  CHECK_THROWS_AS(CrossingDiagram({1, 1}, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(CrossingDiagram({1, 2}, {1}), std::invalid_argument);
  CHECK_THROWS_AS(CrossingDiagram({1, 2}, {1, 0}), std::invalid_argument);
  const CrossingDiagram d({2, 3, 1}, {1, -1, 1});
  CHECK(d.points() == 3);
  CHECK(d.beta_position(1) == 3);
  CHECK(d.sign(2) == -1);
}

TEST_CASE("torus diagrams") {
  const GenusContext g1 = GenusContext::make(1);
  const CrossingDiagram a = diagram_of(FillingPermutation(g1, parse("[2,3,4,1]")));
  const CrossingDiagram b = diagram_of(FillingPermutation(g1, parse("[4,1,2,3]")));
  CHECK(a.beta_sequence() == std::vector<int>{1});
  CHECK(a.signs() != b.signs());
  CHECK(filling_of(a)->perm() == parse("[2,3,4,1]"));
  CHECK(filling_of(b)->perm() == parse("[4,1,2,3]"));
}

TEST_CASE("diagrams round trip through filling permutations") {
  for (int g : {1, 3, 4}) {
    for (const auto& fp : enumerate_filling(GenusContext::make(g))) {
      const CrossingDiagram d = diagram_of(fp);
      CHECK(d.points() == 2 * g - 1);
      CHECK(faces(d).size() == 1);
      const auto back = filling_of(d);
      REQUIRE(back);
      CHECK(back->perm() == fp.perm());
    }
  }
}

TEST_CASE("faces partition the directed arcs") {
  // all diagrams on three points
  std::vector<int> b{1, 2, 3};
  do {
    for (int mask = 0; mask < 8; ++mask) {
      const CrossingDiagram d(b, {mask & 1 ? -1 : 1, mask & 2 ? -1 : 1, mask & 4 ? -1 : 1});
      std::size_t total = 0;
      for (const auto& f : faces(d)) total += f.size();
      CHECK(total == 12);
      CHECK(face_permutation(d).degree() == 12);
      CHECK(filling_of(d).has_value() == (faces(d).size() == 1));
    }
  } while (std::next_permutation(b.begin(), b.end()));
  CHECK_FALSE(filling_of(CrossingDiagram({1, 2}, {1, 1})).has_value());
}
