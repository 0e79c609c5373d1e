#include <catch2/catch_amalgamated.hpp>

#include "arcstab/perm.hpp"

using namespace arcstab;

TEST_CASE("composition applies left factor first") {
  Perm p = Perm::from_images({1, 2, 0});  // (0 1 2)
  Perm q = Perm::from_images({1, 0, 2});  // (0 1)
  Perm pq = compose(p, q);
  CHECK(pq.images() == std::vector<int>{0, 2, 1});
  // and the other order differs
  CHECK(compose(q, p).images() == std::vector<int>{2, 1, 0});
}

TEST_CASE("identity, inverse and powers") {
  Perm e(5);
  CHECK(e.is_identity());
  CHECK(e.first_moved() == -1);

  Perm g = parse_cycles(6, "(0 1 2 3 4 5)");
  CHECK((g * g.inverse()).is_identity());
  CHECK(perm_power(g, 6).is_identity());
  CHECK(perm_power(g, -1) == g.inverse());
  CHECK(perm_power(g, 7) == g);
  CHECK(perm_order(g) == 6);
  CHECK(perm_order(parse_cycles(6, "(0 1)(2 3 4)")) == 6);
}

TEST_CASE("conjugation moves points the right way") {
  // point^(h^-1 g h): the conjugate of g by h acts on relabelled points
  Perm g = parse_cycles(5, "(0 1)");
  Perm h = parse_cycles(5, "(0 3)(1 4)");
  Perm c = conjugate(g, h);
  CHECK(c == parse_cycles(5, "(3 4)"));
}

TEST_CASE("cycle notation round trip") {
  Perm g = parse_cycles(7, "(0 2 4)(1 3)");
  CHECK(g[0] == 2);
  CHECK(g[4] == 0);
  CHECK(g[1] == 3);
  CHECK(g[5] == 5);
  CHECK(parse_cycles(7, to_cycles(g)) == g);
  CHECK(to_cycles(Perm(4)) == "()");

  // whitespace and commas both separate points
  CHECK(parse_cycles(4, "(0, 1)(2, 3)") == parse_cycles(4, "(0 1)(2 3)"));
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(Perm::from_images({0, 0, 1}), Error);
  CHECK_THROWS_AS(Perm::from_images({0, 3}), Error);
  CHECK_THROWS_AS(parse_cycles(3, "(0 1"), Error);
  CHECK_THROWS_AS(parse_cycles(3, "(0 5)"), Error);
  CHECK_THROWS_AS(parse_cycles(3, "(0 1)(1 2)"), Error);
  Perm a(3), b(4);
  CHECK_THROWS_AS(a * b, Error);
}
