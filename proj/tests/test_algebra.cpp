#include "doctest.h"
#include "strandbox/algebra.hpp"
#include "strandbox/errors.hpp"

using namespace strandbox;

TEST_CASE("linear A3 presentation has spine arrows, loops and square-zero relations") {
  auto p = build_type_C_algebra(3, Orientation::linear(3));
  REQUIRE(p.arrow_count() == 4);
  CHECK(p.arrow(0).name == "a21");
  CHECK(p.arrow(1).name == "a32");
  CHECK(p.arrow(2).name == "e1");
  CHECK(p.arrow(3).name == "e3");
  CHECK(p.relations() == std::vector<Path>{{2, 2}, {3, 3}});
  CHECK(validate_string_algebra(p).valid());
  CHECK(p.has_sides());
}

TEST_CASE("flipping an edge flips the arrow") {
  auto p = build_type_C_algebra(3, Orientation::parse("RL"));
  CHECK(p.arrow(1).name == "a23");
  CHECK(p.arrow(1).source == 3);
  CHECK(p.arrow(1).target == 2);
}

TEST_CASE("n below 3 is rejected") {
  CHECK_THROWS_AS(build_type_C_algebra(2, Orientation::linear(2)), DomainError);
  CHECK_THROWS_AS(build_type_C_algebra(4, Orientation::linear(3)), DomainError);
  CHECK_THROWS_AS(Orientation::parse("RXR"), DomainError);
}

TEST_CASE("every orientation gives a valid gentle presentation with tree spine") {
  for (int n = 3; n <= 7; ++n) {
    for (const auto& o : Orientation::all(n)) {
      auto p = build_type_C_algebra(n, o);
      CHECK(validate_string_algebra(p).valid());
      int spine = 0;
      for (const auto& a : p.arrows()) spine += a.is_loop() ? 0 : 1;
      CHECK(spine == n - 1);
      for (const auto& r : p.relations()) {
        CHECK(r.size() == 2);
        CHECK(r[0] == r[1]);
      }
    }
  }
}

TEST_CASE("validation reports degree and continuation violations") {
  std::vector<Arrow> arrows{{"a", 1, 2}, {"b", 1, 3}, {"c", 1, 4}};
  Presentation three_out(4, arrows, {});
  auto r1 = validate_string_algebra(three_out);
  REQUIRE(!r1.valid());
  CHECK(r1.violations[0].condition == 1);
  CHECK(r1.violations[0].vertex == 1);

  Presentation two_cont(3, {{"a", 1, 2}, {"b", 2, 3}, {"c", 2, 3}}, {});
  auto r2 = validate_string_algebra(two_cont);
  REQUIRE(!r2.valid());
  CHECK(r2.violations[0].condition == 2);
  CHECK(r2.violations[0].arrow == 0);
}

TEST_CASE("admissible vertices") {
  auto lin = build_type_C_algebra(3, Orientation::linear(3));
  auto a = admissible_vertices(lin);
  CHECK(a == std::vector<std::pair<int, Admissibility>>{{1, Admissibility::Source},
                                                        {3, Admissibility::Sink}});
  auto alt = build_type_C_algebra(3, Orientation::parse("RL"));
  CHECK(admissible_vertices(alt) ==
        std::vector<std::pair<int, Admissibility>>{{1, Admissibility::Source},
                                                   {2, Admissibility::Sink},
                                                   {3, Admissibility::Source}});
  auto lin4 = build_type_C_algebra(4, Orientation::linear(4));
  CHECK(admissible_vertices(lin4).size() == 2);
}

TEST_CASE("orientation helpers") {
  auto o = Orientation::parse("RRLR");
  CHECK(o.is_sink(3));
  CHECK(o.is_source(4));
  CHECK(!o.is_admissible(2));
  CHECK(o.reflected_at(3).to_string() == "RLRR");
  CHECK(o.omega() == std::set<std::pair<int, int>>{{2, 1}, {3, 2}, {3, 4}, {5, 4}});
  CHECK(Orientation::all(3).size() == 4);
}

TEST_CASE("presentation JSON round-trips") {
  auto p = build_type_C_algebra(5, Orientation::parse("RRLR"));
  auto j = to_json(p);
  CHECK(j.dump() .find("\"orientation\":[\"R\",\"R\",\"L\",\"R\"]") != std::string::npos);
  CHECK(presentation_from_json(j) == p);
  auto generic = Presentation(2, {{"x", 1, 2}}, {});
  CHECK(presentation_from_json(to_json(generic)) == generic);
}
