#include "doctest.h"

#include "knotid/egc.hpp"
#include "knotid/homfly.hpp"
#include "knotid/simplify.hpp"

using namespace knotid;

namespace {
std::string fmt(const std::optional<Diagram>& d) { return d ? format_egc(*d) : std::string("none"); }
}

TEST_SUITE("simplify") {

TEST_CASE("reduce_r1_once") {
  CHECK(fmt(reduce_r1_once(parse_egc("b1-a1-"))) == "none");
  CHECK(fmt(reduce_r1_once(parse_egc("a1+b2+a3+b1+a2+b3+b4+a4+"))) == "a1+b2+a3+b1+a2+b3+");
  CHECK(fmt(reduce_r1_once(parse_egc("a1+b2+a3+b1+a2+b3+"))) == "none");
  // wraps around the end of the component
  CHECK(fmt(reduce_r1_once(parse_egc("a1-a2+b3+a4+b2+a3+b4+b1-"))) == "a1+b2+a3+b1+a2+b3+");
}

TEST_CASE("twist protection normalizes the last crossing") {
  CHECK(fmt(reduce_r1_once(parse_egc("a1+b1+"))) == "b1-a1-");
  CHECK(fmt(simplify(parse_egc("a1+b1+,b2-a2-"))) == "b1-a1-,b2-a2-");
}

TEST_CASE("reduce_r2_once") {
  CHECK(fmt(reduce_r2_once(parse_egc("a1+a2-b2-b1+"))) == "b1-a1-");
  CHECK(fmt(reduce_r2_once(parse_egc("a1+b2+a3+b1+a2+b3+"))) == "none");
  const auto r = reduce_r2_once(parse_egc("a1-b2-b3+a4-b5-b6+b7-b1-a2-b8+a9+a3+b10+a5-a6+a7-a8+b9+b4-a10+"));
  REQUIRE(r);
  CHECK(r->crossing_count() == 8);
}

TEST_CASE("simplify examples") {
  CHECK(format_egc(simplify(parse_egc("b1-b2+b3-a3-a2+a1-"))) == "b1-a1-");
  const Diagram six3 = parse_egc("a1-b2-b3+a4-b5-b6+b7-b1-a2-b8+a9+a3+b10+a5-a6+a7-a8+b9+b4-a10+");
  const Diagram s = simplify(six3);
  CHECK(s.crossing_count() <= 8);
  CHECK(homfly(s) == homfly(six3));
  CHECK(format_egc(s) == "a1-b2-b3+a4-b5-b1-a2-b6+a7+a3+b8+a5-a6+b7+b4-a8+");
  CHECK(format_egc(simplify(parse_egc("a1+b2+a3+b1+a2+b3+"))) == "a1+b2+a3+b1+a2+b3+");
}

TEST_CASE("simplify is idempotent and keeps components") {
  for (const char* s : {"b1-b2+b3-a3-a2+a1-", "a1+a2-b2-b1+,b3+a3+", "b1-a2+b3-a1-,b2+a3-", "a1+b2-a2-b1+"}) {
    const Diagram d = parse_egc(s);
    const Diagram once = simplify(d);
    CHECK(simplify(once) == once);
    CHECK(once.component_count() == d.component_count());
    CHECK(once.crossing_count() <= d.crossing_count());
  }
}

TEST_CASE("adding an R1 twist then simplifying restores the diagram") {
  CHECK(format_egc(simplify(parse_egc("a1+b2+a3+b1+a2+b4-a4-b3+"))) == "a1+b2+a3+b1+a2+b3+");
}

}
