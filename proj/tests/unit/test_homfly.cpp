#include "doctest.h"

#include <fstream>
#include <map>
#include <sstream>

#include "knotid/egc.hpp"
#include "knotid/homfly.hpp"
#include "knotid/knotdb.hpp"
#include "skein_oracle.hpp"

using namespace knotid;

namespace {

const char* kSixThree = "L^-2 + 3 + L^2 - M^2L^-2 - 3M^2 - M^2L^2 + M^4";

std::string seed_name(const SeedEntry& s) { return std::to_string(s.crossing) + "." + std::to_string(s.index); }

// name -> KnotInfo HOMFLY of the same diagram, converted to L, M.
std::map<std::string, LMPolynomial> reference_table() {
  std::ifstream in(std::string(KNOTID_TEST_DATA_DIR) + "/reference_homfly.txt");
  REQUIRE(in);
  std::map<std::string, LMPolynomial> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string name, term;
    fields >> name;
    std::vector<Term> terms;
    while (fields >> term) {
      Term t;
      char c1 = 0, c2 = 0;
      std::istringstream ts(term);
      ts >> t.coeff >> c1 >> t.l_exp >> c2 >> t.m_exp;
      terms.push_back(t);
    }
    out[name] = LMPolynomial::from_terms(terms);
  }
  return out;
}

}  // namespace

TEST_SUITE("homfly") {

TEST_CASE("unknots and split unions") {
  CHECK(format_poly(homfly(parse_egc("b1-a1-"))) == "1");
  CHECK(format_poly(homfly(parse_egc("a1+b1+"))) == "1");
  CHECK(format_poly(homfly(parse_egc("b1-b2+b3-a3-a2+a1-"))) == "1");
  CHECK(homfly(parse_egc("b1-a1-,b2-a2-")) == LMPolynomial::split_factor());
  CHECK(homfly(parse_egc("b1-a1-,b2-a2-,a3+b3+")) == poly_pow(LMPolynomial::split_factor(), 2));
}

TEST_CASE("trefoil matches the brute-force oracle") {
  const Diagram t = parse_egc("a1+b2+a3+b1+a2+b3+");
  CHECK(homfly(t) == oracle::homfly(t));
  CHECK(format_poly(homfly(t)) == "-L^-4 - 2L^-2 + M^2L^-2");
  CHECK(homfly(mirror(t)) == l_inverse_substitute(homfly(t)));
}

TEST_CASE("Hopf link") {
  const Diagram hopf = parse_egc("a1+b2+,a2+b1+");
  CHECK(homfly(hopf) == oracle::homfly(hopf));
  CHECK(format_poly(homfly(hopf)) == "M^-1L^-3 + M^-1L^-1 - ML^-1");
}

TEST_CASE("6_3 ten-crossing projection code") {
  const Diagram d = parse_egc("a1-b2-b3+a4-b5-b6+b7-b1-a2-b8+a9+a3+b10+a5-a6+a7-a8+b9+b4-a10+");
  CHECK(format_poly(homfly(d)) == kSixThree);
  CHECK(homfly(mirror(d)) == homfly(d));
  CHECK(homfly(reverse(d)) == homfly(d));
}

TEST_CASE("granny and square knots") {
  const Diagram t = parse_egc("a1+b2+a3+b1+a2+b3+");
  const LMPolynomial p = homfly(t), m = homfly(mirror(t));
  CHECK(homfly(connected_sum(t, mirror(t))) == p * m);
  CHECK(homfly(connected_sum(t, t)) == p * p);
  CHECK(homfly(connected_sum(t, twist_unknot())) == p);
}

TEST_CASE("resource limits") {
  std::string code;
  for (int i = 1; i <= 60; ++i) code += "b" + std::to_string(i) + "-a" + std::to_string(i) + "-";
  CHECK_THROWS_AS(homfly(parse_egc(code)), ResourceLimitError);
  HomflyLimits tight;
  tight.max_nodes = 3;
  CHECK_THROWS_AS(homfly(parse_egc("a1-b2-b3+a4-b5-b6+b7-b1-a2-b8+a9+a3+b10+a5-a6+a7-a8+b9+b4-a10+"), tight),
                  ResourceLimitError);
}

TEST_CASE("engine memo is reusable") {
  HomflyEngine engine;
  const Diagram d = parse_egc("a1+b2+a3+b1+a2+b3+");
  const auto first = engine.compute(d);
  CHECK(engine.memo_size() > 0);
  CHECK(engine.compute(d) == first);
  engine.clear_memo();
  CHECK(engine.memo_size() == 0);
  CHECK(engine.compute(d) == first);
}

TEST_CASE("every seed diagram matches the KnotInfo reference polynomial") {
  const auto reference = reference_table();
  const auto seeds = load_seeds_text(builtin_seeds_text());
  REQUIRE(seeds.size() == reference.size());
  HomflyEngine engine;
  for (const auto& s : seeds) {
    const auto it = reference.find(seed_name(s));
    REQUIRE_MESSAGE(it != reference.end(), seed_name(s));
    CHECK_MESSAGE(engine.compute(parse_egc(s.egc)) == it->second, seed_name(s));
  }
}

TEST_CASE("engine equals the oracle on seeds up to 8 crossings") {
  HomflyEngine engine;
  for (const auto& s : load_seeds_text(builtin_seeds_text())) {
    if (s.crossing > 8) continue;
    const Diagram d = parse_egc(s.egc);
    CHECK_MESSAGE(engine.compute(d) == oracle::homfly(d), seed_name(s));
  }
}

}
