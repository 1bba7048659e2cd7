#include "doctest.h"

#include <sstream>

#include "knotid/egc.hpp"
#include "knotid/homfly.hpp"
#include "knotid/knotdb.hpp"
#include "skein_oracle.hpp"

using namespace knotid;

namespace {

const char* kSixThree = "L^-2 + 3 + L^2 - M^2L^-2 - 3M^2 - M^2L^2 + M^4";

SeedEntry seed(int crossing, int index, ChiralityClass cls, const char* egc) {
  SeedEntry s;
  s.crossing = crossing;
  s.index = index;
  s.chirality = cls;
  s.egc = egc;
  return s;
}

std::vector<PrimeRecord> trefoil_primes(bool figure_eight) {
  std::vector<SeedEntry> seeds{seed(3, 1, ChiralityClass::chiral, "a1+b2+a3+b1+a2+b3+")};
  if (figure_eight) seeds.push_back(seed(4, 1, ChiralityClass::achiral, "a1+b2-a3-b1+a4+b3-a2-b4+"));
  HomflyEngine engine;
  return designate_primes(seeds, engine);
}

std::vector<std::string> composites(const KnotTable& t, int crossing) {
  std::vector<std::string> out;
  for (const auto& [poly, names] : t.entries()) {
    for (const auto& n : names) {
      if (!n.is_prime() && n.crossing_number() == crossing) out.push_back(format_knot_name(n));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE("knotdb") {

TEST_CASE("knot names") {
  const auto a63 = parse_knot_name("a6.3");
  REQUIRE(a63.factors().size() == 1);
  CHECK(a63.factors()[0].prefix == ChiralPrefix::achiral);
  CHECK(a63.factors()[0].crossing == 6);
  CHECK(a63.factors()[0].index == 3);
  CHECK(a63.factors()[0].alt == AltFlag::none);
  const auto m1199 = parse_knot_name("m11.99a");
  CHECK(m1199.factors()[0].alt == AltFlag::alternating);
  CHECK(format_knot_name(m1199) == "m11.99a");
  CHECK(format_knot_name(parse_knot_name("p3.1#m3.1")) == "p3.1#m3.1");
  CHECK(format_knot_name(KnotTypeName::unknot()) == "a0.1");
  CHECK_THROWS_AS(parse_knot_name("m3.1#p3.1"), KnotNameError);
  CHECK_THROWS_AS(parse_knot_name("x3.1"), KnotNameError);
  CHECK_THROWS_AS(parse_knot_name("p3.1a"), KnotNameError);
  CHECK_THROWS_AS(parse_knot_name("p11.2"), KnotNameError);
  CHECK_THROWS_AS(parse_knot_name("a0.1#p3.1"), KnotNameError);
  CHECK_THROWS_AS(parse_knot_name("p4.1#p3.1"), KnotNameError);
}

TEST_CASE("chiral type counts") {
  CHECK(parse_knot_name("h9.42").chiral_type_count() == 2);
  CHECK(parse_knot_name("h9.42#h9.42").chiral_type_count() == 3);
  CHECK(parse_knot_name("p3.1#m3.1").chiral_type_count() == 1);
}

TEST_CASE("table load, lookup and save") {
  const KnotTable t = load_table_text(std::string("# header\n1,a0.1\n") + kSixThree + ",a6.3\n");
  REQUIRE(t.lookup("1"));
  CHECK(format_lookup(t.lookup("1")) == "a0.1");
  CHECK(format_lookup(t.lookup(parse_poly(kSixThree))) == "a6.3");
  CHECK(format_lookup(t.lookup("M^100")) == "unknown");
  CHECK_THROWS_AS(load_table_text("L +,a0.1\n"), TableError);
  CHECK_THROWS_AS(load_table_text("1,q0.1\n"), TableError);

  KnotTable three;
  three.add(LMPolynomial::constant(1), KnotTypeName::unknot());
  three.add(parse_poly(kSixThree), parse_knot_name("a6.3"));
  three.add(parse_poly("-L^-4 - 2L^-2 + M^2L^-2"), parse_knot_name("p3.1"));
  std::ostringstream out;
  save_table(three, out);
  CHECK(load_table_text(out.str()) == three);
  std::ostringstream again;
  save_table(load_table_text(out.str()), again);
  CHECK(again.str() == out.str());
}

TEST_CASE("duplicate keys merge") {
  const KnotTable t = load_table_text("1,a0.1\n1,p10.132,a0.1\n");
  CHECK(format_lookup(t.lookup("1")) == "a0.1,p10.132");
}

TEST_CASE("prime designation") {
  std::vector<SeedEntry> seeds{seed(0, 1, ChiralityClass::achiral, "b1-a1-"),
                               seed(3, 1, ChiralityClass::chiral, "a1+b2+a3+b1+a2+b3+"),
                               seed(4, 1, ChiralityClass::achiral, "a1+b2-a3-b1+a4+b3-a2-b4+")};
  const KnotTable t = build_prime_table(seeds);
  CHECK(t.size() == 4);
  const auto trefoil = oracle::homfly(parse_egc("a1+b2+a3+b1+a2+b3+"));
  CHECK(format_lookup(t.lookup(trefoil)) == "p3.1");
  CHECK(format_lookup(t.lookup(l_inverse_substitute(trefoil))) == "m3.1");
  CHECK(format_lookup(t.lookup("1")) == "a0.1");
  CHECK(format_lookup(t.lookup("-L^-2 - 1 - L^2 + M^2")) == "a4.1");

  HomflyEngine engine;
  auto bad = seeds;
  bad[1].chirality = ChiralityClass::achiral;
  CHECK_THROWS_AS(designate_primes(bad, engine), TableError);
  // 8_4 has writhe 0 in its seed diagram
  CHECK_THROWS_AS(designate_primes({seed(8, 4, ChiralityClass::chiral, "a1-b2-a3-b4-a5+b6+a7+b8+a4-b1-a2-b3-a8+b7+a6+b5+")}, engine),
                  TableError);
}

TEST_CASE("9_42 shares one polynomial with its mirror") {
  for (const auto& s : load_seeds_text(builtin_seeds_text())) {
    if (s.crossing != 9 || s.index != 42) continue;
    HomflyEngine engine;
    const auto records = designate_primes({s}, engine);
    REQUIRE(records.size() == 1);
    CHECK(format_knot_name(records[0].name) == "h9.42");
  }
  CHECK(format_lookup(builtin_table().lookup(parse_poly(kSixThree))) == "a6.3");
}

TEST_CASE("composites of trefoils and the figure eight") {
  KnotTable t;
  CHECK(extend_with_composites(t, trefoil_primes(false), 6) == 3);
  CHECK(composites(t, 6) == std::vector<std::string>{"m3.1#m3.1", "p3.1#m3.1", "p3.1#p3.1"});

  KnotTable u;
  extend_with_composites(u, trefoil_primes(true), 7);
  CHECK(composites(u, 7) == std::vector<std::string>{"m3.1#a4.1", "p3.1#a4.1"});

  KnotTable v;
  extend_with_composites(v, trefoil_primes(false), 9);
  CHECK(composites(v, 9) == std::vector<std::string>{"m3.1#m3.1#m3.1", "p3.1#m3.1#m3.1", "p3.1#p3.1#m3.1",
                                                     "p3.1#p3.1#p3.1"});
}

TEST_CASE("composite keys are products of factor polynomials") {
  const auto primes = trefoil_primes(true);
  KnotTable t;
  extend_with_composites(t, primes, 8);
  for (const auto& [poly, names] : t.entries()) {
    for (const auto& n : names) {
      LMPolynomial product = LMPolynomial::constant(1);
      for (const auto& f : n.factors()) {
        for (const auto& r : primes) {
          if (r.name.factors()[0] == f) product = product * r.poly;
        }
      }
      CHECK(format_poly(product) == poly);
    }
  }
}

TEST_CASE("seeds") {
  const auto seeds = load_seeds_text("# c\n3.1,chiral,,b1+a2+b3+a1+b2+a3+\n8.4,chiral,m,a1-b2-a3-b4-a5+b6+a7+b8+a4-b1-a2-b3-a8+b7+a6+b5+\n");
  REQUIRE(seeds.size() == 2);
  CHECK(seeds[1].pm_override == ChiralPrefix::minus);
  CHECK_THROWS(load_seeds_text("4.1,achiral,,a1+b2+a3+b1+a2+b3+\n"));
  CHECK_THROWS(load_seeds_text("3.1,chirl,,a1+b2+a3+b1+a2+b3+\n"));
}

TEST_CASE("built-in table is the generated one") {
  const auto seeds = load_seeds_text(builtin_seeds_text());
  std::ostringstream out;
  save_table(generate_table(seeds, 10), out);
  CHECK(out.str() == std::string(builtin_table_text()));
}

TEST_CASE("mirror closure of the built-in table") {
  const KnotTable& t = builtin_table();
  for (const auto& [poly, names] : t.entries()) {
    for (const auto& n : names) {
      bool chiral = false;
      std::vector<PrimeFactor> flipped;
      for (auto f : n.factors()) {
        if (f.prefix == ChiralPrefix::plus || f.prefix == ChiralPrefix::minus) chiral = true;
        if (f.prefix == ChiralPrefix::plus) {
          f.prefix = ChiralPrefix::minus;
        } else if (f.prefix == ChiralPrefix::minus) {
          f.prefix = ChiralPrefix::plus;
        }
        flipped.push_back(f);
      }
      if (!chiral) continue;
      std::sort(flipped.begin(), flipped.end(), [](const PrimeFactor& a, const PrimeFactor& b) { return factor_order(a, b) < 0; });
      const auto* mirrored = t.lookup(l_inverse_substitute(parse_poly(poly)));
      REQUIRE(mirrored);
      CHECK(std::find(mirrored->begin(), mirrored->end(), KnotTypeName(flipped)) != mirrored->end());
    }
  }
}

}
