#include "doctest.h"
#include "oracle.hpp"

#include "charrig/cochains.hpp"
#include "charrig/diffcocycle.hpp"
#include "charrig/serialize.hpp"

#include <fstream>

using namespace charrig;

namespace {

std::string corpus(const std::string& name) { return std::string(CHARRIG_CORPUS_DIR) + "/" + name + ".json"; }

const char* kNames[] = {"point", "interval", "s1", "s2", "t2", "rp2", "klein", "moore3"};

Json golden() {
  std::ifstream in(std::string(CHARRIG_GOLDEN_DIR) + "/groups.json");
  return Json::parse(in);
}

std::vector<Integer> as_integers(const std::vector<mpz_class>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("integral homology and cohomology agree with the oracle") {
  for (const char* name : kNames) {
    CAPTURE(name);
    auto x = load_complex_file(corpus(name));
    auto h = oracle::homology(*x);
    auto c = oracle::integral_cohomology(*x);
    for (int j = 0; j <= x->dimension() + 1; ++j) {
      CAPTURE(j);
      CHECK(homology(*x, j).group.rank() == h[j].rank);
      CHECK(homology(*x, j).group.torsion() == as_integers(h[j].torsion));
      CHECK(integral_cohomology(*x, j).group.rank() == c[j].rank);
      CHECK(integral_cohomology(*x, j).group.torsion() == as_integers(c[j].torsion));
    }
  }
}

TEST_CASE("group descriptions match the golden file") {
  const Json g = golden();
  for (const char* name : kNames) {
    auto x = load_complex_file(corpus(name));
    const Json& expect = g.at(name);
    CHECK(expect.size() == static_cast<std::size_t>(x->dimension() + 2));
    for (int j = 0; j <= x->dimension() + 1; ++j) {
      const Json& e = expect.at("H^" + std::to_string(j));
      CAPTURE(name);
      CAPTURE(j);
      CHECK(describe_cohomology(*x, j, Ring::kZ) == e.at("Z").get<std::string>());
      CHECK(describe_cohomology(*x, j, Ring::kQ) == e.at("Q").get<std::string>());
      CHECK(describe_cohomology(*x, j, Ring::kQmodZ) == e.at("Q/Z").get<std::string>());
      CHECK(homology(*x, j).group.describe() == e.at("H_j").get<std::string>());
    }
  }
  CHECK(g.at("rp2").at("H^2").at("Z") == "Z/2");
  CHECK(g.at("t2").at("H^1").at("Z") == "Z^2");
  CHECK(g.at("moore3").at("H^1").at("Z") == "0");
  CHECK(g.at("moore3").at("H^2").at("Z") == "Z/3");
  CHECK(g.at("klein").at("H^1").at("Z") == "Z");
}

TEST_CASE("cup product: Leibniz rule, rings and the T2 fundamental class") {
  auto x = load_complex_file(corpus("t2"));
  Sampler rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    Cochain a = rng.rational_cochain(*x, 1), b = rng.rational_cochain(*x, 0);
    Cochain lhs = coboundary(*x, cup(*x, a, b));
    Cochain rhs = cup(*x, coboundary(*x, a), b) - cup(*x, a, coboundary(*x, b));
    CHECK(lhs == rhs);
  }
  auto gens = sample_generators(*x, 1, Ring::kZ);
  REQUIRE(gens.size() == 2);
  auto prod = cohomology_class(*x, cup(*x, representative(*x, gens[0]), representative(*x, gens[1])));
  CHECK(prod.coords.size() == 1);
  CHECK(abs(prod.coords[0]) == 1);

  Cochain q = Cochain::mod_one(1, RatVector(x->count(1)));
  CHECK_THROWS_AS(cup(*x, q, q), RingError);
  CHECK(cup(*x, Cochain::zero(*x, 1, Ring::kZ), q).ring == Ring::kQmodZ);
}

TEST_CASE("Bockstein on RP2 sends the order-2 class to the Z/2 generator") {
  auto x = load_complex_file(corpus("rp2"));
  auto u = sample_generators(*x, 1, Ring::kQmodZ);
  REQUIRE(u.size() == 1);
  CHECK(u[0].coords == RatVector{Rational(1, 2)});
  CohomologyClass b = bockstein(*x, u[0]);
  CHECK(b.ring == Ring::kZ);
  CHECK(b.coords == RatVector{Rational(1)});
  CHECK(bockstein(*x, u[0], LiftStrategy::kCentered) == b);
  CHECK(bockstein(*x, 2 * u[0]).is_zero());
}

TEST_CASE("exactness of the coefficient and de Rham-type sequences") {
  for (const char* name : kNames) {
    auto x = load_complex_file(corpus(name));
    for (int k = 1; k <= x->dimension() + 1; ++k)
      for (const auto& c : check_exactness(*x, k)) {
        CAPTURE(name);
        CAPTURE(c.name);
        CAPTURE(c.detail);
        CHECK(c.passed());
      }
  }
}

TEST_CASE("integral forms and their JSON round trip") {
  auto x = load_complex_file(corpus("klein"));
  for (int j = 0; j <= 2; ++j)
    for (const auto& w : integral_form_generators(*x, j)) {
      CHECK(is_integral_form(*x, w));
      CHECK(cochain_from_json(*x, cochain_to_json(*x, w)) == w);
    }
  Cochain half = Cochain::rational(1, RatVector(x->count(1), Rational(1, 2)));
  CHECK_FALSE(is_integral_form(*x, coboundary(*x, Cochain::rational(0, RatVector(x->count(0)))) + half));
  CHECK_THROWS_AS(cochain_from_json(*x, Json::parse(R"({"degree": 1, "values": {"0,9": "1"}})")), Error);
  CHECK_THROWS_AS(cochain_from_json(*x, Json::parse(R"({"degree": 1, "values": {"0,1": "x"}})")), ParseError);
}
