#include "doctest.h"

#include "charrig/product.hpp"

#include <set>

using namespace charrig;

namespace {

std::string corpus(const std::string& name) { return std::string(CHARRIG_CORPUS_DIR) + "/" + name + ".json"; }

// Checks that are known to fail at class level (see README: graded
// commutativity); everything else in the grid must pass.
bool known_red(const std::string& name) {
  return name == "ring.graded_commutativity" || name.rfind("ring.uniqueness.transposed.", 0) == 0;
}

}  // namespace

TEST_CASE("star is closed and has the expected degree") {
  auto x = load_complex_file(corpus("t2"));
  auto a = sample_classes(x, 1, 2, 6), b = sample_classes(x, 2, 3, 6);
  for (const auto& s : a)
    for (const auto& r : b) {
      DiffClass p = star(s.value, r.value);
      CHECK(p.k == 3);
      CHECK(is_diff_cocycle(p));
    }
  for (const auto& s : a) {
    CHECK(class_equal(star(s.value, zero_class(x, 1)), zero_class(x, 2)));
    CHECK(class_equal(star(zero_class(x, 1), s.value), zero_class(x, 2)));
  }
  auto y = load_complex_file(corpus("s1"));
  CHECK_THROWS_AS(star(a[0].value, zero_class(y, 1)), MismatchError);
}

TEST_CASE("on T2 the product of the two degree-1 lifts has delta2 the fundamental class") {
  auto x = load_complex_file(corpus("t2"));
  auto g = sample_generators(*x, 1, Ring::kZ);
  REQUIRE(g.size() == 2);
  DiffClass p = star(delta2_preimage(x, g[0]), delta2_preimage(x, g[1]));
  CohomologyClass top = delta2(p);
  REQUIRE(top.coords.size() == 1);
  CHECK(abs(top.coords[0]) == 1);
  CHECK(delta1(p) == cup(*x, delta1(delta2_preimage(x, g[0])), delta1(delta2_preimage(x, g[1]))));
}

TEST_CASE("x * i2(theta) = (-1)^k i2(omega u theta)") {
  auto x = load_complex_file(corpus("rp2"));
  Sampler rng(8);
  for (const auto& s : sample_classes(x, 1, 5, 6)) {
    Cochain theta = rng.rational_cochain(*x, 0);
    DiffClass lhs = star(s.value, i2(x, {theta}));
    DiffClass rhs = -i2(x, {cup(*x, delta1(s.value), theta)});
    CHECK(class_equal(lhs, rhs));
  }
}

TEST_CASE("ring axiom grid: all checks pass except graded commutativity") {
  const std::pair<int, int> degrees[] = {{1, 1}, {1, 2}, {2, 1}};
  for (const char* name : {"s1", "t2", "rp2", "klein"}) {
    auto x = load_complex_file(corpus(name));
    SubdivisionTower t(x);
    for (auto [k, l] : degrees) {
      if (k + l > x->dimension() + 1) continue;
      std::set<std::string> seen;
      for (const auto& c : verify_ring_axioms(t, k, l, 0)) {
        seen.insert(c.name);
        if (known_red(c.name)) continue;
        CAPTURE(name);
        CAPTURE(k);
        CAPTURE(l);
        CAPTURE(c.name);
        CAPTURE(c.detail);
        CHECK(c.passed());
      }
      for (const char* required : {"ring.closure", "ring.graded_commutativity", "ring.graded_commutativity.difference_in_im_i2", "ring.delta1_multiplicative",
                                   "ring.delta2_multiplicative", "ring.i1_module", "ring.i2_module", "ring.associativity", "ring.biadditivity"})
        CHECK(seen.count(required) == 1);
    }
  }
}

TEST_CASE("graded commutativity fails on the circle with a non-integral period witness") {
  auto x = load_complex_file(corpus("s1"));
  SubdivisionTower t(x);
  bool found = false;
  for (const auto& c : verify_ring_axioms(t, 1, 1, 0))
    if (c.name == "ring.graded_commutativity") {
      found = true;
      CHECK(c.status == CheckStatus::kFail);
      CHECK(c.witness.contains("periods"));
      CHECK_FALSE(c.witness.contains("delta1"));  // omega u omega' vanishes in degree 2 on a 1-complex
    }
  CHECK(found);
}
