#include "doctest.h"

#include "charrig/characters.hpp"

using namespace charrig;

namespace {

std::string corpus(const std::string& name) { return std::string(CHARRIG_CORPUS_DIR) + "/" + name + ".json"; }

}  // namespace

TEST_CASE("the equivalence suite passes on the corpus") {
  for (const char* name : {"s1", "s2", "t2", "rp2", "klein", "moore3"}) {
    auto x = load_complex_file(corpus(name));
    SubdivisionTower t(x);
    for (int k = 1; k <= x->dimension() + 1; ++k)
      for (const auto& c : check_phi(t, k, 0)) {
        CAPTURE(name);
        CAPTURE(k);
        CAPTURE(c.name);
        CAPTURE(c.detail);
        CHECK(c.status != CheckStatus::kFail);
      }
  }
}

TEST_CASE("the flat order-2 character on RP2 has delta2 the Z/2 generator") {
  auto x = load_complex_file(corpus("rp2"));
  auto u = sample_generators(*x, 1, Ring::kQmodZ);
  REQUIRE(u.size() == 1);
  Character ch = hom_i1(x, u[0]);
  CHECK(ch.omega.is_zero());
  REQUIRE(ch.f.size() >= 1);
  for (LiftStrategy s : {LiftStrategy::kUnit, LiftStrategy::kCentered}) {
    CohomologyClass d = delta2_via_lift(ch, s);
    CHECK(d.ring == Ring::kZ);
    CHECK(d.coords == RatVector{Rational(1)});
  }
  // The same class through the cocycle model.
  DiffClass y = phi_inverse(ch);
  CHECK(delta2(y).coords == RatVector{Rational(1)});
  CHECK(class_equal(y, i1(x, u[0])));
  CHECK(phi_direct(y) == ch);
  CHECK((ch + ch) == zero_character(x, 2));
}

TEST_CASE("evaluation, validation and serialization") {
  auto x = load_complex_file(corpus("t2"));
  auto chars = sample_characters(x, 2, 9, 5);
  REQUIRE(chars.size() == 5);
  for (const auto& ch : chars) {
    CHECK(is_character(*x, 2, ch.f, ch.omega));
    CHECK(character_from_json(x, character_to_json(ch)) == ch);
    for (std::size_t m = 0; m < ch.f.size(); ++m) {
      CHECK(ch.f[m] >= 0);
      CHECK(ch.f[m] < 1);
    }
  }
  // A non-closed form cannot be the curvature.
  Cochain w = Cochain::zero(*x, 1, Ring::kQ);
  w.values[0] = 1;
  CHECK_THROWS_AS(make_character(x, 1, RatVector{}, w), InvalidArgument);
  CHECK_THROWS_AS(make_character(x, 1, RatVector{}, Cochain::mod_one(1, RatVector(x->count(1)))), RingError);
  CHECK_THROWS_AS(evaluate(chars[0], IntVector(x->count(1), 1)), NotACycle);
  CHECK_THROWS_AS(chars[0] + zero_character(x, 1), MismatchError);
}

TEST_CASE("pullback along subdivision commutes with phi") {
  auto x = load_complex_file(corpus("s1"));
  SubdivisionTower t(x);
  const SimplicialMap& pi = t.projection(1);
  for (const auto& s : sample_classes(x, 1, 4, 6))
    CHECK(pullback(pi, phi_direct(s.value)) == phi_direct(pullback(pi, s.value)));
}
