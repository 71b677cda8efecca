#include "doctest.h"

#include "charrig/diffcocycle.hpp"
#include "charrig/geometry.hpp"

using namespace charrig;

namespace {

std::string corpus(const std::string& name) { return std::string(CHARRIG_CORPUS_DIR) + "/" + name + ".json"; }

const char* kNames[] = {"point", "interval", "s1", "s2", "t2", "rp2", "klein", "moore3"};

Cochain constant(const Complex& x, const Rational& q) { return Cochain::rational(0, RatVector(x.count(0), q)); }

// The fundamental 1-cycle of the corpus circle: [0,1] + [1,2] - [0,2].
IntVector circle(const Complex& x) {
  IntVector z(x.count(1));
  z[x.require_index({0, 1})] = 1;
  z[x.require_index({1, 2})] = 1;
  z[x.require_index({0, 2})] = -1;
  return z;
}

}  // namespace

TEST_CASE("invariants are enforced with typed errors") {
  auto x = load_complex_file(corpus("s1"));
  Cochain c = Cochain::zero(*x, 1, Ring::kZ), h = Cochain::zero(*x, 0, Ring::kQ), w = Cochain::zero(*x, 1, Ring::kQ);
  CHECK(is_diff_cocycle(make_diff_class(x, c, h, w)));
  Cochain w_bad = w;
  w_bad.values[0] = 1;
  CHECK_THROWS_AS(make_diff_class(x, c, h, w_bad), InvalidArgument);
  CHECK_THROWS_AS(make_diff_class(x, w, h, w), RingError);
  auto y = load_complex_file(corpus("s2"));
  Cochain c2 = Cochain::zero(*y, 1, Ring::kZ);
  c2.values[0] = 1;  // not a cocycle on S2
  CHECK_THROWS_AS(make_diff_class(y, c2, Cochain::zero(*y, 0, Ring::kQ), change_ring(c2, Ring::kQ)), NotACycle);
  CHECK_THROWS_AS(class_equal(zero_class(x, 1), zero_class(y, 1)), MismatchError);
}

TEST_CASE("equivalence: shifts are invisible, flat constants are not") {
  auto x = load_complex_file(corpus("s1"));
  Sampler rng(5);
  for (const auto& s : sample_classes(x, 1, 0)) {
    DiffClass y = shift(s.value, rng.integral_cochain(*x, 0), Cochain::zero(*x, -1, Ring::kQ));
    CHECK(class_equal(y, s.value));
    auto w = equivalence_witness(y, s.value);
    REQUIRE(w);
    CHECK(class_equal(shift(s.value, w->b, w->s), y));
  }
  // i2 of the constant 1/2 is a nonzero flat class; the constant 1 is integral.
  DiffClass half = i2(x, {constant(*x, Rational(1, 2))});
  CHECK(delta1(half).is_zero());
  CHECK(delta2(half).is_zero());
  CHECK_FALSE(class_equal(half, zero_class(x, 1)));
  CHECK(class_equal(i2(x, {constant(*x, Rational(1))}), zero_class(x, 1)));
  CHECK(class_equal(half + half, zero_class(x, 1)));
}

TEST_CASE("holonomy of i1 of the Q/Z generator on the circle") {
  auto x = load_complex_file(corpus("s1"));
  auto u1 = sample_generators(*x, 1, Ring::kQmodZ);
  REQUIRE(u1.size() == 1);
  DiffClass flat = i1(x, u1[0]);
  CHECK(holonomy(flat, circle(*x)) == Rational(1, 2));
  CHECK(delta1(flat).is_zero());
  CHECK(delta2(flat).is_zero());  // B vanishes: H^2(S1) = 0
  CHECK_THROWS_AS(holonomy(flat, IntVector(x->count(1), 1)), NotACycle);
}

TEST_CASE("constructive surjectivity and lifting") {
  auto x = load_complex_file(corpus("rp2"));
  auto g = sample_generators(*x, 2, Ring::kZ);
  REQUIRE(g.size() == 1);
  DiffClass p = delta2_preimage(x, g[0]);
  CHECK(delta2(p) == g[0]);
  CHECK_THROWS_AS(lift_through_i2(p), NotInImage);
  // Every 2-form on RP2 is integral (no 2-cycles); on T2 a third on one
  // triangle has period 1/3 on the fundamental cycle.
  CHECK_NOTHROW(delta1_preimage(x, Cochain::rational(2, RatVector(x->count(2), Rational(1, 3)))));
  auto t = load_complex_file(corpus("t2"));
  Cochain w = Cochain::zero(*t, 2, Ring::kQ);
  w.values[0] = Rational(1, 3);
  CHECK_THROWS_AS(delta1_preimage(t, w), NotInImage);
  for (const auto& form : integral_form_generators(*t, 2)) CHECK(delta1(delta1_preimage(t, form)) == form);
}

TEST_CASE("character diagram checks pass on every corpus complex and degree") {
  for (const char* name : kNames) {
    auto x = load_complex_file(corpus(name));
    for (int k = 1; k <= x->dimension() + 2; ++k) {
      auto checks = check_character_diagram(x, k, 0);
      CHECK(!checks.empty());
      for (const auto& c : checks) {
        CAPTURE(name);
        CAPTURE(k);
        CAPTURE(c.name);
        CAPTURE(c.detail);
        CHECK(c.passed());
      }
    }
  }
}

TEST_CASE("naturality under the standard maps") {
  for (const char* name : {"s1", "t2", "rp2"}) {
    auto x = load_complex_file(corpus(name));
    SubdivisionTower t(x);
    for (int k = 1; k <= x->dimension() + 1; ++k)
      for (const auto& [map_name, phi] : standard_maps(t))
        for (const auto& c : check_naturality(phi, k, sample_classes(phi.target(), k, 1, 6))) {
          CAPTURE(name);
          CAPTURE(map_name);
          CAPTURE(c.name);
          CHECK(c.passed());
        }
  }
}
