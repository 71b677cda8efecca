#include "doctest.h"
#include "oracle.hpp"

#include "charrig/complex.hpp"
#include "charrig/zlin.hpp"

#include <string>

using namespace charrig;

namespace {

std::string corpus(const std::string& name) { return std::string(CHARRIG_CORPUS_DIR) + "/" + name + ".json"; }

const char* kNames[] = {"point", "interval", "s1", "s2", "t2", "rp2", "klein", "moore3"};

ZMatrix mul(const ZMatrix& a, const ZMatrix& b) {
  ZMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (sgn(a(i, k)) != 0)
        for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
  return c;
}

}  // namespace

TEST_CASE("corpus complexes load with the expected Euler characteristics") {
  const long chi[] = {1, 1, 0, 2, 0, 1, 0, 1};
  for (int i = 0; i < 8; ++i) {
    CAPTURE(kNames[i]);
    auto x = load_complex_file(corpus(kNames[i]));
    CHECK(x->name() == kNames[i]);
    CHECK(x->euler_characteristic() == chi[i]);
  }
}

TEST_CASE("boundary matrices match the oracle and square to zero") {
  for (const char* name : kNames) {
    auto x = load_complex_file(corpus(name));
    for (int j = 1; j <= x->dimension(); ++j) {
      const ZMatrix& d = x->boundary(j);
      auto ref = oracle::boundary(*x, j);
      for (std::size_t r = 0; r < d.rows(); ++r)
        for (std::size_t c = 0; c < d.cols(); ++c) REQUIRE(d(r, c) == ref[r][c]);
      if (j >= 2) CHECK(mul(x->boundary(j - 1), d).is_zero());
    }
  }
}

TEST_CASE("parse errors are typed") {
  CHECK_THROWS_AS(load_complex("not json"), ParseError);
  CHECK_THROWS_AS(load_complex(R"({"simplices": [[0, 1]]})"), ParseError);
  CHECK_THROWS_AS(load_complex(R"({"name": "x", "simplices": [[1, 0]]})"), ParseError);
  CHECK_THROWS_AS(load_complex(R"({"name": "x", "simplices": [[0, 1], [0, 1]]})"), DuplicateError);
  CHECK_THROWS_AS(load_complex(R"({"name": "x", "simplices": [[0, 1, 2]], "faces": [[0, 1]]})"),
                  FaceClosureError);
  CHECK_THROWS_AS(load_complex(R"({"name": "x", "dimension": 2, "simplices": [[0, 1]]})"), ParseError);
  CHECK_THROWS_AS(load_complex_file("/nonexistent/complex.json"), IoError);
  CHECK_THROWS_AS(boundary_matrix(*load_complex_file(corpus("s1")), 3), DegreeError);
}

TEST_CASE("faces are generated from maximal simplices") {
  auto x = load_complex(R"({"name": "triangle", "simplices": [[0, 1, 2]]})");
  CHECK(x->count(0) == 3);
  CHECK(x->count(1) == 3);
  CHECK(x->count(2) == 1);
  auto signs = faces_with_signs({0, 1, 2});
  REQUIRE(signs.size() == 3);
  CHECK(signs[0] == std::pair<Simplex, int>{{1, 2}, 1});
  CHECK(signs[1] == std::pair<Simplex, int>{{0, 2}, -1});
}

TEST_CASE("barycentric subdivision: counts, chain maps and the last-vertex left inverse") {
  auto x = load_complex_file(corpus("s2"));
  Subdivision sd = barycentric_subdivide(x);
  CHECK(sd.fine->count(0) == x->size());
  CHECK(sd.fine->count(2) == 6 * x->count(2));
  CHECK(sd.fine->euler_characteristic() == x->euler_characteristic());
  for (int j = 0; j <= 2; ++j) {
    // d Sd = Sd d and pi_# Sd = id.
    if (j >= 1) CHECK(mul(sd.fine->boundary(j), sd.chain_map[j]) == mul(sd.chain_map[j - 1], x->boundary(j)));
    CHECK(mul(sd.last_vertex.chain_map(j), sd.chain_map[j]) == ZMatrix::identity(x->count(j)));
  }
  for (std::size_t i = 0; i < sd.fine->count(2); ++i) CHECK(sd.carrier[2][i].first == 2);
}

TEST_CASE("simplicial maps push chains and pull cochains adjointly") {
  auto x = load_complex_file(corpus("t2"));
  Subdivision sd = barycentric_subdivide(x);
  const SimplicialMap& pi = sd.last_vertex;
  IntVector chain(sd.fine->count(1));
  for (std::size_t i = 0; i < chain.size(); i += 3) chain[i] = static_cast<long>(i % 5) - 2;
  RatVector cochain(x->count(1));
  for (std::size_t i = 0; i < cochain.size(); ++i) cochain[i] = Rational(static_cast<long>(i % 4)) / 3;
  IntVector pushed = pi.push_chain(1, chain);
  RatVector pulled = pi.pull_cochain(1, cochain);
  Rational lhs = 0, rhs = 0;
  for (std::size_t i = 0; i < pushed.size(); ++i) lhs += cochain[i] * Rational(pushed[i]);
  for (std::size_t i = 0; i < chain.size(); ++i) rhs += pulled[i] * Rational(chain[i]);
  CHECK(lhs == rhs);
}
