#include "doctest.h"

#include "charrig/geometry.hpp"
#include "charrig/serialize.hpp"

#include <fstream>

using namespace charrig;

namespace {

std::string corpus(const std::string& name) { return std::string(CHARRIG_CORPUS_DIR) + "/" + name + ".json"; }

IntVector cycle_file(const Complex& x, const std::string& name, int& degree) {
  std::ifstream in(std::string(CHARRIG_CORPUS_DIR) + "/cycles/" + name + ".json");
  return chain_from_json(x, Json::parse(in), &degree);
}

IntVector add(IntVector a, const IntVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

}  // namespace

TEST_CASE("tower levels multiply top simplices by (n+1)!") {
  auto x = load_complex_file(corpus("s2"));
  SubdivisionTower t(x);
  CHECK(t.level(1)->count(2) == 6 * x->count(2));
  CHECK(t.level(2)->count(2) == 36 * x->count(2));
  CHECK(t.level(2)->euler_characteristic() == 2);
  // (pi_d)_# Sd^d = id on every chain group.
  for (int d = 1; d <= 2; ++d)
    for (int j = 0; j <= 2; ++j)
      for (std::size_t i = 0; i < x->count(j); i += 3) {
        IntVector e(x->count(j));
        e[i] = 1;
        CHECK(t.projection(d).push_chain(j, t.subdivide(0, d, j, e)) == e);
      }
}

TEST_CASE("the S2 equator normalizes to a circle and bounds in a good neighbourhood") {
  auto x = load_complex_file(corpus("s2"));
  SubdivisionTower t(x);
  int j = -1;
  IntVector z = cycle_file(*x, "s2_equator", j);
  REQUIRE(j == 1);
  Normalization n = normalize_cycle(t, j, z);
  CHECK(is_pseudomanifold(n.p));
  CHECK(n.p.dimension == 1);
  Bounding b = bound_in_good_neighborhood(t, n.p);
  CHECK(b.null_homologous);
  CHECK(b.region.good());
  CHECK(b.region.level == 1);
  CHECK(multiply(t.level(b.depth)->boundary(2), b.chain) == b.boundary);
  for (const auto& c : check_cycle_geometry(t, "equator", j, z)) {
    CAPTURE(c.name);
    CAPTURE(c.detail);
    CHECK(c.passed());
  }
}

TEST_CASE("essential loops do not bound; twice the RP2 loop does") {
  for (const char* name : {"t2_loop_a", "t2_loop_b", "rp2_loop"}) {
    auto x = load_complex_file(corpus(std::string(name).substr(0, 3) == "rp2" ? "rp2" : "t2"));
    SubdivisionTower t(x);
    int j = -1;
    IntVector z = cycle_file(*x, name, j);
    Bounding b = bound_in_good_neighborhood(t, normalize_cycle(t, j, z).p);
    CAPTURE(name);
    CHECK_FALSE(b.null_homologous);
    CHECK(b.homology_group != "0");
  }
  auto x = load_complex_file(corpus("rp2"));
  SubdivisionTower t(x);
  int j = -1;
  IntVector z = cycle_file(*x, "rp2_loop_twice", j);
  Normalization n = normalize_cycle(t, j, z);
  CHECK(is_pseudomanifold(n.p));
  CHECK(bound_in_good_neighborhood(t, n.p).null_homologous);
}

TEST_CASE("split and resolve handle multiplicities and figure eights") {
  auto x = load_complex_file(corpus("t2"));
  SubdivisionTower t(x);
  int j = -1;
  IntVector z = cycle_file(*x, "t2_figure_eight", j);
  Normalization n = normalize_cycle(t, j, z);
  CHECK(is_pseudomanifold(n.p));
  CHECK(pseudomanifold_defect(n.p).empty());
  CHECK(n.cycle == add(n.p.pushed(), multiply(t.level(n.depth)->boundary(j + 1), n.witness)));

  IntVector triple = z;
  for (auto& v : triple) v *= 3;
  SplitResult s = split_cycle(t, j, triple);
  for (const auto& v : s.split) CHECK(abs(v) <= 1);
  CHECK(s.chain == add(s.split, multiply(t.level(s.depth)->boundary(j + 1), s.witness)));
  CHECK_THROWS_AS(split_chain(t, 0, 2, IntVector(x->count(2), 1)), DimensionError);
  CHECK_THROWS_AS(split_cycle(t, 1, IntVector(x->count(1), 1)), NotACycle);
}

TEST_CASE("sampled cycles pass the geometry checks") {
  for (const char* name : {"s1", "s2", "t2", "rp2", "klein", "moore3"}) {
    auto x = load_complex_file(corpus(name));
    SubdivisionTower t(x);
    for (int j = 0; j < x->dimension(); ++j)
      for (const auto& [label, z] : sample_cycles(*x, j))
        for (const auto& c : check_cycle_geometry(t, label, j, z)) {
          CAPTURE(name);
          CAPTURE(label);
          CAPTURE(c.name);
          CAPTURE(c.detail);
          CHECK(c.passed());
        }
  }
}

TEST_CASE("a disk collapses to a point; a circle does not") {
  CollapseCertificate disk = collapse(*load_complex(R"({"name": "disk", "simplices": [[0, 1, 2], [0, 2, 3]]})"));
  CHECK(disk.remaining_dimension == 0);
  CHECK(disk.collapses == 5);
  CHECK(collapse(*load_complex_file(corpus("s1"))).remaining_dimension == 1);
}
