// Acceptance criteria, one PASS/FAIL line each. All comparisons are exact
// (rational arithmetic, zero tolerance).
//
//   acceptance                 run every criterion
//   acceptance --criterion N   run criterion N only; exit 1 when it fails

#include "oracle.hpp"

#include "charrig/characters.hpp"
#include "charrig/product.hpp"
#include "charrig/report.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

using namespace charrig;

namespace {

const char* kNames[] = {"point", "interval", "s1", "s2", "t2", "rp2", "klein", "moore3"};

std::string corpus(const std::string& name) { return std::string(CHARRIG_CORPUS_DIR) + "/" + name + ".json"; }

struct Tally {
  std::size_t checked = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok) failures.push_back(what);
  }
  void expect(const CheckList& checks, const std::string& where) {
    for (const auto& c : checks) expect(c.passed(), where + " " + c.name + ": " + c.detail);
  }
};

// 1: both short exact sequences and the four commuting faces, every complex
// and degree 1..dim+1.
Tally diagram() {
  Tally t;
  for (const char* name : kNames) {
    auto x = load_complex_file(corpus(name));
    for (int k = 1; k <= x->dimension() + 1; ++k) {
      const std::string where = std::string(name) + " k=" + std::to_string(k);
      t.expect(check_exactness(*x, k), where);
      t.expect(check_character_diagram(x, k, 0), where);
    }
  }
  return t;
}

// 2: cohomology groups against the dense SNF oracle and the golden file.
Tally known_groups() {
  Tally t;
  std::ifstream in(std::string(CHARRIG_GOLDEN_DIR) + "/groups.json");
  const Json golden = Json::parse(in);
  for (const char* name : kNames) {
    auto x = load_complex_file(corpus(name));
    auto ref = oracle::integral_cohomology(*x);
    for (int j = 0; j <= x->dimension() + 1; ++j) {
      const std::string where = std::string(name) + " H^" + std::to_string(j);
      const auto& g = integral_cohomology(*x, j).group;
      t.expect(g.rank() == ref[j].rank && g.torsion() == std::vector<Integer>(ref[j].torsion.begin(),
                                                                                ref[j].torsion.end()),
               where + " differs from the oracle");
      t.expect(describe_cohomology(*x, j, Ring::kZ) == golden.at(name).at("H^" + std::to_string(j)).at("Z"),
               where + " differs from the golden file");
    }
  }
  auto z = [](const char* name, int j) { return describe_cohomology(*load_complex_file(corpus(name)), j, Ring::kZ); };
  t.expect(z("s1", 1) == "Z", "H^1(S1) = Z");
  t.expect(z("rp2", 2) == "Z/2", "H^2(RP2) = Z/2");
  t.expect(z("t2", 1) == "Z^2", "H^1(T2) = Z^2");
  // The torsion of the Klein bottle sits in H_1 and H^2, not H^1.
  t.expect(z("klein", 1) == "Z", "H^1(K) = Z");
  t.expect(z("klein", 2) == "Z/2", "H^2(K) = Z/2");
  t.expect(homology(*load_complex_file(corpus("klein")), 1).group.describe() == "Z/2 + Z", "H_1(K) = Z + Z/2");
  t.expect(z("moore3", 1) == "0", "H^1(M(Z/3,1)) = 0");
  t.expect(z("moore3", 2) == "Z/3", "H^2(M(Z/3,1)) = Z/3");
  return t;
}

// 3: the equivalence suite, plus an explicit count of >= 20 round trips per
// complex and degree.
Tally equivalence() {
  Tally t;
  for (const char* name : kNames) {
    auto x = load_complex_file(corpus(name));
    SubdivisionTower tower(x);
    for (int k = 1; k <= x->dimension() + 1; ++k) {
      const std::string where = std::string(name) + " k=" + std::to_string(k);
      t.expect(check_phi(tower, k, 0), where);
      auto samples = sample_classes(x, k, 0, 20);
      t.expect(samples.size() >= 20, where + " fewer than 20 sampled classes");
      for (const auto& s : samples) {
        Character ch = phi_direct(s.value);
        t.expect(class_equal(phi_inverse(ch), s.value), where + " " + s.label + " inverse round trip");
        t.expect(phi_direct(phi_inverse(ch)) == ch, where + " " + s.label + " character round trip");
      }
    }
  }
  return t;
}

// 4: delta2 through a lift of the character.
Tally delta2_construction() {
  Tally t;
  for (const char* name : kNames) {
    auto x = load_complex_file(corpus(name));
    for (int k = 1; k <= x->dimension() + 1; ++k) {
      const std::string where = std::string(name) + " k=" + std::to_string(k);
      for (const auto& ch : sample_characters(x, k, 0, 20)) {
        CohomologyClass unit = delta2_via_lift(ch, LiftStrategy::kUnit);
        t.expect(unit == delta2_via_lift(ch, LiftStrategy::kCentered), where + " lift strategies disagree");
        t.expect(unit == delta2(phi_inverse(ch)), where + " differs from the cocycle model");
      }
      // delta2 o i1 = -B on the Q/Z generators.
      for (const auto& u : sample_generators(*x, k - 1, Ring::kQmodZ)) {
        CohomologyClass d = delta2_via_lift(hom_i1(x, u));
        t.expect(d == make_class(*x, k, Ring::kZ, (-bockstein(*x, u)).coords), where + " delta2 i1 != -B");
      }
    }
  }
  auto rp2 = load_complex_file(corpus("rp2"));
  auto u = sample_generators(*rp2, 1, Ring::kQmodZ);
  t.expect(u.size() == 1, "RP2 H^1(Q/Z) has one generator");
  if (u.size() == 1) {
    Character flat = hom_i1(rp2, u[0]);
    t.expect(flat.omega.is_zero(), "RP2 character is flat");
    t.expect(delta2_via_lift(flat).coords == RatVector{Rational(1)}, "RP2 delta2 is the Z/2 generator");
    t.expect(delta2_via_lift(flat, LiftStrategy::kCentered).coords == RatVector{Rational(1)},
             "RP2 delta2 (centered lift) is the Z/2 generator");
  }
  return t;
}

// 5: the ring grid on T2, RP2, Klein and S2 for (1,1) and (1,2).
Tally ring() {
  Tally t;
  for (const char* name : {"t2", "rp2", "klein", "s2"}) {
    auto x = load_complex_file(corpus(name));
    SubdivisionTower tower(x);
    for (auto [k, l] : {std::pair{1, 1}, std::pair{1, 2}}) {
      const std::string where = std::string(name) + " (" + std::to_string(k) + "," + std::to_string(l) + ")";
      for (const auto& c : verify_ring_axioms(tower, k, l, 0)) {
        std::string what = where + " " + c.name + ": " + c.detail;
        if (!c.passed() && !c.witness.is_null()) what += " witness " + c.witness.dump();
        t.expect(c.passed(), what);
      }
    }
  }
  return t;
}

// 6: normalization, neighbourhoods and bounding on every sampled cycle and
// the shipped cycle files.
Tally geometry() {
  Tally t;
  for (const char* name : kNames) {
    auto x = load_complex_file(corpus(name));
    SubdivisionTower tower(x);
    for (int j = 0; j < x->dimension(); ++j)
      for (const auto& [label, z] : sample_cycles(*x, j))
        t.expect(check_cycle_geometry(tower, label, j, z), std::string(name) + " H" + std::to_string(j));
  }
  struct Expect {
    const char* complex;
    const char* cycle;
    bool bounds;
  };
  for (const auto& e : {Expect{"s2", "s2_equator", true}, Expect{"s2", "s2_double_equator", true},
                        Expect{"t2", "t2_loop_a", false}, Expect{"t2", "t2_loop_b", false},
                        Expect{"rp2", "rp2_loop", false}, Expect{"rp2", "rp2_loop_twice", true}}) {
    auto x = load_complex_file(corpus(e.complex));
    SubdivisionTower tower(x);
    std::ifstream in(std::string(CHARRIG_CORPUS_DIR) + "/cycles/" + e.cycle + ".json");
    int j = -1;
    IntVector z = chain_from_json(*x, Json::parse(in), &j);
    t.expect(check_cycle_geometry(tower, e.cycle, j, z), e.cycle);
    Normalization n = normalize_cycle(tower, j, z);
    t.expect(is_pseudomanifold(n.p), std::string(e.cycle) + " normalizes to a pseudomanifold");
    Bounding b = bound_in_good_neighborhood(tower, n.p);
    t.expect(b.null_homologous == e.bounds, std::string(e.cycle) + (e.bounds ? " should bound" : " should not bound"));
    if (b.null_homologous)
      t.expect(b.region.good() && b.region.level == j &&
                   multiply(tower.level(b.depth)->boundary(j + 1), b.chain) == b.boundary,
               std::string(e.cycle) + " bounds in a good neighbourhood");
  }
  return t;
}

// 7: canonical hashes across repeated runs and thread counts.
Tally determinism() {
  Tally t;
  for (const char* name : kNames) {
    auto x = load_complex_file(corpus(name));
    for (const char* command : {"inspect", "diagram", "phi", "ring", "pseudo"}) {
      RunOptions one, three;
      three.threads = 3;
      const std::string a = run_command(command, x, one).doc.at("hash");
      const std::string b = run_command(command, x, one).doc.at("hash");
      const std::string c = run_command(command, x, three).doc.at("hash");
      t.expect(a == b && a == c, std::string(command) + " " + name + " hash differs");
    }
  }
  return t;
}

struct Criterion {
  const char* title;
  std::function<Tally()> run;
};

const Criterion kCriteria[] = {
    {"character diagram: exact sequences and commuting faces", diagram},
    {"known cohomology groups (SNF oracle, golden file)", known_groups},
    {"differential cocycles <-> characters equivalence suite", equivalence},
    {"delta2 via lifted characters", delta2_construction},
    {"ring axioms on T2, RP2, Klein, S2 at (1,1), (1,2)", ring},
    {"cycle normalization and good neighbourhoods", geometry},
    {"deterministic report hashes", determinism},
};

bool report(int n) {
  const Criterion& c = kCriteria[n - 1];
  const auto start = std::chrono::steady_clock::now();
  Tally t;
  std::string error;
  try {
    t = c.run();
  } catch (const std::exception& e) {
    error = e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool ok = error.empty() && t.failures.empty();
  std::printf("criterion %d: %s — %s (%zu checks, %zu failed, exact, %.1fs)\n", n, ok ? "PASS" : "FAIL", c.title,
              t.checked, t.failures.size(), secs);
  if (!error.empty()) std::printf("  error: %s\n", error.c_str());
  const std::size_t shown = std::min<std::size_t>(t.failures.size(), 8);
  for (std::size_t i = 0; i < shown; ++i) std::printf("  %s\n", t.failures[i].c_str());
  if (t.failures.size() > shown) std::printf("  ... %zu more\n", t.failures.size() - shown);
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc == 3 && std::string(argv[1]) == "--criterion") {
    const int n = std::atoi(argv[2]);
    if (n < 1 || n > 7) {
      std::fprintf(stderr, "criterion must be 1..7\n");
      return 2;
    }
    return report(n) ? 0 : 1;
  }
  if (argc != 1) {
    std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
    return 2;
  }
  bool all = true;
  for (int n = 1; n <= 7; ++n) all = report(n) && all;
  return all ? 0 : 1;
}
