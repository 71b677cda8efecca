#include "charrig/product.hpp"

#include "charrig/serialize.hpp"

namespace charrig {

namespace {

Integer parity_sign(int n) { return n % 2 == 0 ? 1 : -1; }

CohomologyClass cup_class(const Complex& x, const CohomologyClass& a, const CohomologyClass& b) {
  return cohomology_class(x, cup(x, representative(x, a), representative(x, b)));
}

struct Grid {
  std::vector<SampleClass> a, b;
};

std::string pair_label(const SampleClass& a, const SampleClass& b) { return a.label + " * " + b.label; }

}  // namespace

DiffClass star(const DiffClass& x, const DiffClass& y) {
  if (x.space != y.space) throw MismatchError("product of classes on different complexes");
  const Complex& X = *x.space;
  Cochain c = cup(X, x.c, y.c);
  Cochain h = parity_sign(x.k) * cup(X, change_ring(x.c, Ring::kQ), y.h) + cup(X, x.h, y.omega);
  Cochain omega = cup(X, x.omega, y.omega);
  return make_diff_class(x.space, std::move(c), std::move(h), std::move(omega));
}

CheckList verify_ring_axioms(const SubdivisionTower& t, int k, int l, std::uint64_t seed) {
  const ComplexPtr& x = t.base();
  const Complex& X = *x;
  if (k < 1 || l < 1) throw DegreeError("ring axioms need degrees k, l >= 1");
  CheckList out;
  Sampler rng(seed * 104729u + static_cast<std::uint64_t>(31 * k + l));
  Grid g{sample_classes(x, k, seed, 12), sample_classes(x, l, seed + 1, 12)};
  const Integer skl = parity_sign(k * l), sk = parity_sign(k);
  const std::string grid = std::to_string(g.a.size()) + "x" + std::to_string(g.b.size()) + " grid";

  std::vector<std::vector<DiffClass>> prod(g.a.size());
  {
    bool ok = true;
    std::string detail = grid;
    try {
      for (std::size_t i = 0; i < g.a.size(); ++i)
        for (const auto& b : g.b) prod[i].push_back(star(g.a[i].value, b.value));
    } catch (const Error& e) {
      ok = false;
      detail = e.what();
    }
    out.push_back(make_check("ring.closure", ok, detail + ": products are differential cocycles of degree " +
                                                          std::to_string(k + l)));
    if (!ok) return out;
  }
  {
    bool ok = true;
    for (std::size_t i = 0; i < g.a.size(); ++i)
      for (std::size_t j = 0; j < g.b.size(); ++j) {
        auto sa = shift(g.a[i].value, rng.integral_cochain(X, k - 1),
                        k >= 2 ? rng.rational_cochain(X, k - 2) : Cochain::zero(X, k - 2, Ring::kQ));
        auto sb = shift(g.b[j].value, rng.integral_cochain(X, l - 1),
                        l >= 2 ? rng.rational_cochain(X, l - 2) : Cochain::zero(X, l - 2, Ring::kQ));
        ok = ok && class_equal(star(sa, sb), prod[i][j]);
      }
    out.push_back(make_check("ring.well_defined", ok, grid + ", both factors shifted by random equivalences"));
  }

  // Graded commutativity and the diagnostic for its failure. With the Alexander-Whitney
  // cup the difference D = x*y - (-1)^{kl} y*x always has delta2(D) = 0; it
  // is separated either by delta1 (omega1 u omega2 vs omega2 u omega1) or,
  // when delta1(D) = 0, by the periods of the form eta with D = i2(eta).
  {
    bool ok = true, in_i2 = true, flat_ok = true;
    std::size_t by_delta1 = 0, by_periods = 0, flat_pairs = 0;
    Json wit = Json::object();
    for (std::size_t i = 0; i < g.a.size(); ++i)
      for (std::size_t j = 0; j < g.b.size(); ++j) {
        DiffClass other = skl * star(g.b[j].value, g.a[i].value);
        DiffClass diff = prod[i][j] - other;
        const bool eq = class_equal(prod[i][j], other);
        in_i2 = in_i2 && delta2(diff).is_zero();
        const bool flat = g.a[i].value.omega.is_zero() && g.b[j].value.omega.is_zero();
        if (flat) {
          ++flat_pairs;
          flat_ok = flat_ok && eq;
        }
        if (eq) continue;
        ok = false;
        Cochain d1 = delta1(diff);
        const char* kind = d1.is_zero() ? "periods" : "delta1";
        ++(d1.is_zero() ? by_periods : by_delta1);
        if (wit.contains(kind)) continue;
        Json w = {{"pair", pair_label(g.a[i], g.b[j])}, {"delta2_difference", rationals_to_json(delta2(diff).coords)}};
        if (d1.is_zero())
          w["eta"] = cochain_to_json(X, lift_through_i2(diff).representative);
        else
          w["delta1_difference"] = cochain_to_json(X, d1);
        wit[kind] = std::move(w);
      }
    const std::size_t pairs = g.a.size() * g.b.size();
    out.push_back(make_check(
        "ring.graded_commutativity", ok,
        ok ? grid + ": x*y ~ (-1)^{kl} y*x"
           : std::to_string(by_delta1 + by_periods) + " of " + std::to_string(pairs) + " pairs differ: " +
                 std::to_string(by_delta1) + " with omega1 u omega2 != (-1)^{kl} omega2 u omega1 as cochains, " +
                 std::to_string(by_periods) + " with D = i2(eta), eta closed with a non-integral period",
        ok ? Json(nullptr) : wit));
    out.push_back(make_check("ring.graded_commutativity.difference_in_im_i2", in_i2,
                             "delta2(x*y - (-1)^{kl} y*x) = 0 on the grid: every difference is i2 of a form"));
    out.push_back(make_check("ring.graded_commutativity.flat_pairs", flat_ok,
                             std::to_string(flat_pairs) + " pairs with omega1 = omega2 = 0"));
  }

  {
    bool ok = true;
    for (std::size_t i = 0; i < g.a.size(); ++i)
      for (std::size_t j = 0; j < g.b.size(); ++j)
        ok = ok && delta1(prod[i][j]) == cup(X, delta1(g.a[i].value), delta1(g.b[j].value));
    out.push_back(make_check("ring.delta1_multiplicative", ok, "delta1(x*y) = delta1(x) u delta1(y) as cochains"));
  }
  {
    bool ok = true;
    for (std::size_t i = 0; i < g.a.size(); ++i)
      for (std::size_t j = 0; j < g.b.size(); ++j)
        ok = ok && delta2(prod[i][j]) == cup_class(X, delta2(g.a[i].value), delta2(g.b[j].value));
    out.push_back(make_check("ring.delta2_multiplicative", ok, "delta2(x*y) = delta2(x) u delta2(y) in H^" +
                                                  std::to_string(k + l) + "(Z)"));
  }
  {
    bool ok = true;
    auto us = sample_generators(X, l - 1, Ring::kQmodZ);
    for (const auto& a : g.a)
      for (const auto& u : us) {
        auto lhs = star(a.value, i1(x, u));
        auto rhs = sk * i1(x, cup_class(X, delta2(a.value), u));
        ok = ok && class_equal(lhs, rhs);
      }
    out.push_back(make_check("ring.i1_module", ok,
                             std::to_string(g.a.size() * us.size()) + " pairs: x*i1(u) ~ (-1)^k i1(delta2(x) u u)"));
  }
  {
    bool ok = true;
    std::vector<Cochain> thetas;
    for (int n = 0; n < 3; ++n) thetas.push_back(rng.rational_cochain(X, l - 1));
    for (const auto& a : g.a)
      for (const auto& th : thetas) {
        auto lhs = star(a.value, i2(x, {th}));
        auto rhs = sk * i2(x, {cup(X, delta1(a.value), th)});
        ok = ok && class_equal(lhs, rhs);
      }
    out.push_back(make_check("ring.i2_module", ok,
                             std::to_string(g.a.size() * thetas.size()) +
                                 " pairs: x*i2(theta) ~ (-1)^k i2(delta1(x) u theta)"));
  }
  {
    bool ok = true;
    auto third = sample_classes(x, 1, seed + 2, 4);
    const std::size_t n = 4;
    std::size_t triples = 0;
    for (std::size_t i = 0; i < std::min(n, g.a.size()); ++i)
      for (std::size_t j = 0; j < std::min(n, g.b.size()); ++j)
        for (std::size_t m = 0; m < std::min(n, third.size()); ++m) {
          ++triples;
          ok = ok && class_equal(star(prod[i][j], third[m].value),
                                 star(g.a[i].value, star(g.b[j].value, third[m].value)));
        }
    out.push_back(make_check("ring.associativity", ok, std::to_string(triples) + " triples with a degree-1 third factor"));
  }
  {
    bool ok = true;
    for (std::size_t i = 0; i + 1 < g.a.size(); ++i)
      for (std::size_t j = 0; j + 1 < g.b.size(); ++j) {
        ok = ok && class_equal(star(g.a[i].value + g.a[i + 1].value, g.b[j].value), prod[i][j] + prod[i + 1][j]);
        ok = ok && class_equal(star(g.a[i].value, g.b[j].value + g.b[j + 1].value), prod[i][j] + prod[i][j + 1]);
      }
    out.push_back(make_check("ring.biadditivity", ok, "left and right additivity on adjacent grid entries"));
  }
  {
    bool ok = true;
    Json names = Json::array();
    for (const auto& [name, phi] : standard_maps(t)) {
      names.push_back(name);
      if (phi.target() == x) {
        for (std::size_t i = 0; i < std::min<std::size_t>(6, g.a.size()); ++i)
          for (std::size_t j = 0; j < std::min<std::size_t>(6, g.b.size()); ++j)
            ok = ok && class_equal(pullback(phi, prod[i][j]),
                                   star(pullback(phi, g.a[i].value), pullback(phi, g.b[j].value)));
      } else {
        auto pa = sample_classes(phi.target(), k, seed, 4);
        auto pb = sample_classes(phi.target(), l, seed + 1, 4);
        for (const auto& a : pa)
          for (const auto& b : pb)
            ok = ok && class_equal(pullback(phi, star(a.value, b.value)),
                                   star(pullback(phi, a.value), pullback(phi, b.value)));
      }
    }
    out.push_back(make_check("ring.naturality", ok, "phi^*(x*y) ~ phi^*x * phi^*y", {{"maps", names}}));
  }

  // Uniqueness mechanism: a product differing from * by D must have D in
  // ker delta1 and vanishing on i2-images. Against * itself this is
  // immediate; against the transposed product it is equivalent to graded commutativity.
  {
    std::vector<Cochain> thetas;
    for (int n = 0; n < 2; ++n) thetas.push_back(rng.rational_cochain(X, l - 1));
    for (bool transposed : {false, true}) {
      auto other = [&](const DiffClass& a, const DiffClass& b) {
        return transposed ? skl * star(b, a) : star(a, b);
      };
      bool kernel = true, on_i2 = true;
      for (std::size_t i = 0; i < g.a.size(); ++i) {
        for (std::size_t j = 0; j < g.b.size(); ++j)
          kernel = kernel && delta1(prod[i][j] - other(g.a[i].value, g.b[j].value)).is_zero();
        for (const auto& th : thetas) {
          DiffClass y = i2(x, {th});
          on_i2 = on_i2 && class_equal(star(g.a[i].value, y), other(g.a[i].value, y));
        }
      }
      const std::string name = transposed ? "ring.uniqueness.transposed" : "ring.uniqueness.self";
      out.push_back(make_check(name + ".difference_in_ker_delta1", kernel,
                               transposed ? "D = x*y - (-1)^{kl} y*x" : "D = x*y - x*y"));
      out.push_back(make_check(name + ".vanishes_on_i2", on_i2, "D(x, i2(theta)) ~ 0"));
    }
  }
  return out;
}

}  // namespace charrig
