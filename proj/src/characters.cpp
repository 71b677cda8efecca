#include "charrig/characters.hpp"

namespace charrig {

namespace {

const KernelBasis& cycle_basis(const Complex& x, int k) { return homology(x, k - 1).cycles; }

Rational pair_with(const RatVector& f, const IntVector& coords) {
  Rational acc = 0;
  for (std::size_t m = 0; m < f.size(); ++m)
    if (sgn(coords[m]) != 0) acc += Rational(coords[m]) * f[m];
  return acc;
}

bool is_cycle(const Complex& x, int j, const IntVector& z) {
  return j <= 0 || is_zero(multiply(x.boundary(j), z));
}

RatVector reduced(RatVector f) {
  for (auto& v : f) v = frac(v);
  return f;
}

void require_degree(int k) {
  if (k < 1) throw DegreeError("characters need degree k >= 1, got " + std::to_string(k));
}

}  // namespace

bool is_character(const Complex& x, int k, const RatVector& f, const Cochain& omega) {
  if (k < 1 || omega.degree != k || omega.ring == Ring::kQmodZ) return false;
  const auto& basis = cycle_basis(x, k);
  if (f.size() != basis.basis.cols() || omega.values.size() != x.count(k)) return false;
  if (!is_integral_form(x, change_ring(omega, Ring::kQ))) return false;
  const ZMatrix& b = x.boundary(k);
  for (std::size_t a = 0; a < b.cols(); ++a) {
    Rational v = pair_with(f, multiply(basis.coords, b.column(a)));
    if (!is_integer(omega.values[a] - v)) return false;
  }
  return true;
}

Character make_character(ComplexPtr x, int k, RatVector f, Cochain omega) {
  if (!x) throw InvalidArgument("null complex");
  require_degree(k);
  if (omega.ring == Ring::kQmodZ) throw RingError("omega must be a rational cochain");
  omega = change_ring(omega, Ring::kQ);
  f = reduced(std::move(f));
  if (!is_character(*x, k, f, omega))
    throw InvalidArgument("not a character: omega must be closed with integral periods and agree with f on boundaries");
  return {std::move(x), k, std::move(f), std::move(omega)};
}

Character zero_character(ComplexPtr x, int k) {
  require_degree(k);
  const Complex& X = *x;
  return {std::move(x), k, RatVector(cycle_basis(X, k).basis.cols()), Cochain::zero(X, k, Ring::kQ)};
}

Character operator+(const Character& a, const Character& b) {
  if (a.space != b.space || a.k != b.k) throw MismatchError("characters on different complexes or degrees");
  RatVector f(a.f.size());
  for (std::size_t m = 0; m < f.size(); ++m) f[m] = frac(a.f[m] + b.f[m]);
  return {a.space, a.k, std::move(f), a.omega + b.omega};
}

Character operator-(const Character& a) {
  RatVector f(a.f.size());
  for (std::size_t m = 0; m < f.size(); ++m) f[m] = frac(-a.f[m]);
  return {a.space, a.k, std::move(f), -a.omega};
}

Character operator-(const Character& a, const Character& b) { return a + (-b); }

Rational evaluate(const Character& ch, const IntVector& z) {
  const Complex& x = *ch.space;
  if (z.size() != x.count(ch.k - 1)) throw ShapeError("cycle length does not match the complex");
  if (!is_cycle(x, ch.k - 1, z)) throw NotACycle("characters are evaluated on cycles");
  return frac(pair_with(ch.f, multiply(cycle_basis(x, ch.k).coords, z)));
}

Cochain character_lift(const Character& ch, LiftStrategy s) {
  const Complex& x = *ch.space;
  const ZMatrix& coords = cycle_basis(x, ch.k).coords;
  RatVector t(x.count(ch.k - 1));
  for (std::size_t m = 0; m < ch.f.size(); ++m) {
    const Rational lifted = lift_value(ch.f[m], s);
    if (sgn(lifted) == 0) continue;
    for (std::size_t i = 0; i < t.size(); ++i)
      if (sgn(coords(m, i)) != 0) t[i] += lifted * Rational(coords(m, i));
  }
  return Cochain::rational(ch.k - 1, std::move(t));
}

namespace {

Cochain integral_part(const Character& ch, const Cochain& t) {
  Cochain c = ch.omega - coboundary(*ch.space, t);
  IntVector ints;
  try {
    ints = c.integer_values();
  } catch (const MismatchError&) {
    CHARRIG_ASSERT(false, "omega - dT is not integral for a lift of a character");
  }
  return Cochain::integral(ch.k, ints);
}

}  // namespace

CohomologyClass delta2_via_lift(const Character& ch, LiftStrategy s) {
  Cochain c = integral_part(ch, character_lift(ch, s));
  CHARRIG_ASSERT(is_cocycle(*ch.space, c), "omega - dT is not closed");
  return cohomology_class(*ch.space, c);
}

Character phi_direct(const DiffClass& x) {
  const auto& basis = cycle_basis(*x.space, x.k).basis;
  RatVector f(basis.cols());
  for (std::size_t m = 0; m < f.size(); ++m) f[m] = frac(evaluate(x.h, basis.column(m)));
  return {x.space, x.k, std::move(f), x.omega};
}

DiffClass phi_inverse(const Character& ch) {
  Cochain t = character_lift(ch);
  Cochain c = integral_part(ch, t);
  return make_diff_class(ch.space, std::move(c), std::move(t), ch.omega);
}

Character hom_i1(const ComplexPtr& x, const CohomologyClass& u) {
  if (u.ring != Ring::kQmodZ) throw RingError("i1 takes a Q/Z class");
  const int k = u.degree + 1;
  require_degree(k);
  const Homology& h = homology(*x, u.degree);
  const auto& basis = h.cycles.basis;
  RatVector f(basis.cols());
  for (std::size_t m = 0; m < f.size(); ++m) {
    IntVector cls = h.class_of(basis.column(m));
    f[m] = frac(pair_with(u.coords, cls));
  }
  return {x, k, std::move(f), Cochain::zero(*x, k, Ring::kQ)};
}

Character hom_i2(const ComplexPtr& x, int k, const QuotientForm& theta) {
  require_degree(k);
  const Cochain& t = theta.representative;
  if (t.degree != k - 1) throw DegreeError("theta must have degree k-1");
  const auto& basis = cycle_basis(*x, k).basis;
  RatVector f(basis.cols());
  for (std::size_t m = 0; m < f.size(); ++m) f[m] = frac(evaluate(t, basis.column(m)));
  return {x, k, std::move(f), coboundary(*x, change_ring(t, Ring::kQ))};
}

Character pullback(const SimplicialMap& phi, const Character& ch) {
  if (phi.target() != ch.space) throw MismatchError("character does not live on the map's target");
  const ComplexPtr& y = phi.source();
  const auto& basis = cycle_basis(*y, ch.k).basis;
  RatVector f(basis.cols());
  for (std::size_t m = 0; m < f.size(); ++m) f[m] = evaluate(ch, phi.push_chain(ch.k - 1, basis.column(m)));
  Cochain omega = Cochain::rational(ch.k, phi.pull_cochain(ch.k, ch.omega.values));
  return {y, ch.k, std::move(f), std::move(omega)};
}

bool PhiGood::consistent() const {
  for (const auto& [d, v] : by_depth)
    if (v != value) return false;
  return !by_depth.empty();
}

PhiGood phi_good(const SubdivisionTower& t, const std::vector<Neighborhood>& us, const DiffClass& x,
                 const IntVector& z) {
  if (x.space != t.base()) throw MismatchError("class does not live on the tower's base");
  const int j = x.k - 1;
  if (z.size() != x.space->count(j)) throw ShapeError("cycle length does not match the complex");
  if (!is_cycle(*x.space, j, z)) throw NotACycle("phi_good evaluates on cycles");
  if (us.empty()) throw GeometryBudgetExceeded("no good neighbourhood of the cycle");
  PhiGood out;
  for (const auto& u : us) {
    if (!u.good()) throw InvalidArgument("neighbourhood failed the vanishing check");
    const int d = u.depth;
    DiffClass local = make_diff_class(u.space, restrict_cochain(u, t.pull(d, x.c)),
                                      restrict_cochain(u, t.pull(d, x.h)),
                                      restrict_cochain(u, t.pull(d, x.omega)));
    QuotientForm theta = lift_through_i2(local);
    IntVector zu = restrict_chain(u, j, t.subdivide(0, d, j, z));
    out.by_depth.emplace_back(d, frac(evaluate(theta.representative, zu)));
  }
  out.value = out.by_depth.front().second;
  return out;
}

PhiGood phi_good(const SubdivisionTower& t, const DiffClass& x, const IntVector& z, int max_depth) {
  const int j = x.k - 1;
  return phi_good(t, good_neighborhoods(t, 0, j, z, j, max_depth), x, z);
}

std::vector<Character> sample_characters(const ComplexPtr& x, int k, std::uint64_t seed,
                                         std::size_t count) {
  require_degree(k);
  const Complex& X = *x;
  Sampler rng(seed * 0x2545F4914F6CDD1DULL + static_cast<std::uint64_t>(k) + 1);
  const auto& gens = integral_cohomology(X, k).generators;
  const auto& basis = cycle_basis(X, k).basis;
  std::vector<Character> out;
  for (std::size_t n = 0; n < count; ++n) {
    Cochain t = rng.rational_cochain(X, k - 1);
    IntVector c(X.count(k));
    for (std::size_t g = 0; g < gens.cols(); ++g) {
      const auto coeff = rng.between(-1, 1);
      for (std::size_t i = 0; i < c.size(); ++i) c[i] += coeff * gens(i, g);
    }
    Cochain omega = coboundary(X, t) + Cochain::rational(k, to_rational(c));
    RatVector f(basis.cols());
    for (std::size_t m = 0; m < f.size(); ++m) f[m] = evaluate(t, basis.column(m));
    out.push_back(make_character(x, k, std::move(f), std::move(omega)));
  }
  return out;
}

Json character_to_json(const Character& ch) {
  Json f = Json::array();
  for (std::size_t m = 0; m < ch.f.size(); ++m)
    if (sgn(ch.f[m]) != 0) f.push_back(Json::array({m, to_string(ch.f[m])}));
  return {{"degree", ch.k}, {"f", f}, {"omega", cochain_to_json(*ch.space, ch.omega)}};
}

Character character_from_json(const ComplexPtr& x, const Json& doc) {
  try {
    const int k = doc.at("degree").get<int>();
    require_degree(k);
    RatVector f(cycle_basis(*x, k).basis.cols());
    for (const auto& entry : doc.at("f")) {
      auto m = entry.at(0).get<std::size_t>();
      if (m >= f.size()) throw ParseError("cycle-basis index " + std::to_string(m) + " out of range");
      f[m] = parse_rational(entry.at(1).get<std::string>());
    }
    Cochain omega = cochain_from_json(*x, doc.at("omega"));
    return make_character(x, k, std::move(f), std::move(omega));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed character document: ") + e.what());
  }
}

// --- Equivalence suite --------------------------------------------------------

namespace {

// u in Hom(H_{k-1}, Q/Z) recovered from a flat character by evaluating on
// homology generators.
CohomologyClass recover_flat(const Character& ch) {
  const Homology& h = homology(*ch.space, ch.k - 1);
  RatVector v(h.generators.cols());
  for (std::size_t g = 0; g < v.size(); ++g) v[g] = evaluate(ch, h.generators.column(g));
  return make_class(*ch.space, ch.k - 1, Ring::kQmodZ, std::move(v));
}

std::vector<CohomologyClass> flat_samples(const Complex& x, int k) {
  std::vector<CohomologyClass> qz = sample_generators(x, k - 1, Ring::kQmodZ);
  const auto& orders = homology(x, k - 1).group.orders;
  RatVector all(orders.size());
  for (std::size_t g = 0; g < all.size(); ++g)
    all[g] = orders[g] == 0 ? Rational(2, 5) : Rational(1) / Rational(orders[g]);
  if (!all.empty()) qz.push_back(make_class(x, k - 1, Ring::kQmodZ, all));
  return qz;
}

Json rational_json(const Rational& q) { return to_string(q); }

}  // namespace

CheckList check_phi(const SubdivisionTower& t, int k, std::uint64_t seed, int max_depth) {
  const ComplexPtr& x = t.base();
  const Complex& X = *x;
  CheckList out;
  Sampler rng(seed * 7919u + static_cast<std::uint64_t>(k));
  auto samples = sample_classes(x, k, seed);
  auto chars = sample_characters(x, k, seed);
  auto qz = flat_samples(X, k);

  std::vector<Character> direct;
  for (const auto& s : samples) direct.push_back(phi_direct(s.value));

  {
    bool ok = true;
    for (const auto& ch : direct) ok = ok && is_character(X, k, ch.f, ch.omega);
    out.push_back(make_check("phi.direct_is_character", ok,
                             std::to_string(direct.size()) + " sampled classes"));
  }
  {
    bool ok = true;
    for (std::size_t i = 0; i < samples.size(); ++i) {
      Cochain b = rng.integral_cochain(X, k - 1);
      Cochain s = k >= 2 ? rng.rational_cochain(X, k - 2) : Cochain::zero(X, k - 2, Ring::kQ);
      ok = ok && phi_direct(shift(samples[i].value, b, s)) == direct[i];
    }
    out.push_back(make_check("phi.constant_on_classes", ok, "representatives shifted by (db, -b + ds, 0)"));
  }
  {
    bool ok = true;
    Json wit = nullptr;
    for (std::size_t i = 0; i < samples.size(); ++i) {
      DiffClass back = phi_inverse(direct[i]);
      if (!class_equal(back, samples[i].value)) {
        ok = false;
        if (wit.is_null()) wit = {{"class", samples[i].label}};
      }
    }
    out.push_back(make_check("phi.round_trip_classes", ok,
                             std::to_string(samples.size()) + " classes: phi_inverse(phi_direct(x)) ~ x", wit));
  }
  {
    bool ok = true;
    for (const auto& ch : chars) ok = ok && phi_direct(phi_inverse(ch)) == ch;
    for (const auto& ch : direct) ok = ok && phi_direct(phi_inverse(ch)) == ch;
    out.push_back(make_check("phi.round_trip_characters", ok,
                             std::to_string(chars.size() + direct.size()) +
                                 " characters: phi_direct(phi_inverse(ch)) = ch"));
  }

  // phi_good against phi_direct on every (class, cycle) pair.
  const auto cycles = sample_cycles(X, k - 1);
  {
    bool ok = true, nbhd_ok = true;
    std::size_t pairs = 0;
    Json depths = Json::object();
    Json wit = nullptr;
    std::string detail;
    for (const auto& [name, z] : cycles) {
      std::vector<Neighborhood> us;
      try {
        us = good_neighborhoods(t, 0, k - 1, z, k - 1, max_depth);
      } catch (const Error& e) {
        detail = e.what();
      }
      Json ds = Json::array();
      for (const auto& u : us) {
        ds.push_back(u.depth);
        nbhd_ok = nbhd_ok && nonvanishing_cohomology(*u.space, k - 1).empty();
      }
      depths[name] = ds;
      if (us.empty()) {
        ok = false;
        if (detail.empty()) detail = "no good neighbourhood for " + name;
        continue;
      }
      for (std::size_t i = 0; i < samples.size(); ++i) {
        PhiGood g = phi_good(t, us, samples[i].value, z);
        const Rational expect = evaluate(direct[i], z);
        ++pairs;
        if (!(g.consistent() && g.value == expect)) {
          ok = false;
          if (wit.is_null())
            wit = {{"class", samples[i].label}, {"cycle", name}, {"phi_good", rational_json(g.value)},
                   {"phi_direct", rational_json(expect)}};
        }
      }
    }
    out.push_back(make_check("phi.good_agrees_with_direct", ok,
                             detail.empty() ? std::to_string(pairs) + " (class, cycle) pairs on every good depth"
                                            : detail,
                             wit.is_null() ? Json{{"depths", depths}} : wit));
    out.push_back(make_check("phi.good_neighborhoods_vanish", nbhd_ok,
                             "H^j(U; Z) = 0 for j > " + std::to_string(k - 1) + " on every neighbourhood used",
                             {{"depths", depths}}));
  }
  if (X.count(k) > 0) {
    const IntVector z = X.boundary(k).column(0);
    bool ok = true;
    try {
      auto us = good_neighborhoods(t, 0, k - 1, z, k - 1, max_depth);
      for (const auto& s : samples) ok = ok && phi_good(t, us, s.value, z).value == frac(s.value.omega.values[0]);
    } catch (const Error&) {
      ok = false;
    }
    out.push_back(make_check("phi.good_on_boundary", ok,
                             "phi_good(x, de) = omega(e) mod 1 for e = [" + simplex_key(X.simplex(k, 0)) + "]"));
  } else {
    out.push_back({"phi.good_on_boundary", CheckStatus::kSkipped, "no k-simplices", nullptr});
  }

  // Naturality under the identity, the last-vertex map Sd X -> X, a
  // vertex inclusion and the constant map to a point.
  {
    bool ok = true;
    Json names = Json::array();
    for (const auto& [name, phi] : standard_maps(t)) {
      names.push_back(name);
      if (phi.target() == x) {
        for (std::size_t i = 0; i < samples.size(); ++i)
          ok = ok && phi_direct(pullback(phi, samples[i].value)) == pullback(phi, direct[i]);
      } else {
        for (const auto& s : sample_classes(phi.target(), k, seed, 4))
          ok = ok && phi_direct(pullback(phi, s.value)) == pullback(phi, phi_direct(s.value));
      }
    }
    out.push_back(make_check("property.naturality", ok, "phi_direct commutes with pullback", {{"maps", names}}));
  }

  // Compatibility with i1, i2 and delta1.
  {
    bool ok = true;
    for (const auto& u : qz)
      for (auto s : {LiftStrategy::kUnit, LiftStrategy::kCentered})
        ok = ok && phi_direct(i1(x, u, s)) == hom_i1(x, u);
    out.push_back(make_check("property.compatible.i1", ok,
                             std::to_string(qz.size()) + " Q/Z classes, two lift strategies"));
  }
  {
    bool ok = true;
    for (int n = 0; n < 6; ++n) {
      QuotientForm theta{rng.rational_cochain(X, k - 1)};
      ok = ok && phi_direct(i2(x, theta)) == hom_i2(x, k, theta);
    }
    out.push_back(make_check("property.compatible.i2", ok, "6 random forms"));
  }
  {
    bool ok = true;
    for (std::size_t i = 0; i < samples.size(); ++i) ok = ok && direct[i].omega == delta1(samples[i].value);
    out.push_back(make_check("property.compatible.delta1", ok, "omega of phi_direct(x) is delta1(x)"));
  }
  // delta2 through the lifted character.
  {
    bool ok = true;
    for (std::size_t i = 0; i < samples.size(); ++i) ok = ok && delta2_via_lift(direct[i]) == delta2(samples[i].value);
    out.push_back(make_check("property.delta2_lift", ok, "delta2_via_lift(phi_direct(x)) = delta2(x)"));
  }
  {
    bool ok = true;
    for (const auto* list : {&chars, &direct})
      for (const auto& ch : *list)
        ok = ok && delta2_via_lift(ch, LiftStrategy::kUnit) == delta2_via_lift(ch, LiftStrategy::kCentered);
    out.push_back(make_check("delta2_via_lift.strategy_independent", ok, "lifts to [0,1) and (-1/2,1/2]"));
  }
  {
    bool ok = true;
    Json wit = Json::array();
    for (const auto& u : qz) {
      auto lhs = delta2_via_lift(hom_i1(x, u));
      ok = ok && lhs == make_class(X, k, Ring::kZ, (-bockstein(X, u)).coords);
      wit.push_back({{"u", rationals_to_json(u.coords)}, {"delta2", rationals_to_json(lhs.coords)}});
    }
    out.push_back(make_check("delta2_via_lift.torsion_identity", ok,
                             "delta2(i1(u)) = -B(u) in H^" + std::to_string(k) + "(Z) = " +
                                 describe_cohomology(X, k, Ring::kZ),
                             wit));
  }

  // Both rows of the five-lemma ladder.
  std::vector<Character> flat;
  std::vector<DiffClass> flat_classes;
  for (const auto& s : samples) {
    DiffClass y = s.value - delta1_preimage(x, delta1(s.value));
    flat_classes.push_back(y);
    flat.push_back(phi_direct(y));
  }
  for (const auto& ch : chars) flat.push_back(ch - phi_direct(delta1_preimage(x, ch.omega)));
  auto forms = integral_form_generators(X, k);
  {
    bool inj = true, comp = true, ker = true, onto = true;
    for (const auto& u : qz) {
      Character ch = hom_i1(x, u);
      inj = inj && recover_flat(ch) == u;
      comp = comp && ch.omega.is_zero();
    }
    for (const auto& ch : flat) ker = ker && ch.omega.is_zero() && hom_i1(x, recover_flat(ch)) == ch;
    for (const auto& w : forms) {
      Character ch = phi_direct(delta1_preimage(x, w));
      onto = onto && is_character(X, k, ch.f, ch.omega) && ch.omega == change_ring(w, Ring::kQ);
    }
    out.push_back(make_check("ladder.hom_row.i1_injective", inj, "u recovered from i1(u) on homology generators"));
    out.push_back(make_check("ladder.hom_row.delta1_after_i1", comp, "i1(u) is flat"));
    out.push_back(make_check("ladder.hom_row.ker_delta1_in_im_i1", ker,
                             std::to_string(flat.size()) + " flat characters are i1 of their restriction"));
    out.push_back(make_check("ladder.hom_row.delta1_onto", onto,
                             std::to_string(forms.size()) + " integral form generators"));
  }
  {
    bool inj = true, comp = true, ker = true, onto = true;
    const auto zero = zero_class(x, k);
    for (const auto& u : qz) {
      DiffClass v = i1(x, u);
      inj = inj && (u.is_zero() || !class_equal(v, zero));
      comp = comp && delta1(v).is_zero();
    }
    for (std::size_t i = 0; i < flat_classes.size(); ++i)
      ker = ker && class_equal(i1(x, recover_flat(flat[i])), flat_classes[i]);
    for (const auto& w : forms) onto = onto && delta1(delta1_preimage(x, w)) == change_ring(w, Ring::kQ);
    out.push_back(make_check("ladder.cocycle_row.i1_injective", inj, "nonzero u gives a nonzero class"));
    out.push_back(make_check("ladder.cocycle_row.delta1_after_i1", comp, "delta1 i1 = 0"));
    out.push_back(make_check("ladder.cocycle_row.ker_delta1_in_im_i1", ker,
                             std::to_string(flat_classes.size()) + " flat classes lifted through i1"));
    out.push_back(make_check("ladder.cocycle_row.delta1_onto", onto,
                             std::to_string(forms.size()) + " integral form generators"));
  }

  // Evaluation through the normalized pseudomanifold.
  if (k - 1 < X.dimension()) {
    bool ok = true;
    std::size_t pairs = 0;
    std::string detail;
    for (const auto& [name, z] : cycles) {
      try {
        Normalization n = normalize_cycle(t, k - 1, z, max_depth);
        const IntVector pushed = n.p.pushed();
        for (std::size_t i = 0; i < samples.size(); ++i) {
          const DiffClass& s = samples[i].value;
          const Cochain omega_d = t.pull(n.depth, s.omega);
          const Cochain h_d = t.pull(n.depth, s.h);
          const Rational rhs = frac(evaluate(omega_d, n.witness) + evaluate(h_d, pushed));
          ok = ok && rhs == evaluate(direct[i], z);
          ++pairs;
        }
      } catch (const Error& e) {
        ok = false;
        detail = name + ": " + e.what();
      }
    }
    out.push_back(make_check("property.pseudomanifold_evaluation", ok,
                             detail.empty() ? std::to_string(pairs) + " pairs: f(z) = omega(b) + f(P)" : detail));
  } else {
    out.push_back({"property.pseudomanifold_evaluation", CheckStatus::kSkipped, "cycle degree equals the ambient dimension", nullptr});
  }
  return out;
}

}  // namespace charrig
