#include "charrig/diffcocycle.hpp"

#include "charrig/serialize.hpp"

namespace charrig {

namespace {

void require_same(const DiffClass& a, const DiffClass& b) {
  if (a.space != b.space)
    throw MismatchError("differential classes live on different complexes");
  if (a.k != b.k)
    throw MismatchError("differential classes of degrees " + std::to_string(a.k) + " and " +
                        std::to_string(b.k));
}

Cochain rational_coboundary(const Complex& x, int degree, const RatVector& v) {
  return coboundary(x, Cochain::rational(degree, v));
}

CohomologyClass reduced(const Complex& x, const CohomologyClass& u) {
  return make_class(x, u.degree, u.ring, u.coords);
}

}  // namespace

DiffClass make_diff_class(ComplexPtr x, Cochain c, Cochain h, Cochain omega) {
  if (!x) throw InvalidArgument("null complex");
  const int k = c.degree;
  if (k < 1) throw DegreeError("differential cocycles need degree k >= 1, got " + std::to_string(k));
  if (h.degree != k - 1 || omega.degree != k)
    throw DegreeError("components of a degree-" + std::to_string(k) +
                      " differential cocycle have degrees (k, k-1, k)");
  if (c.ring != Ring::kZ) throw RingError("c must be an integral cochain");
  if (h.ring == Ring::kQmodZ || omega.ring == Ring::kQmodZ)
    throw RingError("h and omega must be rational cochains");
  h = change_ring(h, Ring::kQ);
  omega = change_ring(omega, Ring::kQ);
  require_shape(*x, c);
  require_shape(*x, h);
  require_shape(*x, omega);
  if (!is_cocycle(*x, c)) throw NotACycle("c is not a cocycle");
  if (!(coboundary(*x, h) == omega - change_ring(c, Ring::kQ)))
    throw InvalidArgument("dh != omega - c");
  return {std::move(x), k, std::move(c), std::move(h), std::move(omega)};
}

DiffClass zero_class(ComplexPtr x, int k) {
  if (k < 1) throw DegreeError("differential cocycles need degree k >= 1");
  const Complex& X = *x;
  return {std::move(x), k, Cochain::zero(X, k, Ring::kZ), Cochain::zero(X, k - 1, Ring::kQ),
          Cochain::zero(X, k, Ring::kQ)};
}

bool is_diff_cocycle(const DiffClass& x) {
  try {
    make_diff_class(x.space, x.c, x.h, x.omega);
    return true;
  } catch (const Error&) {
    return false;
  }
}

DiffClass operator+(const DiffClass& a, const DiffClass& b) {
  require_same(a, b);
  return {a.space, a.k, a.c + b.c, a.h + b.h, a.omega + b.omega};
}

DiffClass operator-(const DiffClass& a) { return {a.space, a.k, -a.c, -a.h, -a.omega}; }

DiffClass operator-(const DiffClass& a, const DiffClass& b) { return a + (-b); }

DiffClass operator*(const Integer& n, const DiffClass& a) {
  return {a.space, a.k, n * a.c, n * a.h, n * a.omega};
}

DiffClass shift(const DiffClass& x, const Cochain& b, const Cochain& s) {
  const Complex& X = *x.space;
  if (b.ring != Ring::kZ || b.degree != x.k - 1) throw RingError("b must be an integral (k-1)-cochain");
  if (s.degree != x.k - 2) throw DegreeError("s must have degree k-2");
  DiffClass y = x;
  y.c = x.c + coboundary(X, b);
  y.h = x.h - change_ring(b, Ring::kQ) + rational_coboundary(X, s.degree, s.values);
  return y;
}

std::optional<EquivalenceWitness> equivalence_witness(const DiffClass& x, const DiffClass& y) {
  require_same(x, y);
  const Complex& X = *x.space;
  if (!(x.omega == y.omega)) return std::nullopt;
  const int k = x.k;
  Cochain dh = x.h - y.h;
  const auto& cycles = homology(X, k - 1).cycles;
  IntVector periods(cycles.basis.cols());
  for (std::size_t m = 0; m < periods.size(); ++m) {
    Rational p = evaluate(dh, cycles.basis.column(m));
    if (!is_integer(p)) return std::nullopt;
    periods[m] = p.get_num();
  }
  // T: integral cochain agreeing with dh on cycles; dh - T vanishes on
  // cycles and is therefore exact over Q.
  IntVector t = multiply_transposed(cycles.coords, periods);
  RatVector rest = (dh - Cochain::rational(k - 1, to_rational(t))).values;
  auto s = solve_rational(coboundary_snf(X, k - 2), rest);
  CHARRIG_ASSERT(s.has_value(), "dh - T vanishes on cycles but is not exact");
  EquivalenceWitness w;
  for (auto& v : t) v = -v;
  w.b = Cochain::integral(k - 1, t);
  w.s = Cochain::rational(k - 2, *s);
  CHARRIG_ASSERT(x.c - y.c == coboundary(X, w.b), "equivalence witness fails on c");
  return w;
}

bool class_equal(const DiffClass& x, const DiffClass& y) {
  return equivalence_witness(x, y).has_value();
}

DiffClass i1(const ComplexPtr& x, const CohomologyClass& u, LiftStrategy s) {
  if (u.ring != Ring::kQmodZ) throw RingError("i1 expects a Q/Z class");
  const int k = u.degree + 1;
  RatVector t = representative_lift(*x, u, s);
  Cochain h = Cochain::rational(k - 1, t);
  Cochain c = Cochain::integral(k, to_integer(coboundary(*x, h).values));
  return {x, k, -c, h, Cochain::zero(*x, k, Ring::kQ)};
}

DiffClass i2(const ComplexPtr& x, const QuotientForm& theta) {
  const Cochain& t = theta.representative;
  if (t.ring != Ring::kQ) throw RingError("i2 expects a rational form");
  require_shape(*x, t);
  const int k = t.degree + 1;
  return {x, k, Cochain::zero(*x, k, Ring::kZ), t, coboundary(*x, t)};
}

Cochain delta1(const DiffClass& x) { return x.omega; }

CohomologyClass delta2(const DiffClass& x) { return cohomology_class(*x.space, x.c); }

DiffClass pullback(const SimplicialMap& phi, const DiffClass& x) {
  if (phi.target() != x.space) throw MismatchError("class does not live on the map's target");
  auto pull = [&](const Cochain& a) {
    return Cochain{a.ring, a.degree, phi.pull_cochain(a.degree, a.values)};
  };
  return {phi.source(), x.k, pull(x.c), pull(x.h), pull(x.omega)};
}

CohomologyClass pullback(const SimplicialMap& phi, const CohomologyClass& u) {
  const Complex& X = *phi.target();
  const Complex& Y = *phi.source();
  if (u.ring == Ring::kQmodZ) {
    RatVector t = representative_lift(X, u);
    return cohomology_class(Y, Cochain::mod_one(u.degree, phi.pull_cochain(u.degree, t)));
  }
  Cochain rep = representative(X, u);
  rep.values = phi.pull_cochain(u.degree, rep.values);
  return cohomology_class(Y, rep);
}

QuotientForm lift_through_i2(const DiffClass& x) {
  const Complex& X = *x.space;
  auto g = delta2(x);
  if (!g.is_zero())
    throw NotInImage("delta2 of the class is nonzero in H^" + std::to_string(x.k) + "(Z) = " +
                     describe_cohomology(X, x.k, Ring::kZ));
  auto b = solve_integer(coboundary_snf(X, x.k - 1), x.c.integer_values());
  CHARRIG_ASSERT(b.has_value(), "integral coboundary without an integral primitive");
  return {x.h + Cochain::rational(x.k - 1, to_rational(*b))};
}

DiffClass delta2_preimage(const ComplexPtr& x, const CohomologyClass& g) {
  if (g.ring != Ring::kZ) throw RingError("delta2 lands in integral cohomology");
  const Complex& X = *x;
  const int k = g.degree;
  if (k < 1) throw DegreeError("differential cocycles need degree k >= 1");
  Cochain c = representative(X, g);
  Cochain omega = representative(X, r_map(X, g));
  auto h = solve_rational(coboundary_snf(X, k - 1), (omega - change_ring(c, Ring::kQ)).values);
  CHARRIG_ASSERT(h.has_value(), "w - c is not exact for a rational representative w of [c]");
  return make_diff_class(x, c, Cochain::rational(k - 1, *h), omega);
}

DiffClass delta1_preimage(const ComplexPtr& x, const Cochain& w) {
  const Complex& X = *x;
  if (!is_integral_form(X, w)) throw NotInImage("form is not closed with integral periods");
  const int k = w.degree;
  if (k < 1) throw DegreeError("differential cocycles need degree k >= 1");
  auto q = s_map(X, w);
  const auto& hz = integral_cohomology(X, k);
  RatVector coords(hz.group.orders.size());
  for (std::size_t i = 0; i < hz.free_slots.size(); ++i) coords[hz.free_slots[i]] = q.coords[i];
  Cochain c = representative(X, make_class(X, k, Ring::kZ, coords));
  Cochain omega = change_ring(w, Ring::kQ);
  auto h = solve_rational(coboundary_snf(X, k - 1), (omega - change_ring(c, Ring::kQ)).values);
  CHARRIG_ASSERT(h.has_value(), "w - c is not exact");
  return make_diff_class(x, c, Cochain::rational(k - 1, *h), omega);
}

Rational holonomy(const DiffClass& x, const IntVector& z) {
  const Complex& X = *x.space;
  if (z.size() != X.count(x.k - 1)) throw ShapeError("cycle has the wrong length");
  if (!is_zero(multiply(X.boundary(x.k - 1), z))) throw NotACycle("chain is not a cycle");
  return frac(evaluate(x.h, z));
}

// --- Sampling ---------------------------------------------------------------

Rational Sampler::small_rational() {
  std::int64_t num = between(1, 2) * (below(2) ? 1 : -1);
  std::int64_t den = between(1, 3);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Cochain Sampler::rational_cochain(const Complex& x, int degree) {
  Cochain c = Cochain::zero(x, degree, Ring::kQ);
  for (auto& v : c.values)
    if (below(3) == 0) v = small_rational();
  return c;
}

Cochain Sampler::integral_cochain(const Complex& x, int degree) {
  Cochain c = Cochain::zero(x, degree, Ring::kZ);
  for (auto& v : c.values)
    if (below(3) == 0) v = below(2) ? 1 : -1;
  return c;
}

std::vector<SampleClass> sample_classes(const ComplexPtr& x, int k, std::uint64_t seed,
                                        std::size_t minimum) {
  const Complex& X = *x;
  Sampler rng(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(k)));
  std::vector<SampleClass> out;

  const auto& hj = homology(X, k - 1).group;
  for (std::size_t g = 0; g < hj.orders.size(); ++g) {
    std::vector<Rational> values;
    if (hj.orders[g] == 0)
      values = {Rational(1, 2), Rational(1, 3)};
    else
      values = {Rational(1) / Rational(hj.orders[g])};
    for (const auto& v : values) {
      RatVector coords(hj.orders.size());
      coords[g] = v;
      out.push_back({"i1(" + to_string(v) + " on H_" + std::to_string(k - 1) + " generator " +
                         std::to_string(g) + ")",
                     i1(x, make_class(X, k - 1, Ring::kQmodZ, coords))});
    }
  }
  const auto& hz = integral_cohomology(X, k);
  for (std::size_t g = 0; g < hz.group.orders.size(); ++g) {
    RatVector coords(hz.group.orders.size());
    coords[g] = 1;
    out.push_back({"delta2-preimage(H^" + std::to_string(k) + " generator " + std::to_string(g) + ")",
                   delta2_preimage(x, make_class(X, k, Ring::kZ, coords))});
  }
  auto forms = integral_form_generators(X, k);
  for (std::size_t f = 0; f < forms.size() && f < 3; ++f)
    out.push_back({"delta1-preimage(integral form " + std::to_string(f) + ")",
                   delta1_preimage(x, forms[f])});
  for (int i = 0; i < 4; ++i)
    out.push_back({"i2(random form " + std::to_string(i) + ")",
                   i2(x, {rng.rational_cochain(X, k - 1)})});
  const std::size_t base = out.size();
  for (std::size_t i = 0; out.size() < std::max(minimum, base + 4); ++i) {
    const auto& a = out[rng.below(base)];
    const auto& b = out[rng.below(base)];
    DiffClass sum = a.value + b.value;
    Cochain bb = rng.integral_cochain(X, k - 1);
    Cochain ss = k >= 2 ? rng.rational_cochain(X, k - 2) : Cochain::zero(X, k - 2, Ring::kQ);
    out.push_back({"sum " + std::to_string(i) + " (" + a.label + " + " + b.label + ", perturbed)",
                   shift(sum, bb, ss)});
  }
  return out;
}

// --- Diagram verification -----------------------------------------------------

CheckList check_character_diagram(const ComplexPtr& x, int k, std::uint64_t seed) {
  const Complex& X = *x;
  CheckList out;
  Sampler rng(seed + 17u * static_cast<std::uint64_t>(k));
  auto samples = sample_classes(x, k, seed);
  const auto& hj = homology(X, k - 1);
  const auto& hz = integral_cohomology(X, k);
  const auto zero = zero_class(x, k);

  // Q/Z classes: dual generators, second free values, and their sum.
  std::vector<CohomologyClass> qz = sample_generators(X, k - 1, Ring::kQmodZ);
  {
    RatVector all(hj.group.orders.size());
    for (std::size_t g = 0; g < all.size(); ++g) {
      if (hj.group.orders[g] == 0) {
        RatVector v(all.size());
        v[g] = Rational(1, 3);
        qz.push_back(make_class(X, k - 1, Ring::kQmodZ, v));
        all[g] = Rational(2, 5);
      } else {
        all[g] = Rational(1) / Rational(hj.group.orders[g]);
      }
    }
    if (!all.empty()) qz.push_back(make_class(X, k - 1, Ring::kQmodZ, all));
  }
  // Rational classes of degree k-1.
  std::vector<CohomologyClass> qs;
  const std::size_t b = integral_cohomology(X, k - 1).free_slots.size();
  for (std::size_t i = 0; i < b; ++i)
    for (int den : {1, 2, 3}) {
      RatVector v(b);
      v[i] = Rational(1, den);
      qs.push_back({Ring::kQ, k - 1, v});
    }
  // Forms of degree k-1: random, closed, and integral.
  std::vector<Cochain> thetas;
  for (int i = 0; i < 4; ++i) thetas.push_back(rng.rational_cochain(X, k - 1));
  {
    const auto& basis = integral_cohomology(X, k - 1).cocycles.basis;
    for (std::size_t m = 0; m < basis.cols(); ++m)
      thetas.push_back(scale(Rational(1, 2), Cochain::rational(k - 1, to_rational(basis.column(m)))));
  }
  auto lz = integral_form_generators(X, k - 1);
  for (const auto& f : lz) thetas.push_back(f);

  // Diagonal H^{k-1}(Q/Z) -> G^k -> Lambda^k_Z.
  {
    bool ok = true;
    Json wit = Json::array();
    for (const auto& u : qz) {
      DiffClass v = i1(x, u);
      RatVector hol(hj.generators.cols());
      for (std::size_t g = 0; g < hol.size(); ++g) hol[g] = holonomy(v, hj.generators.column(g));
      if (hol != u.coords) ok = false;
      if (!u.is_zero() && class_equal(v, zero)) ok = false;
      wit.push_back({{"u", rationals_to_json(u.coords)}, {"holonomy", rationals_to_json(hol)}});
    }
    out.push_back(make_check("diagonal1.i1_injective", ok,
                             "holonomy on H_{k-1} generators recovers u; nonzero u gives a nonzero class",
                             wit));
  }
  {
    bool ok = true;
    for (const auto& u : qz) ok = ok && delta1(i1(x, u)).is_zero();
    out.push_back(make_check("diagonal1.delta1_after_i1", ok, "delta1(i1(u)) = 0"));
  }
  {
    bool ok = true;
    std::size_t tried = 0;
    for (const auto& s : samples) {
      DiffClass flat = s.value - delta1_preimage(x, s.value.omega);
      Cochain hmod = change_ring(flat.h, Ring::kQmodZ);
      auto u = cohomology_class(X, hmod);
      ok = ok && class_equal(i1(x, u), flat);
      ++tried;
    }
    out.push_back(make_check("diagonal1.ker_delta1_in_im_i1", ok,
                             std::to_string(tried) + " flat classes written as i1(h mod 1)"));
  }
  {
    bool ok = true;
    auto forms = integral_form_generators(X, k);
    for (const auto& w : forms) {
      DiffClass v = delta1_preimage(x, w);
      ok = ok && is_diff_cocycle(v) && delta1(v) == w;
    }
    out.push_back(make_check("diagonal1.delta1_onto", ok,
                             std::to_string(forms.size()) + " generators of Lambda^k_Z have preimages"));
  }

  // Diagonal Lambda^{k-1}/Lambda_Z -> G^k -> H^k(Z).
  {
    bool ok = true;
    for (const auto& t : thetas) {
      bool zero_class_ = class_equal(i2(x, {t}), zero);
      bool integral = is_integral_form(X, t);
      if (zero_class_ != integral) ok = false;
    }
    for (std::size_t i = 0; i < lz.size() && i < 6; ++i) {
      const auto& t = thetas[i % 4];
      if (!class_equal(i2(x, {t + lz[i]}), i2(x, {t}))) ok = false;
    }
    out.push_back(make_check("diagonal2.i2_injective", ok,
                             "i2(theta) = 0 exactly when theta is in Lambda_Z; i2 is constant on Lambda_Z cosets"));
  }
  {
    bool ok = true;
    for (const auto& t : thetas) ok = ok && delta2(i2(x, {t})).is_zero();
    out.push_back(make_check("diagonal2.delta2_after_i2", ok, "delta2(i2(theta)) = 0"));
  }
  {
    bool ok = true;
    for (const auto& s : samples) {
      DiffClass v = s.value - delta2_preimage(x, delta2(s.value));
      auto theta = lift_through_i2(v);
      ok = ok && class_equal(i2(x, theta), v);
    }
    out.push_back(make_check("diagonal2.ker_delta2_in_im_i2", ok,
                             std::to_string(samples.size()) + " classes with delta2 = 0 lifted through i2"));
  }
  {
    bool ok = true;
    Json wit = Json::array();
    for (std::size_t g = 0; g < hz.group.orders.size(); ++g) {
      RatVector coords(hz.group.orders.size());
      coords[g] = 1;
      auto target = make_class(X, k, Ring::kZ, coords);
      DiffClass v = delta2_preimage(x, target);
      ok = ok && is_diff_cocycle(v) && delta2(v) == target;
      wit.push_back(cochain_to_json(X, v.c));
    }
    out.push_back(make_check("diagonal2.delta2_onto", ok,
                             "every generator of H^k(Z) = " + hz.group.describe() + " has a preimage",
                             wit));
  }

  // Faces.
  {
    bool ok = true;
    for (const auto& q : qs) ok = ok && class_equal(i1(x, alpha(X, q)), i2(x, beta(X, q)));
    out.push_back(make_check("face.i1_alpha_eq_i2_beta", ok, "i1(alpha(q)) = i2(beta(q))"));
  }
  {
    bool ok = true;
    for (const auto& t : thetas) ok = ok && delta1(i2(x, {t})) == d_map(X, {t});
    out.push_back(make_check("face.delta1_i2_eq_d", ok, "delta1(i2(theta)) = d(theta)"));
  }
  {
    bool ok = true;
    for (const auto& s : samples)
      ok = ok && r_map(X, delta2(s.value)) == s_map(X, delta1(s.value));
    out.push_back(make_check("face.r_delta2_eq_s_delta1", ok, "r(delta2(x)) = s(delta1(x))"));
  }
  {
    bool ok = true;
    Json wit = Json::array();
    for (const auto& u : qz)
      for (auto strategy : {LiftStrategy::kUnit, LiftStrategy::kCentered}) {
        auto lhs = delta2(i1(x, u, strategy));
        auto rhs = reduced(X, -bockstein(X, u, strategy));
        if (!(lhs == rhs)) ok = false;
        if (strategy == LiftStrategy::kUnit && !lhs.is_zero())
          wit.push_back({{"u", rationals_to_json(u.coords)}, {"delta2_i1", rationals_to_json(lhs.coords)},
                         {"B", rationals_to_json(bockstein(X, u).coords)}});
      }
    out.push_back(make_check("face.delta2_i1_eq_minus_B", ok,
                             "delta2(i1(u)) = -B(u) for both lift strategies", wit));
  }

  // Torsion of H^k(Z) is reached through i1 (the mechanism of the
  // uniqueness argument for delta2).
  {
    bool ok = true;
    Json wit = Json::array();
    std::vector<CohomologyClass> duals;
    for (std::size_t g = 0; g < hj.group.orders.size(); ++g)
      if (hj.group.orders[g] != 0) {
        RatVector v(hj.group.orders.size());
        v[g] = Rational(1) / Rational(hj.group.orders[g]);
        duals.push_back(make_class(X, k - 1, Ring::kQmodZ, v));
      }
    ZMatrix images(hz.group.orders.size(), duals.size());
    for (std::size_t i = 0; i < duals.size(); ++i) {
      auto c = bockstein(X, duals[i]);
      for (std::size_t r = 0; r < c.coords.size(); ++r) images(r, i) = c.coords[r].get_num();
    }
    ZMatrix sys(images.rows(), images.cols() + images.rows());
    for (std::size_t r = 0; r < images.rows(); ++r) {
      for (std::size_t c = 0; c < images.cols(); ++c) sys(r, c) = images(r, c);
      sys(r, images.cols() + r) = hz.group.orders[r];
    }
    for (std::size_t g = 0; g < hz.group.orders.size(); ++g) {
      if (hz.group.orders[g] == 0) continue;
      IntVector minus_tau(hz.group.orders.size());
      minus_tau[g] = -1;
      auto n = solve_integer(sys, minus_tau);
      if (!n) {
        ok = false;
        continue;
      }
      RatVector mu(hj.group.orders.size());
      for (std::size_t i = 0, d = 0; i < hj.group.orders.size(); ++i)
        if (hj.group.orders[i] != 0) mu[i] = Rational((*n)[d++]) / Rational(hj.group.orders[i]);
      auto muc = make_class(X, k - 1, Ring::kQmodZ, mu);
      auto got = delta2(i1(x, muc));
      RatVector tau(hz.group.orders.size());
      tau[g] = 1;
      ok = ok && got == make_class(X, k, Ring::kZ, tau);
      wit.push_back({{"tau", rationals_to_json(tau)}, {"mu", rationals_to_json(muc.coords)}});
    }
    out.push_back(make_check("lemma.torsion_via_i1", ok,
                             "each torsion generator tau of H^k(Z) equals delta2(i1(mu)) with B(mu) = -tau",
                             wit));
  }

  // Class invariance of the transformations.
  {
    bool ok = true;
    for (const auto& s : samples) {
      Cochain bb = rng.integral_cochain(X, k - 1);
      Cochain ss = k >= 2 ? rng.rational_cochain(X, k - 2) : Cochain::zero(X, k - 2, Ring::kQ);
      DiffClass t = shift(s.value, bb, ss);
      ok = ok && class_equal(t, s.value) && delta1(t) == delta1(s.value) &&
           delta2(t) == delta2(s.value) && is_diff_cocycle(t);
      for (std::size_t g = 0; ok && g < hj.generators.cols(); ++g)
        ok = holonomy(t, hj.generators.column(g)) == holonomy(s.value, hj.generators.column(g));
    }
    out.push_back(make_check("diagram.class_invariance", ok,
                             "delta1, delta2 and holonomy are unchanged by (db, -b + ds, 0)"));
  }
  return out;
}

CheckList check_naturality(const SimplicialMap& phi, int k, const std::vector<SampleClass>& samples) {
  CheckList out;
  const ComplexPtr& X = phi.target();
  const ComplexPtr& Y = phi.source();
  const std::string tag = " along " + Y->name() + " -> " + X->name();
  {
    bool ok = true;
    for (const auto& u : sample_generators(*X, k - 1, Ring::kQmodZ))
      ok = ok && class_equal(pullback(phi, i1(X, u)), i1(Y, pullback(phi, u)));
    out.push_back(make_check("naturality.i1", ok, "phi^* i1(u) = i1(phi^* u)" + tag));
  }
  {
    bool ok = true;
    Sampler rng(static_cast<std::uint64_t>(k) * 7919u);
    for (int i = 0; i < 4; ++i) {
      Cochain t = rng.rational_cochain(*X, k - 1);
      Cochain pt{Ring::kQ, k - 1, phi.pull_cochain(k - 1, t.values)};
      ok = ok && class_equal(pullback(phi, i2(X, {t})), i2(Y, {pt}));
    }
    out.push_back(make_check("naturality.i2", ok, "phi^* i2(theta) = i2(phi^* theta)" + tag));
  }
  {
    bool ok = true;
    for (const auto& s : samples) {
      DiffClass p = pullback(phi, s.value);
      ok = ok && is_diff_cocycle(p) &&
           delta1(p).values == phi.pull_cochain(k, delta1(s.value).values) &&
           delta2(p) == pullback(phi, delta2(s.value));
    }
    out.push_back(make_check("naturality.delta1_delta2", ok,
                             "delta1 and delta2 commute with phi^* on " +
                                 std::to_string(samples.size()) + " samples" + tag));
  }
  return out;
}

}  // namespace charrig
