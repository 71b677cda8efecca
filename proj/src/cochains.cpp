#include "charrig/cochains.hpp"

#include <algorithm>
#include <sstream>

namespace charrig {

const char* ring_name(Ring r) {
  switch (r) {
    case Ring::kZ: return "Z";
    case Ring::kQ: return "Q";
    case Ring::kQmodZ: return "QmodZ";
  }
  return "?";
}

Ring parse_ring(std::string_view name) {
  if (name == "Z") return Ring::kZ;
  if (name == "Q") return Ring::kQ;
  if (name == "QmodZ" || name == "Q/Z") return Ring::kQmodZ;
  throw ParseError("unknown coefficient ring '" + std::string(name) + "'");
}

// --- Cochain arithmetic ------------------------------------------------------

Cochain Cochain::zero(const Complex& x, int degree, Ring ring) {
  return {ring, degree, RatVector(x.count(degree))};
}

Cochain Cochain::integral(int degree, const IntVector& values) {
  return {Ring::kZ, degree, to_rational(values)};
}

Cochain Cochain::rational(int degree, RatVector values) {
  return {Ring::kQ, degree, std::move(values)};
}

Cochain Cochain::mod_one(int degree, const RatVector& values) {
  Cochain c{Ring::kQmodZ, degree, values};
  for (auto& v : c.values) v = frac(v);
  return c;
}

IntVector Cochain::integer_values() const { return to_integer(values); }

namespace {

void require_compatible(const Cochain& a, const Cochain& b, const char* op) {
  if (a.ring != b.ring || a.degree != b.degree || a.size() != b.size())
    throw MismatchError(std::string(op) + ": cochains differ in ring, degree or length (" +
                        ring_name(a.ring) + "^" + std::to_string(a.degree) + " vs " +
                        ring_name(b.ring) + "^" + std::to_string(b.degree) + ")");
}

void normalize(Cochain& c) {
  if (c.ring == Ring::kQmodZ)
    for (auto& v : c.values) v = frac(v);
}

// Integer matrix D * M for the least common denominator D of the entries.
ZMatrix clear_denominators(const QMatrix& m) {
  Integer d = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), m(i, j).get_den().get_mpz_t());
  ZMatrix z(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rational q = m(i, j) * d;
      z(i, j) = q.get_num();
    }
  return z;
}

}  // namespace

Cochain operator+(const Cochain& a, const Cochain& b) {
  require_compatible(a, b, "cochain sum");
  Cochain c = a;
  for (std::size_t i = 0; i < c.size(); ++i) c.values[i] += b.values[i];
  normalize(c);
  return c;
}

Cochain operator-(const Cochain& a) {
  Cochain c = a;
  for (auto& v : c.values) v = -v;
  normalize(c);
  return c;
}

Cochain operator-(const Cochain& a, const Cochain& b) { return a + (-b); }

Cochain operator*(const Integer& n, const Cochain& a) {
  Cochain c = a;
  for (auto& v : c.values) v *= Rational(n);
  normalize(c);
  return c;
}

Cochain scale(const Rational& q, const Cochain& a) {
  if (a.ring != Ring::kQ && !is_integer(q))
    throw RingError(std::string("rational scaling of a ") + ring_name(a.ring) + " cochain");
  Cochain c = a;
  for (auto& v : c.values) v *= q;
  normalize(c);
  return c;
}

Cochain change_ring(const Cochain& a, Ring to) {
  if (a.ring == to) return a;
  if (static_cast<int>(to) < static_cast<int>(a.ring))
    throw RingError(std::string("cannot narrow ") + ring_name(a.ring) + " cochain to " +
                    ring_name(to));
  Cochain c = a;
  c.ring = to;
  normalize(c);
  return c;
}

void require_shape(const Complex& x, const Cochain& a) {
  if (a.degree < -1 || a.size() != x.count(a.degree))
    throw ShapeError("cochain of degree " + std::to_string(a.degree) + " has " +
                     std::to_string(a.size()) + " values; complex '" + x.name() + "' has " +
                     std::to_string(x.count(a.degree)) + " simplices");
  if (a.ring == Ring::kZ)
    for (const auto& v : a.values)
      if (!is_integer(v)) throw RingError("non-integral value " + to_string(v) + " in a Z cochain");
}

Rational evaluate(const Cochain& a, const IntVector& chain) {
  if (chain.size() != a.size())
    throw ShapeError("pairing a cochain with " + std::to_string(a.size()) +
                     " values against a chain of length " + std::to_string(chain.size()));
  Rational s = 0;
  for (std::size_t i = 0; i < chain.size(); ++i)
    if (sgn(chain[i]) != 0 && sgn(a.values[i]) != 0) s += a.values[i] * Rational(chain[i]);
  return a.ring == Ring::kQmodZ ? frac(s) : s;
}

Cochain coboundary(const Complex& x, const Cochain& a) {
  require_shape(x, a);
  Cochain c{a.ring, a.degree + 1, multiply_transposed(x.boundary(a.degree + 1), a.values)};
  normalize(c);
  return c;
}

bool is_cocycle(const Complex& x, const Cochain& a) { return coboundary(x, a).is_zero(); }

Cochain cup(const Complex& x, const Cochain& a, const Cochain& b) {
  require_shape(x, a);
  require_shape(x, b);
  Ring ring;
  if (a.ring == Ring::kZ && b.ring == Ring::kZ)
    ring = Ring::kZ;
  else if (a.ring != Ring::kQmodZ && b.ring != Ring::kQmodZ)
    ring = Ring::kQ;
  else if ((a.ring == Ring::kQmodZ && b.ring == Ring::kZ) ||
           (a.ring == Ring::kZ && b.ring == Ring::kQmodZ))
    ring = Ring::kQmodZ;
  else
    throw RingError(std::string("cup product of ") + ring_name(a.ring) + " and " +
                    ring_name(b.ring) + " cochains is not defined");

  const int p = a.degree, q = b.degree, n = p + q;
  Cochain c{ring, n, RatVector(x.count(n))};
  const auto& cells = x.simplices(n);
  for (std::size_t s = 0; s < cells.size(); ++s) {
    const Simplex& sigma = cells[s];
    Simplex front(sigma.begin(), sigma.begin() + p + 1);
    std::size_t fi = *x.index_of(front);
    if (sgn(a.values[fi]) == 0) continue;
    Simplex back(sigma.begin() + p, sigma.end());
    std::size_t bi = *x.index_of(back);
    if (sgn(b.values[bi]) == 0) continue;
    c.values[s] = a.values[fi] * b.values[bi];
  }
  normalize(c);
  return c;
}

Rational lift_value(const Rational& q, LiftStrategy s) {
  return s == LiftStrategy::kUnit ? frac(q) : centered_frac(q);
}

// --- Homology and integral cohomology ---------------------------------------

IntVector Homology::class_of(const IntVector& cycle) const {
  return group.coordinates(multiply(cycles.coords, cycle));
}

IntVector Cohomology::class_of(const IntVector& cocycle) const {
  return group.coordinates(multiply(cocycles.coords, cocycle));
}

RatVector Cohomology::rational_class_of(const RatVector& cocycle) const {
  RatVector y = multiply(cocycles.coords, cocycle);
  RatVector out;
  out.reserve(free_slots.size());
  for (std::size_t slot : free_slots) {
    Rational acc = 0;
    auto row = group.project.row(slot);
    for (std::size_t m = 0; m < y.size(); ++m)
      if (sgn(row[m]) != 0) acc += Rational(row[m]) * y[m];
    out.push_back(acc);
  }
  return out;
}

RatVector Cohomology::rational_representative(const RatVector& coords) const {
  if (coords.size() != free_slots.size())
    throw ShapeError("rational class has " + std::to_string(coords.size()) +
                     " coordinates, expected " + std::to_string(free_slots.size()));
  RatVector out(generators.rows());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (sgn(coords[i]) == 0) continue;
    for (std::size_t r = 0; r < out.size(); ++r)
      if (sgn(generators(r, free_slots[i])) != 0)
        out[r] += coords[i] * Rational(generators(r, free_slots[i]));
  }
  return out;
}

const SNFResult& coboundary_snf(const Complex& x, int j) {
  return x.cached<SNFResult>("cosnf:" + std::to_string(j),
                             [&] { return x.boundary_snf(j + 1).transposed(); });
}

const Homology& homology(const Complex& x, int j) {
  return x.cached<Homology>("homology:" + std::to_string(j), [&] {
    Homology h;
    h.degree = j;
    h.cycles = kernel_with_coordinates(x.boundary_snf(j));
    h.group = cokernel(h.cycles.coords * x.boundary(j + 1));
    h.generators = h.cycles.basis * h.group.gen_lift;
    return h;
  });
}

const Cohomology& integral_cohomology(const Complex& x, int j) {
  return x.cached<Cohomology>("cohomology:" + std::to_string(j), [&] {
    Cohomology c;
    c.degree = j;
    c.cocycles = kernel_with_coordinates(coboundary_snf(x, j));
    ZMatrix rel = j == 0 ? ZMatrix(c.cocycles.coords.rows(), 0)
                         : c.cocycles.coords * x.boundary(j).transpose();
    c.group = cokernel(rel);
    c.generators = c.cocycles.basis * c.group.gen_lift;
    for (std::size_t i = 0; i < c.group.orders.size(); ++i)
      if (c.group.orders[i] == 0) c.free_slots.push_back(i);
    return c;
  });
}

// --- Classes ------------------------------------------------------------------

namespace {

void require_class(const CohomologyClass& a, const CohomologyClass& b) {
  if (a.ring != b.ring || a.degree != b.degree || a.coords.size() != b.coords.size())
    throw MismatchError("cohomology classes live in different groups");
}

CohomologyClass reduce_class(CohomologyClass u, const std::vector<Integer>& orders) {
  for (std::size_t i = 0; i < u.coords.size(); ++i) {
    if (u.ring == Ring::kZ && orders[i] != 0) {
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), u.coords[i].get_num().get_mpz_t(), orders[i].get_mpz_t());
      u.coords[i] = r;
    } else if (u.ring == Ring::kQmodZ) {
      u.coords[i] = frac(u.coords[i]);
    }
  }
  return u;
}

std::vector<Integer> class_orders(const Complex& x, int j, Ring ring) {
  switch (ring) {
    case Ring::kZ: return integral_cohomology(x, j).group.orders;
    case Ring::kQ: return std::vector<Integer>(integral_cohomology(x, j).free_slots.size(), 0);
    case Ring::kQmodZ: return homology(x, j).group.orders;
  }
  return {};
}

}  // namespace

CohomologyClass operator+(const CohomologyClass& a, const CohomologyClass& b) {
  require_class(a, b);
  CohomologyClass c = a;
  for (std::size_t i = 0; i < c.coords.size(); ++i) c.coords[i] += b.coords[i];
  return c;  // callers re-reduce through make_class when torsion matters
}

CohomologyClass operator-(const CohomologyClass& a) {
  CohomologyClass c = a;
  for (auto& v : c.coords) v = -v;
  return c;
}

CohomologyClass operator*(const Integer& n, const CohomologyClass& a) {
  CohomologyClass c = a;
  for (auto& v : c.coords) v *= Rational(n);
  return c;
}

std::size_t class_size(const Complex& x, int j, Ring ring) {
  return class_orders(x, j, ring).size();
}

CohomologyClass make_class(const Complex& x, int j, Ring ring, RatVector coords) {
  auto orders = class_orders(x, j, ring);
  if (coords.size() != orders.size())
    throw ShapeError(std::string("class in H^") + std::to_string(j) + "(" + ring_name(ring) +
                     ") needs " + std::to_string(orders.size()) + " coordinates, got " +
                     std::to_string(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (ring == Ring::kZ && !is_integer(coords[i]))
      throw RingError("non-integral coordinate in an integral class");
    if (ring == Ring::kQmodZ && orders[i] != 0 && !is_integer(coords[i] * Rational(orders[i])))
      throw InvalidArgument("value " + to_string(coords[i]) + " on a cycle of order " +
                            orders[i].get_str() + " is not a homomorphism value");
  }
  return reduce_class({ring, j, std::move(coords)}, orders);
}

std::string describe_cohomology(const Complex& x, int j, Ring ring) {
  if (ring == Ring::kZ) return integral_cohomology(x, j).group.describe();
  std::ostringstream out;
  bool first = true;
  auto sep = [&] {
    if (!first) out << " + ";
    first = false;
  };
  if (ring == Ring::kQ) {
    std::size_t r = integral_cohomology(x, j).free_slots.size();
    if (r == 0) return "0";
    out << "Q";
    if (r > 1) out << "^" << r;
    return out.str();
  }
  const auto& h = homology(x, j).group;
  std::size_t r = h.rank();
  if (r > 0) {
    sep();
    out << (r > 1 ? "(Q/Z)^" + std::to_string(r) : "Q/Z");
  }
  for (const auto& o : h.torsion()) {
    sep();
    out << "Z/" << o.get_str();
  }
  return first ? "0" : out.str();
}

CohomologyClass cohomology_class(const Complex& x, const Cochain& a) {
  require_shape(x, a);
  const int j = a.degree;
  if (!is_cocycle(x, a))
    throw NotACycle(std::string(ring_name(a.ring)) + " cochain of degree " + std::to_string(j) +
                    " is not a cocycle");
  switch (a.ring) {
    case Ring::kZ: {
      auto z = integral_cohomology(x, j).class_of(a.integer_values());
      return {Ring::kZ, j, to_rational(z)};
    }
    case Ring::kQ:
      return {Ring::kQ, j, integral_cohomology(x, j).rational_class_of(a.values)};
    case Ring::kQmodZ: {
      const auto& h = homology(x, j);
      RatVector v(h.generators.cols());
      for (std::size_t g = 0; g < v.size(); ++g) v[g] = evaluate(a, h.generators.column(g));
      return make_class(x, j, Ring::kQmodZ, std::move(v));
    }
  }
  throw InternalError("unreachable ring");
}

RatVector representative_lift(const Complex& x, const CohomologyClass& u, LiftStrategy s) {
  if (u.ring != Ring::kQmodZ) throw RingError("representative_lift expects a Q/Z class");
  const auto& h = homology(x, u.degree);
  if (u.coords.size() != h.group.orders.size()) throw ShapeError("Q/Z class has wrong length");
  const std::size_t z = h.cycles.basis.cols();
  RatVector f(z);
  for (std::size_t m = 0; m < z; ++m) {
    Rational acc = 0;
    for (std::size_t g = 0; g < u.coords.size(); ++g)
      if (sgn(h.group.project(g, m)) != 0) acc += u.coords[g] * Rational(h.group.project(g, m));
    f[m] = lift_value(acc, s);
  }
  RatVector t = multiply_transposed(h.cycles.coords, f);
  CHARRIG_ASSERT(
      [&] {
        for (const auto& v : multiply_transposed(x.boundary(u.degree + 1), t))
          if (!is_integer(v)) return false;
        return true;
      }(),
      "lift of a Q/Z class has non-integral coboundary");
  return t;
}

Cochain representative(const Complex& x, const CohomologyClass& u) {
  switch (u.ring) {
    case Ring::kZ: {
      const auto& c = integral_cohomology(x, u.degree);
      return Cochain::integral(u.degree, multiply(c.generators, to_integer(u.coords)));
    }
    case Ring::kQ:
      return Cochain::rational(u.degree,
                               integral_cohomology(x, u.degree).rational_representative(u.coords));
    case Ring::kQmodZ:
      return Cochain::mod_one(u.degree, representative_lift(x, u));
  }
  throw InternalError("unreachable ring");
}

std::vector<CohomologyClass> sample_generators(const Complex& x, int j, Ring ring) {
  auto orders = class_orders(x, j, ring);
  std::vector<CohomologyClass> out;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    RatVector v(orders.size());
    if (ring == Ring::kQmodZ)
      v[i] = orders[i] == 0 ? Rational(1, 2) : Rational(1) / Rational(orders[i]);
    else
      v[i] = 1;
    out.push_back(make_class(x, j, ring, std::move(v)));
  }
  return out;
}

// --- Forms --------------------------------------------------------------------

bool is_integral_form(const Complex& x, const Cochain& w) {
  if (w.ring == Ring::kQmodZ) throw RingError("forms are rational cochains");
  require_shape(x, w);
  if (!is_cocycle(x, w)) return false;
  const auto& basis = homology(x, w.degree).cycles.basis;
  for (std::size_t m = 0; m < basis.cols(); ++m)
    if (!is_integer(evaluate(w, basis.column(m)))) return false;
  return true;
}

std::vector<Cochain> integral_form_generators(const Complex& x, int j) {
  std::vector<Cochain> out;
  if (j >= 1)
    for (std::size_t s = 0; s < x.count(j - 1); ++s) {
      Cochain e = Cochain::zero(x, j - 1, Ring::kQ);
      e.values[s] = 1;
      out.push_back(coboundary(x, e));
    }
  const auto& c = integral_cohomology(x, j);
  for (std::size_t slot : c.free_slots)
    out.push_back(Cochain::rational(j, to_rational(c.generators.column(slot))));
  return out;
}

bool quotient_equal(const Complex& x, const QuotientForm& a, const QuotientForm& b) {
  return is_integral_form(x, a.representative - b.representative);
}

// --- Sequence maps ------------------------------------------------------------

CohomologyClass bockstein(const Complex& x, const CohomologyClass& u, LiftStrategy s) {
  RatVector t = representative_lift(x, u, s);
  Cochain c = Cochain::integral(u.degree + 1,
                                to_integer(multiply_transposed(x.boundary(u.degree + 1), t)));
  return cohomology_class(x, c);
}

CohomologyClass alpha(const Complex& x, const CohomologyClass& q) {
  if (q.ring != Ring::kQ) throw RingError("alpha expects a rational class");
  return cohomology_class(x, change_ring(representative(x, q), Ring::kQmodZ));
}

CohomologyClass r_map(const Complex& x, const CohomologyClass& c) {
  if (c.ring != Ring::kZ) throw RingError("r expects an integral class");
  return cohomology_class(x, change_ring(representative(x, c), Ring::kQ));
}

QuotientForm beta(const Complex& x, const CohomologyClass& q) {
  if (q.ring != Ring::kQ) throw RingError("beta expects a rational class");
  return {representative(x, q)};
}

CohomologyClass s_map(const Complex& x, const Cochain& w) {
  return cohomology_class(x, change_ring(w, Ring::kQ));
}

Cochain d_map(const Complex& x, const QuotientForm& theta) {
  return coboundary(x, theta.representative);
}

// --- Subgroup arithmetic --------------------------------------------------------

namespace {

// [cols | relation columns of g]
ZMatrix with_relations(const FgAbelianGroup& g, const ZMatrix& cols) {
  std::vector<std::size_t> torsion;
  for (std::size_t i = 0; i < g.orders.size(); ++i)
    if (g.orders[i] != 0) torsion.push_back(i);
  ZMatrix a(g.orders.size(), cols.cols() + torsion.size());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < cols.cols(); ++j) a(i, j) = cols(i, j);
  for (std::size_t t = 0; t < torsion.size(); ++t)
    a(torsion[t], cols.cols() + t) = g.orders[torsion[t]];
  return a;
}

}  // namespace

bool subgroup_contains(const FgAbelianGroup& g, const ZMatrix& super, const ZMatrix& sub) {
  if (sub.cols() == 0) return true;
  ZMatrix a = with_relations(g, super);
  if (a.cols() == 0) return sub.is_zero();
  SNFResult snf = smith_normal_form(a);
  for (std::size_t j = 0; j < sub.cols(); ++j)
    if (!solve_integer(snf, sub.column(j))) return false;
  return true;
}

ZMatrix hom_kernel(const FgAbelianGroup& target, const ZMatrix& images) {
  ZMatrix a = with_relations(target, images);
  ZMatrix k = kernel_basis(a);
  return k.rows_range(0, images.cols());
}

// --- Exactness ------------------------------------------------------------------

namespace {

nlohmann::json coords_json(const RatVector& v) {
  auto arr = nlohmann::json::array();
  for (const auto& q : v) arr.push_back(to_string(q));
  return arr;
}

nlohmann::json coords_json(const IntVector& v) {
  auto arr = nlohmann::json::array();
  for (const auto& q : v) arr.push_back(q.get_str());
  return arr;
}

// Rational matrix inverse by Gauss-Jordan; nullopt when singular.
std::optional<QMatrix> inverse(QMatrix a) {
  const std::size_t n = a.rows();
  QMatrix inv = QMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a(p, c)) == 0) ++p;
    if (p == n) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a(c, j), a(p, j));
      std::swap(inv(c, j), inv(p, j));
    }
    Rational piv = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(a(i, c)) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

}  // namespace

CheckList check_exactness(const Complex& x, int k) {
  CheckList out;
  const int j = k - 1;
  const auto& hz = integral_cohomology(x, j);
  const auto& hz_next = integral_cohomology(x, k);
  const auto& hj = homology(x, j);
  const std::size_t b = hz.free_slots.size();

  std::vector<std::size_t> free_cycles, torsion_cycles;
  for (std::size_t g = 0; g < hj.group.orders.size(); ++g)
    (hj.group.orders[g] == 0 ? free_cycles : torsion_cycles).push_back(g);

  // Periods of the rational basis of H^j(Q) on the free homology generators.
  QMatrix periods(free_cycles.size(), b);
  bool torsion_periods_vanish = true;
  for (std::size_t i = 0; i < b; ++i) {
    RatVector e(b);
    e[i] = 1;
    Cochain rep = Cochain::rational(j, hz.rational_representative(e));
    for (std::size_t a = 0; a < free_cycles.size(); ++a)
      periods(a, i) = evaluate(rep, hj.generators.column(free_cycles[a]));
    for (std::size_t t : torsion_cycles)
      if (sgn(evaluate(rep, hj.generators.column(t))) != 0) torsion_periods_vanish = false;
  }
  auto periods_inv = periods.rows() == periods.cols() ? inverse(periods) : std::nullopt;

  // im r in H^j(Q): r of every integral generator.
  QMatrix r_images(b, hz.group.orders.size());
  for (std::size_t g = 0; g < hz.group.orders.size(); ++g) {
    RatVector e(hz.group.orders.size());
    e[g] = 1;
    auto rc = r_map(x, make_class(x, j, Ring::kZ, e));
    for (std::size_t i = 0; i < b; ++i) r_images(i, g) = rc.coords[i];
  }
  ZMatrix r_lattice = clear_denominators(r_images);
  auto r_den = [&] {
    Integer d = 1;
    for (std::size_t i = 0; i < r_images.rows(); ++i)
      for (std::size_t g = 0; g < r_images.cols(); ++g)
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), r_images(i, g).get_den().get_mpz_t());
    return d;
  }();
  auto in_r_lattice = [&](const RatVector& v) {
    if (b == 0) return true;
    IntVector target;
    for (const auto& q : v) {
      Rational s = q * Rational(r_den);
      if (!is_integer(s)) return false;
      target.push_back(s.get_num());
    }
    return solve_integer(r_lattice, target).has_value();
  };

  // Bockstein: alpha o r = 0.
  {
    bool ok = true;
    for (std::size_t g = 0; g < r_images.cols(); ++g) {
      RatVector rv(b);
      for (std::size_t i = 0; i < b; ++i) rv[i] = r_images(i, g);
      if (!alpha(x, {Ring::kQ, j, rv}).is_zero()) ok = false;
    }
    out.push_back(make_check("bockstein.alpha_after_r", ok,
                             "alpha(r(g)) = 0 for every generator g of H^" + std::to_string(j) +
                                 "(Z)"));
  }
  // ker alpha = im r: ker alpha = periods^{-1} Z^b, generated by the
  // columns of the inverse period matrix.
  {
    bool ok = torsion_periods_vanish && (b == 0 || periods_inv.has_value());
    nlohmann::json wit = nlohmann::json::array();
    if (ok)
      for (std::size_t a = 0; a < b; ++a) {
        RatVector q = periods_inv->column(a);
        ok = ok && alpha(x, {Ring::kQ, j, q}).is_zero() && in_r_lattice(q);
        wit.push_back(coords_json(q));
      }
    out.push_back(make_check("bockstein.ker_alpha_in_im_r", ok,
                             "generators of ker alpha lie in the lattice r(H^" +
                                 std::to_string(j) + "(Z))",
                             wit));
  }
  // B o alpha = 0 on sampled rational classes.
  {
    bool ok = true;
    for (std::size_t i = 0; i < b; ++i)
      for (int den : {1, 2, 3}) {
        RatVector q(b);
        q[i] = Rational(1, den);
        auto u = alpha(x, {Ring::kQ, j, q});
        if (!bockstein(x, u).is_zero() || !bockstein(x, u, LiftStrategy::kCentered).is_zero())
          ok = false;
      }
    out.push_back(make_check("bockstein.B_after_alpha", ok,
                             "B(alpha(q)) = 0 for q in {e_i, e_i/2, e_i/3}"));
  }
  // ker B = im alpha: alpha hits the divisible part constructively and B is
  // injective on the dual torsion part.
  std::vector<CohomologyClass> torsion_duals;
  for (std::size_t t : torsion_cycles) {
    RatVector v(hj.group.orders.size());
    v[t] = Rational(1) / Rational(hj.group.orders[t]);
    torsion_duals.push_back(make_class(x, j, Ring::kQmodZ, v));
  }
  ZMatrix b_images(hz_next.group.orders.size(), torsion_duals.size());
  for (std::size_t i = 0; i < torsion_duals.size(); ++i) {
    auto c = bockstein(x, torsion_duals[i]);
    for (std::size_t r = 0; r < c.coords.size(); ++r) b_images(r, i) = c.coords[r].get_num();
  }
  {
    bool ok = b == free_cycles.size() && (b == 0 || periods_inv.has_value());
    for (std::size_t a = 0; ok && a < free_cycles.size(); ++a)
      for (int den : {2, 3}) {
        RatVector target(hj.group.orders.size());
        target[free_cycles[a]] = Rational(1, den);
        RatVector q(b);
        for (std::size_t i = 0; i < b; ++i) q[i] = (*periods_inv)(i, a) * Rational(1, den);
        if (!(alpha(x, {Ring::kQ, j, q}) == make_class(x, j, Ring::kQmodZ, target))) ok = false;
      }
    ZMatrix ker = hom_kernel(hz_next.group, b_images);
    nlohmann::json wit = nlohmann::json::array();
    for (std::size_t c = 0; c < ker.cols(); ++c)
      for (std::size_t i = 0; i < torsion_cycles.size(); ++i) {
        const Integer& e = hj.group.orders[torsion_cycles[i]];
        if (!mpz_divisible_p(ker(i, c).get_mpz_t(), e.get_mpz_t())) ok = false;
      }
    for (std::size_t i = 0; i < torsion_duals.size(); ++i)
      wit.push_back({{"dual", coords_json(torsion_duals[i].coords)},
                     {"B", coords_json(b_images.column(i))}});
    out.push_back(make_check("bockstein.ker_B_in_im_alpha", ok,
                             "alpha onto the divisible part; B injective on the torsion duals",
                             wit));
  }
  // r o B = 0.
  {
    bool ok = true;
    for (const auto& u : torsion_duals)
      if (!r_map(x, bockstein(x, u)).is_zero()) ok = false;
    out.push_back(make_check("bockstein.r_after_B", ok, "r(B(u)) = 0 on the torsion duals"));
  }
  // ker r = im B at H^k(Z).
  {
    const std::size_t g = hz_next.group.orders.size();
    QMatrix rk(hz_next.free_slots.size(), g);
    for (std::size_t c = 0; c < g; ++c) {
      RatVector e(g);
      e[c] = 1;
      auto rc = r_map(x, make_class(x, k, Ring::kZ, e));
      for (std::size_t i = 0; i < rc.coords.size(); ++i) rk(i, c) = rc.coords[i];
    }
    ZMatrix ker_r = rk.rows() == 0 ? ZMatrix::identity(g) : kernel_basis(clear_denominators(rk));
    bool ok = subgroup_contains(hz_next.group, b_images, ker_r);
    out.push_back(make_check("bockstein.ker_r_in_im_B", ok,
                             "torsion of H^" + std::to_string(k) + "(Z) = " +
                                 hz_next.group.describe() + " is generated by B-images"));
  }

  // de Rham-type: beta o r = 0.
  {
    bool ok = true;
    for (std::size_t g = 0; g < r_images.cols(); ++g) {
      RatVector rv(b);
      for (std::size_t i = 0; i < b; ++i) rv[i] = r_images(i, g);
      if (!is_integral_form(x, beta(x, {Ring::kQ, j, rv}).representative)) ok = false;
    }
    out.push_back(make_check("derham.beta_after_r", ok, "beta(r(g)) has integral periods"));
  }
  // ker beta = im r.
  {
    bool ok = torsion_periods_vanish && (b == 0 || periods_inv.has_value());
    for (std::size_t a = 0; ok && a < b; ++a) {
      RatVector q = periods_inv->column(a);
      ok = is_integral_form(x, beta(x, {Ring::kQ, j, q}).representative) && in_r_lattice(q);
    }
    // A rational class whose periods are not all integral is not in ker beta.
    for (std::size_t a = 0; ok && a < b; ++a) {
      RatVector q = periods_inv->column(a);
      for (auto& v : q) v /= 2;
      ok = !is_integral_form(x, beta(x, {Ring::kQ, j, q}).representative);
    }
    out.push_back(make_check("derham.ker_beta_in_im_r", ok,
                             "kernel of beta is the integral lattice of periods"));
  }
  // d o beta = 0.
  {
    bool ok = true;
    for (std::size_t i = 0; i < b; ++i) {
      RatVector q(b);
      q[i] = 1;
      if (!d_map(x, beta(x, {Ring::kQ, j, q})).is_zero()) ok = false;
    }
    out.push_back(make_check("derham.d_after_beta", ok, "d(beta(q)) = 0"));
  }
  // ker d = im beta: every closed form differs from beta(s(theta)) by an
  // exact rational form.
  {
    bool ok = true;
    const auto& basis = hz.cocycles.basis;
    const auto& prev = coboundary_snf(x, j - 1);
    for (std::size_t m = 0; ok && m < basis.cols(); ++m)
      for (int den : {1, 2}) {
        Cochain theta = Cochain::rational(j, to_rational(basis.column(m)));
        theta = scale(Rational(1, den), theta);
        auto q = s_map(x, theta);
        RatVector diff = (theta - beta(x, q).representative).values;
        auto sol = solve_rational(prev, diff);
        if (!sol) {
          ok = false;
          break;
        }
      }
    out.push_back(make_check("derham.ker_d_in_im_beta", ok,
                             "closed (k-1)-forms are beta-images up to exact forms"));
  }
  // s o d = 0.
  {
    bool ok = true;
    for (std::size_t sidx = 0; sidx < x.count(j); ++sidx) {
      Cochain e = Cochain::zero(x, j, Ring::kQ);
      e.values[sidx] = Rational(1, 2);
      if (!s_map(x, d_map(x, {e})).is_zero()) ok = false;
      if (!is_integral_form(x, d_map(x, {e}))) ok = false;
    }
    out.push_back(make_check("derham.s_after_d", ok, "s(d(theta)) = 0 and d(theta) is integral"));
  }
  // ker s = im d on the generating family of Lambda^k_Z.
  {
    auto family = integral_form_generators(x, k);
    const std::size_t bk = hz_next.free_slots.size();
    QMatrix sm(bk, family.size());
    bool ok = true;
    for (std::size_t f = 0; f < family.size(); ++f) {
      if (!is_integral_form(x, family[f])) ok = false;
      auto c = s_map(x, family[f]);
      for (std::size_t i = 0; i < bk; ++i) sm(i, f) = c.coords[i];
    }
    ZMatrix ker = bk == 0 ? ZMatrix::identity(family.size())
                          : kernel_basis(clear_denominators(sm));
    const auto& prev = coboundary_snf(x, j);
    for (std::size_t c = 0; ok && c < ker.cols(); ++c) {
      Cochain w = Cochain::zero(x, k, Ring::kQ);
      for (std::size_t f = 0; f < family.size(); ++f)
        if (sgn(ker(f, c)) != 0) w = w + ker(f, c) * family[f];
      auto theta = solve_rational(prev, w.values);
      ok = theta && d_map(x, {Cochain::rational(j, *theta)}) == w;
    }
    out.push_back(make_check("derham.ker_s_in_im_d", ok,
                             "integral forms with vanishing class are d-images (" +
                                 std::to_string(ker.cols()) + " kernel generators)"));
  }
  return out;
}

}  // namespace charrig
