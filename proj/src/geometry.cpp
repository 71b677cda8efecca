#include "charrig/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace charrig {

// --- Tower -----------------------------------------------------------------

namespace {
const ComplexPtr& non_null(const ComplexPtr& x) {
  if (!x) throw InvalidArgument("null complex");
  return x;
}
}  // namespace

SubdivisionTower::SubdivisionTower(ComplexPtr base)
    : base_(non_null(base)), identity_(SimplicialMap::identity(base_)) {}

void SubdivisionTower::ensure(int d) const {
  // caller holds mutex_
  while (static_cast<int>(steps_.size()) < d) {
    ComplexPtr coarse = steps_.empty() ? base_ : steps_.back().fine;
    steps_.push_back(barycentric_subdivide(coarse));
    if (projections_.empty())
      projections_.push_back(steps_.back().last_vertex);
    else
      projections_.push_back(SimplicialMap::compose(projections_.back(), steps_.back().last_vertex));
  }
}

ComplexPtr SubdivisionTower::level(int d) const {
  if (d < 0) throw InvalidArgument("negative subdivision depth");
  if (d == 0) return base_;
  return step(d).fine;
}

const Subdivision& SubdivisionTower::step(int d) const {
  if (d < 1) throw InvalidArgument("subdivision steps start at depth 1");
  std::lock_guard<std::mutex> lock(mutex_);
  ensure(d);
  return steps_[static_cast<std::size_t>(d - 1)];
}

const SimplicialMap& SubdivisionTower::projection(int d) const {
  if (d < 0) throw InvalidArgument("negative subdivision depth");
  if (d == 0) return identity_;
  std::lock_guard<std::mutex> lock(mutex_);
  ensure(d);
  return projections_[static_cast<std::size_t>(d - 1)];
}

IntVector SubdivisionTower::subdivide(int from, int to, int j, const IntVector& chain) const {
  if (to < from) throw InvalidArgument("cannot subdivide towards a coarser level");
  IntVector out = chain;
  for (int d = from + 1; d <= to; ++d) out = step(d).subdivide_chain(j, out);
  return out;
}

std::pair<int, std::size_t> SubdivisionTower::carrier(int d, int to, int j, std::size_t i) const {
  std::pair<int, std::size_t> cell{j, i};
  for (; d > to; --d) {
    const auto& c = step(d).carrier;
    cell = c.at(static_cast<std::size_t>(cell.first)).at(cell.second);
  }
  return cell;
}

Cochain SubdivisionTower::pull(int d, const Cochain& c) const {
  if (d == 0) return c;
  const Complex& fine = *level(d);
  if (c.degree < 0 || c.degree > base_->dimension()) return Cochain::zero(fine, c.degree, c.ring);
  RatVector v = projection(d).pull_cochain(c.degree, c.values);
  if (c.ring == Ring::kQmodZ) return Cochain::mod_one(c.degree, v);
  return {c.ring, c.degree, std::move(v)};
}

// --- Neighbourhoods --------------------------------------------------------

std::vector<std::string> nonvanishing_cohomology(const Complex& u, int level) {
  std::vector<std::string> out;
  for (int j = std::max(level + 1, 0); j <= u.dimension(); ++j) {
    const auto& h = integral_cohomology(u, j);
    if (!h.group.orders.empty()) out.push_back("H^" + std::to_string(j) + " = " + h.group.describe());
  }
  return out;
}

Neighborhood star_neighborhood(const SubdivisionTower& t, int depth, int j, const IntVector& chain,
                               int level) {
  ComplexPtr x = t.level(depth);
  if (chain.size() != x->count(j)) throw ShapeError("chain length does not match the subdivision");
  Neighborhood n;
  n.depth = depth;
  n.level = level;
  n.region = closed_star_neighborhood(x, Subcomplex::support(x, j, chain));
  n.space = n.region.to_complex(x->name() + "|U");
  n.obstructions = nonvanishing_cohomology(*n.space, level);
  return n;
}

std::vector<Neighborhood> good_neighborhoods(const SubdivisionTower& t, int from, int j,
                                             const IntVector& chain, int level, int max_depth) {
  std::vector<Neighborhood> out;
  IntVector c = chain;
  for (int d = from; d <= max_depth; ++d) {
    if (d > from) c = t.step(d).subdivide_chain(j, c);
    auto n = star_neighborhood(t, d, j, c, level);
    if (n.good()) out.push_back(std::move(n));
  }
  return out;
}

Neighborhood good_neighborhood(const SubdivisionTower& t, int from, int j, const IntVector& chain,
                               int level, int max_depth) {
  IntVector c = chain;
  std::string last;
  for (int d = from; d <= max_depth; ++d) {
    if (d > from) c = t.step(d).subdivide_chain(j, c);
    auto n = star_neighborhood(t, d, j, c, level);
    if (n.good()) return n;
    last = n.obstructions.front();
  }
  throw GeometryBudgetExceeded("no " + std::to_string(level) + "-good closed star up to depth " +
                               std::to_string(max_depth) + " (" + last + ")");
}

Cochain restrict_cochain(const Neighborhood& u, const Cochain& c) {
  const Complex& parent = *u.region.parent();
  const auto& cells = u.space->simplices(c.degree);
  if (c.values.size() != parent.count(c.degree)) throw ShapeError("cochain does not live on the tower level");
  RatVector v(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) v[i] = c.values[parent.require_index(cells[i])];
  return {c.ring, c.degree, std::move(v)};
}

IntVector restrict_chain(const Neighborhood& u, int j, const IntVector& chain) {
  const Complex& parent = *u.region.parent();
  if (chain.size() != parent.count(j)) throw ShapeError("chain does not live on the tower level");
  IntVector out(u.space->count(j));
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (sgn(chain[i]) == 0) continue;
    auto idx = u.space->index_of(parent.simplex(j, i));
    if (!idx) throw MismatchError("chain leaves the neighbourhood at [" + simplex_key(parent.simplex(j, i)) + "]");
    out[*idx] = chain[i];
  }
  return out;
}

// --- Pseudomanifolds -------------------------------------------------------

std::string pseudomanifold_defect(const Pseudomanifold& p) {
  if (!p.cells || !p.to_ambient) return "missing cells or ambient map";
  const Complex& P = *p.cells;
  const int n = p.dimension;
  if (p.to_ambient->source() != p.cells) return "ambient map has a different source";
  if (P.dimension() > n) return "cells above the pseudomanifold dimension";
  if (p.fundamental.size() != P.count(n)) return "fundamental cycle has the wrong length";
  for (const auto& c : p.fundamental)
    if (cmpabs(c, 1) != 0) return "fundamental cycle coefficient other than +-1";
  for (int j = 0; j <= P.dimension(); ++j)
    for (const auto& s : P.simplices(j))
      if (!p.to_ambient->image(s)) return "degenerate image of [" + simplex_key(s) + "]";
  std::set<std::size_t> images;
  for (const auto& s : P.simplices(n))
    if (!images.insert(p.to_ambient->image(s)->first).second)
      return "two top cells share the ambient simplex of [" + simplex_key(s) + "]";
  if (n == 0) return {};
  const ZMatrix& b = P.boundary(n);
  for (std::size_t r = 0; r < b.rows(); ++r) {
    int incident = 0;
    Integer sum = 0;
    for (std::size_t c = 0; c < b.cols(); ++c) {
      if (sgn(b(r, c)) == 0) continue;
      ++incident;
      sum += b(r, c) * p.fundamental[c];
    }
    const std::string face = "[" + simplex_key(P.simplex(n - 1, r)) + "]";
    if (incident != 2) return "face " + face + " lies on " + std::to_string(incident) + " top cells";
    if (sgn(sum) != 0) return "orientations do not cancel along " + face;
  }
  return {};
}

bool is_pseudomanifold(const Pseudomanifold& p) { return pseudomanifold_defect(p).empty(); }

// --- Splitting -------------------------------------------------------------

namespace {

Integer excess(const Integer& c) {
  Integer a = abs(c) - 1;
  return sgn(a) > 0 ? a : Integer(0);
}

Integer total_excess(const IntVector& v) {
  Integer e = 0;
  for (const auto& c : v) e += excess(c);
  return e;
}

bool unit_coefficients(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& c) { return cmpabs(c, 1) <= 0; });
}

bool is_cycle(const Complex& x, int j, const IntVector& z) {
  return j <= 0 || is_zero(multiply(x.boundary(j), z));
}

struct Incidence {
  std::vector<std::vector<std::pair<std::size_t, int>>> faces;  // per coface: (face, sign)
  std::vector<std::vector<std::size_t>> cofaces;                // per face
};

Incidence incidence(const Complex& x, int j, const std::vector<char>& allowed) {
  const ZMatrix& b = x.boundary(j + 1);
  Incidence inc;
  inc.faces.resize(b.cols());
  inc.cofaces.resize(b.rows());
  for (std::size_t s = 0; s < b.cols(); ++s) {
    if (!allowed[s]) continue;
    for (std::size_t r = 0; r < b.rows(); ++r)
      if (sgn(b(r, s)) != 0) {
        inc.faces[s].emplace_back(r, sgn(b(r, s)));
        inc.cofaces[r].push_back(s);
      }
  }
  return inc;
}

// Greedy pushes at one level; returns when no move lowers the excess.
void push_excess(const Incidence& inc, IntVector& cur, IntVector& witness) {
  for (;;) {
    Integer best_delta = 0;
    std::size_t best_s = 0;
    int best_eps = 0;
    for (std::size_t r = 0; r < cur.size(); ++r) {
      if (cmpabs(cur[r], 1) <= 0) continue;
      for (std::size_t s : inc.cofaces[r]) {
        int sign = 0;
        for (auto [f, fs] : inc.faces[s])
          if (f == r) sign = fs;
        const int eps = sgn(cur[r]) * sign;
        Integer delta = 0;
        for (auto [f, fs] : inc.faces[s]) delta += excess(cur[f] - eps * fs) - excess(cur[f]);
        if (delta < best_delta) {
          best_delta = delta;
          best_s = s;
          best_eps = eps;
        }
      }
    }
    if (best_eps == 0) return;
    for (auto [f, fs] : inc.faces[best_s]) cur[f] -= best_eps * fs;
    witness[best_s] += best_eps;
  }
}

}  // namespace

SplitResult split_chain(const SubdivisionTower& t, int from, int j, const IntVector& chain,
                        int max_depth) {
  const int dim = t.base()->dimension();
  if (j < 0 || j >= dim)
    throw DimensionError("splitting a " + std::to_string(j) + "-chain needs ambient dimension above " +
                         std::to_string(j) + ", got " + std::to_string(dim));
  ComplexPtr top = t.level(from);
  if (chain.size() != top->count(j)) throw ShapeError("chain length does not match the complex");
  const Subcomplex star = closed_star_neighborhood(top, Subcomplex::support(top, j, chain));

  int d = from;
  IntVector cur = chain;
  IntVector witness(top->count(j + 1));
  for (;;) {
    ComplexPtr x = t.level(d);
    std::vector<char> allowed(x->count(j + 1), 0);
    for (std::size_t s = 0; s < allowed.size(); ++s) {
      auto [cj, ci] = t.carrier(d, from, j + 1, s);
      allowed[s] = star.contains(cj, ci) ? 1 : 0;
    }
    push_excess(incidence(*x, j, allowed), cur, witness);
    if (sgn(total_excess(cur)) == 0) break;
    if (d >= max_depth)
      throw GeometryBudgetExceeded("multiplicities remain after " + std::to_string(max_depth) +
                                   " subdivisions (excess " + total_excess(cur).get_str() + ")");
    ++d;
    cur = t.step(d).subdivide_chain(j, cur);
    witness = t.step(d).subdivide_chain(j + 1, witness);
  }
  SplitResult out;
  out.depth = d;
  out.chain = t.subdivide(from, d, j, chain);
  out.split = std::move(cur);
  out.witness = std::move(witness);
  return out;
}

SplitResult split_cycle(const SubdivisionTower& t, int j, const IntVector& z, int max_depth) {
  if (z.size() != t.base()->count(j)) throw ShapeError("cycle length does not match the complex");
  if (!is_cycle(*t.base(), j, z)) throw NotACycle("chain to split is not a cycle");
  return split_chain(t, 0, j, z, max_depth);
}

// --- Resolving -------------------------------------------------------------

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::optional<Pseudomanifold> glue(const ComplexPtr& x, int d, int j, const IntVector& z) {
  std::vector<std::size_t> tops;
  for (std::size_t i = 0; i < z.size(); ++i)
    if (sgn(z[i]) != 0) tops.push_back(i);

  std::vector<Simplex> cells;
  std::map<Vertex, Vertex> vmap;
  if (j == 0) {
    for (std::size_t p = 0; p < tops.size(); ++p) {
      cells.push_back({static_cast<Vertex>(p)});
      vmap[static_cast<Vertex>(p)] = x->simplex(0, tops[p])[0];
    }
  } else {
    const std::size_t n = static_cast<std::size_t>(j) + 1;
    // sheets around each (j-1)-face: (top position, induced orientation)
    std::map<std::size_t, std::vector<std::pair<std::size_t, int>>> sheets;
    for (std::size_t p = 0; p < tops.size(); ++p)
      for (auto& [face, sign] : faces_with_signs(x->simplex(j, tops[p])))
        sheets[x->require_index(face)].emplace_back(p, sgn(z[tops[p]]) * sign);

    UnionFind component(tops.size());
    for (auto& [face, list] : sheets)
      if (list.size() == 2) component.unite(list[0].first, list[1].first);

    UnionFind corner(tops.size() * n);
    auto corner_of = [&](std::size_t p, Vertex v) {
      const Simplex& s = x->simplex(j, tops[p]);
      auto pos = static_cast<std::size_t>(std::find(s.begin(), s.end(), v) - s.begin());
      return p * n + pos;
    };
    for (auto& [face, list] : sheets) {
      std::vector<std::size_t> pos, neg;
      for (auto [p, o] : list) (o > 0 ? pos : neg).push_back(p);
      CHARRIG_ASSERT(pos.size() == neg.size(), "unpairable sheets around a face of a cycle");
      std::vector<char> used(neg.size(), 0);
      const Simplex& f = x->simplex(j - 1, face);
      for (std::size_t a : pos) {
        std::size_t pick = neg.size();
        for (std::size_t m = 0; m < neg.size() && pick == neg.size(); ++m)
          if (!used[m] && component.find(neg[m]) == component.find(a)) pick = m;
        for (std::size_t m = 0; m < neg.size() && pick == neg.size(); ++m)
          if (!used[m]) pick = m;
        used[pick] = 1;
        for (Vertex v : f) corner.unite(corner_of(a, v), corner_of(neg[pick], v));
      }
    }
    std::map<std::size_t, Vertex> id;
    for (std::size_t p = 0; p < tops.size(); ++p) {
      Simplex s;
      for (std::size_t c = 0; c < n; ++c) {
        auto root = corner.find(p * n + c);
        auto [it, fresh] = id.emplace(root, static_cast<Vertex>(id.size()));
        if (fresh) vmap[it->second] = x->simplex(j, tops[p])[c];
        s.push_back(it->second);
      }
      std::sort(s.begin(), s.end());
      cells.push_back(std::move(s));
    }
  }

  ComplexPtr pc;
  try {
    pc = Complex::create(x->name() + "/P", cells, true);
  } catch (const DuplicateError&) {
    return std::nullopt;
  }
  Pseudomanifold p;
  p.dimension = j;
  p.depth = d;
  p.cells = pc;
  p.to_ambient = std::make_shared<SimplicialMap>(pc, x, std::move(vmap));
  p.fundamental = IntVector(pc->count(j));
  for (std::size_t i = 0; i < p.fundamental.size(); ++i) {
    auto im = p.to_ambient->image(pc->simplex(j, i));
    if (!im) return std::nullopt;
    p.fundamental[i] = z[im->first] * im->second;
  }
  if (!is_pseudomanifold(p)) return std::nullopt;
  CHARRIG_ASSERT(p.pushed() == z, "resolved pseudomanifold does not push forward to the cycle");
  return p;
}

}  // namespace

ResolveResult resolve_cycle(const SubdivisionTower& t, int depth, int j, const IntVector& z,
                            int max_depth) {
  ComplexPtr x = t.level(depth);
  if (j < 0) throw DegreeError("negative cycle degree");
  if (z.size() != x->count(j)) throw ShapeError("cycle length does not match the complex");
  if (!unit_coefficients(z)) throw InvalidArgument("resolve_cycle expects coefficients in {-1, 0, 1}");
  if (!is_cycle(*x, j, z)) throw NotACycle("chain to resolve is not a cycle");
  IntVector cur = z;
  for (int d = depth; d <= std::max(depth, max_depth); ++d) {
    if (d > depth) cur = t.step(d).subdivide_chain(j, cur);
    if (auto p = glue(t.level(d), d, j, cur)) {
      ResolveResult out{std::move(*p), cur, IntVector(t.level(d)->count(j + 1))};
      return out;
    }
  }
  throw GeometryBudgetExceeded("un-gluing did not produce a pseudomanifold up to depth " +
                               std::to_string(max_depth));
}

Normalization normalize_cycle(const SubdivisionTower& t, int j, const IntVector& z, int max_depth) {
  SplitResult s = split_cycle(t, j, z, max_depth);
  ResolveResult r = resolve_cycle(t, s.depth, j, s.split, max_depth);
  Normalization out;
  out.depth = r.p.depth;
  out.cycle = t.subdivide(0, out.depth, j, z);
  out.split = r.cycle;
  out.witness = t.subdivide(s.depth, out.depth, j + 1, s.witness);
  for (std::size_t i = 0; i < out.witness.size(); ++i) out.witness[i] += r.witness[i];
  out.p = std::move(r.p);
  IntVector rhs = multiply(t.level(out.depth)->boundary(j + 1), out.witness);
  IntVector pushed = out.p.pushed();
  for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] += pushed[i];
  CHARRIG_ASSERT(rhs == out.cycle, "normalization broke the homology identity");
  return out;
}

// --- Collapses -------------------------------------------------------------

CollapseCertificate collapse(const Complex& x) {
  const int dim = x.dimension();
  CollapseCertificate cert;
  if (dim < 0) return cert;
  std::vector<std::vector<char>> alive(static_cast<std::size_t>(dim + 1));
  std::vector<std::vector<std::vector<std::size_t>>> cofaces(static_cast<std::size_t>(dim + 1));
  for (int j = 0; j <= dim; ++j) {
    alive[static_cast<std::size_t>(j)].assign(x.count(j), 1);
    cofaces[static_cast<std::size_t>(j)].resize(x.count(j));
    if (j == dim) continue;
    const ZMatrix& b = x.boundary(j + 1);
    for (std::size_t s = 0; s < b.cols(); ++s)
      for (std::size_t r = 0; r < b.rows(); ++r)
        if (sgn(b(r, s)) != 0) cofaces[static_cast<std::size_t>(j)][r].push_back(s);
  }
  auto alive_cofaces = [&](int j, std::size_t i, std::size_t* only) {
    std::size_t n = 0;
    if (j >= dim) return n;
    for (std::size_t s : cofaces[static_cast<std::size_t>(j)][i])
      if (alive[static_cast<std::size_t>(j + 1)][s]) {
        ++n;
        if (only) *only = s;
      }
    return n;
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (int j = dim - 1; j >= 0; --j)
      for (std::size_t i = 0; i < x.count(j); ++i) {
        if (!alive[static_cast<std::size_t>(j)][i]) continue;
        std::size_t s = 0;
        if (alive_cofaces(j, i, &s) != 1 || alive_cofaces(j + 1, s, nullptr) != 0) continue;
        alive[static_cast<std::size_t>(j)][i] = 0;
        alive[static_cast<std::size_t>(j + 1)][s] = 0;
        ++cert.collapses;
        changed = true;
      }
  }
  for (int j = 0; j <= dim; ++j)
    for (char a : alive[static_cast<std::size_t>(j)])
      if (a) cert.remaining_dimension = j;
  return cert;
}

// --- Bounding --------------------------------------------------------------

namespace {

// Lowers the L1 norm of w by adding top-dimensional cycles.
void reduce_by_cycles(const ZMatrix& cycles, IntVector& w) {
  auto l1 = [](const IntVector& v) {
    Integer n = 0;
    for (const auto& c : v) n += abs(c);
    return n;
  };
  for (bool improved = true; improved;) {
    improved = false;
    for (std::size_t c = 0; c < cycles.cols(); ++c)
      for (int sign : {1, -1}) {
        IntVector trial = w;
        for (std::size_t i = 0; i < trial.size(); ++i) trial[i] += sign * cycles(i, c);
        if (l1(trial) < l1(w)) {
          w = std::move(trial);
          improved = true;
        }
      }
  }
}

}  // namespace

Bounding bound_in_good_neighborhood(const SubdivisionTower& t, const Pseudomanifold& p, int max_depth) {
  const ComplexPtr& base = t.base();
  const int k = p.dimension + 1;
  if (base->dimension() < k)
    throw DimensionError("bounding a " + std::to_string(k - 1) + "-cycle needs ambient dimension >= " +
                         std::to_string(k));
  if (auto defect = pseudomanifold_defect(p); !defect.empty()) throw InvalidArgument("not a pseudomanifold: " + defect);

  Bounding out;
  const IntVector xi = p.pushed();
  const IntVector coarse = t.projection(p.depth).push_chain(k - 1, xi);
  const Homology& h = homology(*base, k - 1);
  out.homology_class = h.class_of(coarse);
  out.homology_group = h.group.describe();
  if (!is_zero(out.homology_class)) return out;
  out.null_homologous = true;

  ComplexPtr x = t.level(p.depth);
  const SNFResult& snf = x->boundary_snf(k);
  auto w = solve_integer(snf, xi);
  CHARRIG_ASSERT(w.has_value(), "null-homologous cycle without an integral filling");

  int depth = p.depth;
  IntVector y, boundary;
  if (base->dimension() == k) {
    reduce_by_cycles(snf.V.columns(snf.rank, snf.V.cols()), *w);
    if (!unit_coefficients(*w))
      throw GeometryBudgetExceeded("top-dimensional filling keeps a coefficient beyond +-1");
    y = std::move(*w);
    boundary = xi;
  } else {
    SplitResult s = split_chain(t, p.depth, k, *w, max_depth);
    depth = s.depth;
    y = std::move(s.split);
    boundary = t.subdivide(p.depth, depth, k - 1, xi);
  }
  CHARRIG_ASSERT(multiply(t.level(depth)->boundary(k), y) == boundary, "filling lost its boundary");

  out.region = good_neighborhood(t, depth, k, y, k - 1, max_depth);
  out.depth = out.region.depth;
  out.chain = t.subdivide(depth, out.depth, k, y);
  out.boundary = t.subdivide(depth, out.depth, k - 1, boundary);
  out.certificate = collapse(*out.region.space);
  return out;
}

// --- Sample cycles and checks ----------------------------------------------

std::vector<NamedMap> standard_maps(const SubdivisionTower& t) {
  const ComplexPtr& x = t.base();
  std::vector<NamedMap> out;
  out.push_back({"identity", SimplicialMap::identity(x)});
  if (x->dimension() < 0) return out;
  out.push_back({"last_vertex", t.step(1).last_vertex});
  auto pt = Complex::create("point", std::vector<Simplex>{Simplex{0}});
  out.push_back({"vertex_inclusion", SimplicialMap(pt, x, {{0, x->simplex(0, 0)[0]}})});
  std::map<Vertex, Vertex> to_pt;
  for (Vertex v : x->vertices()) to_pt[v] = 0;
  out.push_back({"constant", SimplicialMap(x, pt, std::move(to_pt))});
  return out;
}

std::vector<std::pair<std::string, IntVector>> sample_cycles(const Complex& x, int j) {
  std::vector<std::pair<std::string, IntVector>> out;
  if (j < 0 || j > x.dimension()) return out;
  auto add = [&](std::string name, IntVector v) {
    if (is_zero(v)) return;
    for (const auto& [n, w] : out)
      if (w == v) return;
    out.emplace_back(std::move(name), std::move(v));
  };
  const Homology& h = homology(x, j);
  for (std::size_t g = 0; g < h.generators.cols(); ++g) add("generator" + std::to_string(g), h.generators.column(g));
  if (h.generators.cols() > 0) {
    IntVector twice = h.generators.column(0);
    for (auto& c : twice) c *= 2;
    add("twice_generator0", std::move(twice));
  }
  if (x.count(j + 1) > 0) add("boundary0", x.boundary(j + 1).column(0));
  const std::size_t basis = std::min<std::size_t>(h.cycles.basis.cols(), 2);
  for (std::size_t c = 0; c < basis; ++c) add("cycle" + std::to_string(c), h.cycles.basis.column(c));
  return out;
}

namespace {

bool carried_by(const SubdivisionTower& t, int d, int j, const IntVector& chain, const Subcomplex& star) {
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (sgn(chain[i]) == 0) continue;
    auto [cj, ci] = t.carrier(d, 0, j, i);
    if (!star.contains(cj, ci)) return false;
  }
  return true;
}

}  // namespace

CheckList check_cycle_geometry(const SubdivisionTower& t, const std::string& label, int j,
                               const IntVector& z, int max_depth) {
  CheckList out;
  const ComplexPtr& x = t.base();
  const std::string prefix = "geometry." + label + ".";
  auto guarded = [&](const std::string& name, auto&& body) {
    try {
      out.push_back(body());
    } catch (const Error& e) {
      out.push_back(make_check(prefix + name, false, e.what()));
    }
  };

  guarded("good_neighborhood", [&] {
    auto u = good_neighborhood(t, 0, j, z, j, max_depth);
    return make_check(prefix + "good_neighborhood", nonvanishing_cohomology(*u.space, j).empty(),
                      "H^i(U; Z) = 0 for i > " + std::to_string(j) + " at depth " + std::to_string(u.depth),
                      {{"depth", u.depth}, {"simplices", u.space->size()}});
  });

  if (j >= x->dimension()) {
    out.push_back({prefix + "normalize", CheckStatus::kSkipped,
                   "cycle degree equals the ambient dimension", nullptr});
    return out;
  }

  std::optional<Normalization> norm;
  guarded("normalize", [&] {
    norm = normalize_cycle(t, j, z, max_depth);
    const Subcomplex star = closed_star_neighborhood(x, Subcomplex::support(x, j, z));
    const int d = norm->depth;
    IntVector rhs = multiply(t.level(d)->boundary(j + 1), norm->witness);
    IntVector pushed = norm->p.pushed();
    for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] += pushed[i];
    const bool identity = rhs == norm->cycle;
    const bool carried = carried_by(t, d, j + 1, norm->witness, star) && carried_by(t, d, j, pushed, star);
    std::string defect = pseudomanifold_defect(norm->p);
    return make_check(prefix + "normalize", identity && carried && defect.empty(),
                      defect.empty() ? (identity ? (carried ? "z = d b + [P] inside the closed star"
                                                            : "support leaves the closed star")
                                                 : "homology identity fails")
                                     : defect,
                      {{"depth", d},
                       {"top_cells", norm->p.cells->count(j)},
                       {"witness_cells", static_cast<std::size_t>(std::count_if(
                                             norm->witness.begin(), norm->witness.end(),
                                             [](const Integer& c) { return sgn(c) != 0; }))}});
  });
  if (!norm) return out;

  guarded("bound", [&] {
    Bounding b = bound_in_good_neighborhood(t, norm->p, max_depth);
    if (!b.null_homologous) {
      nlohmann::json cls = nlohmann::json::array();
      for (const auto& c : b.homology_class) cls.push_back(c.get_str());
      return make_check(prefix + "bound", true, "NotNullHomologous in H_" + std::to_string(j) + " = " + b.homology_group,
                        {{"class", cls}});
    }
    const bool exact = multiply(t.level(b.depth)->boundary(j + 1), b.chain) == b.boundary;
    bool inside = true;
    try {
      restrict_chain(b.region, j + 1, b.chain);
    } catch (const MismatchError&) {
      inside = false;
    }
    const bool good = nonvanishing_cohomology(*b.region.space, j).empty();
    return make_check(prefix + "bound", exact && inside && good && unit_coefficients(b.chain),
                      "d y = [P] in a " + std::to_string(j) + "-good neighbourhood at depth " +
                          std::to_string(b.depth),
                      {{"depth", b.depth},
                       {"collapses", b.certificate.collapses},
                       {"collapsed_to_dimension", b.certificate.remaining_dimension},
                       {"neighborhood_simplices", b.region.space->size()}});
  });
  return out;
}

}  // namespace charrig
