#pragma once

// Combinatorial stand-ins for the smooth geometry behind the character
// equivalence: good neighbourhoods (closed stars in an iterated barycentric
// subdivision whose integral cohomology vanishes above a level), turning an
// integral cycle into the fundamental cycle of an oriented pseudomanifold
// (split multiplicities, then un-glue branch faces), and bounding a
// null-homologous pseudomanifold inside a good neighbourhood.
//
// Level d of a tower is Sd^d X. Chains move down the tower by the
// subdivision chain maps and back up by the composite last-vertex map
// pi_d: Sd^d X -> X, which satisfies (pi_d)_# Sd^d = id.

#include "charrig/check.hpp"
#include "charrig/cochains.hpp"

#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace charrig {

inline constexpr int kDefaultMaxSubdiv = 2;

class SubdivisionTower {
 public:
  explicit SubdivisionTower(ComplexPtr base);

  const ComplexPtr& base() const noexcept { return base_; }
  /// Sd^d X, built on first use.
  ComplexPtr level(int d) const;
  /// The subdivision taking level d-1 to level d (d >= 1).
  const Subdivision& step(int d) const;
  /// pi_d: level d -> level 0.
  const SimplicialMap& projection(int d) const;

  /// Sd^(to-from) of a j-chain living on level `from`.
  IntVector subdivide(int from, int to, int j, const IntVector& chain) const;
  /// Smallest simplex of level `to` (<= d) containing simplex i of level d.
  std::pair<int, std::size_t> carrier(int d, int to, int j, std::size_t i) const;
  /// Pullback of a cochain on level 0 along pi_d.
  Cochain pull(int d, const Cochain& c) const;

 private:
  void ensure(int d) const;

  ComplexPtr base_;
  SimplicialMap identity_;
  mutable std::mutex mutex_;
  mutable std::deque<Subdivision> steps_;       // steps_[d-1]: level d-1 -> d
  mutable std::deque<SimplicialMap> projections_;  // projections_[d-1]: level d -> 0
};

/// Description of H^j(U; Z) for level < j <= dim U, empty when all vanish.
std::vector<std::string> nonvanishing_cohomology(const Complex& u, int level);

struct Neighborhood {
  int depth = 0;        // tower level
  int level = 0;        // H^j(U; Z) = 0 for j > level
  Subcomplex region;    // inside tower level `depth`
  ComplexPtr space;     // region as a standalone complex
  std::vector<std::string> obstructions;  // nonvanishing groups; empty iff good
  bool good() const noexcept { return obstructions.empty(); }
};

/// Closed star of the support of a j-chain on level `depth`, with the
/// direct vanishing check above `level`.
Neighborhood star_neighborhood(const SubdivisionTower& t, int depth, int j, const IntVector& chain,
                               int level);

/// Good neighbourhood of the support of a j-chain given on level `from`:
/// the first depth in [from, max_depth] whose closed star of the transported
/// support is `level`-good. Throws GeometryBudgetExceeded.
Neighborhood good_neighborhood(const SubdivisionTower& t, int from, int j, const IntVector& chain,
                               int level, int max_depth = kDefaultMaxSubdiv);

/// Every good depth in [from, max_depth] (nested closed stars).
std::vector<Neighborhood> good_neighborhoods(const SubdivisionTower& t, int from, int j,
                                             const IntVector& chain, int level,
                                             int max_depth = kDefaultMaxSubdiv);

/// Restriction of a cochain on the tower level to the neighbourhood.
Cochain restrict_cochain(const Neighborhood& u, const Cochain& c);
/// A chain on the tower level supported in U, as a chain of U.space.
IntVector restrict_chain(const Neighborhood& u, int j, const IntVector& chain);

/// Oriented pseudomanifold with a simplexwise injective map into a tower
/// level. In dimension 0 it is a finite set of signed points.
struct Pseudomanifold {
  int dimension = 0;
  int depth = 0;
  ComplexPtr cells;
  IntVector fundamental;  // +-1 on every top cell of `cells`
  std::shared_ptr<const SimplicialMap> to_ambient;

  /// Pushforward of the fundamental cycle to the tower level.
  IntVector pushed() const { return to_ambient->push_chain(dimension, fundamental); }
};

/// Every (n-1)-simplex is a face of exactly two n-simplices with cancelling
/// orientations; the map is injective on every simplex and on top cells.
bool is_pseudomanifold(const Pseudomanifold& p);
/// Diagnostic for the first violated condition, empty when valid.
std::string pseudomanifold_defect(const Pseudomanifold& p);

struct SplitResult {
  int depth = 0;
  IntVector chain;    // Sd^(depth-from) of the input
  IntVector split;    // coefficients in {-1, 0, 1}
  IntVector witness;  // degree j+1, chain = split + d(witness)
};

/// Pushes excess multiplicity across cofaces inside the closed star of the
/// chain's support until every coefficient is -1, 0 or 1, subdividing when
/// no move helps. Boundaries are preserved. Throws DimensionError when
/// j >= dim X, GeometryBudgetExceeded past max_depth.
SplitResult split_chain(const SubdivisionTower& t, int from, int j, const IntVector& chain,
                        int max_depth = kDefaultMaxSubdiv);
/// split_chain for a cycle on level 0 (NotACycle otherwise).
SplitResult split_cycle(const SubdivisionTower& t, int j, const IntVector& z,
                        int max_depth = kDefaultMaxSubdiv);

struct ResolveResult {
  Pseudomanifold p;
  IntVector cycle;    // the input, subdivided to p.depth
  IntVector witness;  // degree j+1, cycle = p.pushed() + d(witness)
};

/// Un-glues a +-1 cycle on level `depth` at every branch face, pairing
/// cancelling sheets of the same component first. Throws InvalidArgument for
/// other coefficients, NotACycle, and GeometryBudgetExceeded when no depth
/// up to max_depth yields a pseudomanifold.
ResolveResult resolve_cycle(const SubdivisionTower& t, int depth, int j, const IntVector& z,
                            int max_depth = kDefaultMaxSubdiv);

struct Normalization {
  int depth = 0;
  IntVector cycle;    // Sd^depth z
  IntVector split;
  IntVector witness;  // cycle = d(witness) + p.pushed()
  Pseudomanifold p;
};

Normalization normalize_cycle(const SubdivisionTower& t, int j, const IntVector& z,
                              int max_depth = kDefaultMaxSubdiv);

struct CollapseCertificate {
  std::size_t collapses = 0;
  int remaining_dimension = -1;  // of what is left after greedy collapsing
};

/// Greedy elementary collapses through free faces.
CollapseCertificate collapse(const Complex& x);

struct Bounding {
  bool null_homologous = false;
  IntVector homology_class;   // class of pi_# xi in H_{k-1}(X; Z)
  std::string homology_group;
  int depth = 0;              // level of y and U'
  IntVector chain;            // y, degree k, coefficients +-1
  IntVector boundary;         // xi transported to `depth`; d y = boundary
  Neighborhood region;        // U', (k-1)-good
  CollapseCertificate certificate;
};

/// Bounds the fundamental cycle of p inside a (k-1)-good neighbourhood of
/// the bounding chain, or reports the nonzero homology class.
Bounding bound_in_good_neighborhood(const SubdivisionTower& t, const Pseudomanifold& p,
                                    int max_depth = kDefaultMaxSubdiv);

struct NamedMap {
  std::string name;
  SimplicialMap map;
};
/// The simplicial maps the naturality checks run over: identity of X, the
/// last-vertex map Sd X -> X, the inclusion of a point at the first vertex,
/// and the constant map X -> point.
std::vector<NamedMap> standard_maps(const SubdivisionTower& t);

/// Named cycles used by the geometry checks: homology generators, a
/// few cycle-basis vectors and small multiples.
std::vector<std::pair<std::string, IntVector>> sample_cycles(const Complex& x, int j);

/// Normalization and neighbourhood checks for one cycle on level 0.
CheckList check_cycle_geometry(const SubdivisionTower& t, const std::string& label, int j,
                               const IntVector& z, int max_depth = kDefaultMaxSubdiv);

}  // namespace charrig
