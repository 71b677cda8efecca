#pragma once

// Characters: homomorphisms f: Z_{k-1} -> Q/Z together with a closed form
// omega with integral periods and f(da) = omega(a) mod 1 on k-chains. This
// is the hom-on-cycles model of the differential classes; phi_direct and
// phi_good compute the equivalence from differential cocycles two ways.
//
// f is stored by its values on the cycle basis of homology(x, k-1).cycles.
// omega is part of the data: two compatible forms may differ by a closed
// integral cochain.

#include "charrig/check.hpp"
#include "charrig/diffcocycle.hpp"
#include "charrig/geometry.hpp"
#include "charrig/serialize.hpp"

#include <vector>

namespace charrig {

struct Character {
  ComplexPtr space;
  int k = 1;
  RatVector f;    // in [0, 1), one value per cycle-basis vector
  Cochain omega;  // Q, degree k

  friend bool operator==(const Character& a, const Character& b) {
    return a.space == b.space && a.k == b.k && a.f == b.f && a.omega == b.omega;
  }
};

/// Builds and validates a character; throws InvalidArgument when the
/// compatibility or integrality fails.
Character make_character(ComplexPtr x, int k, RatVector f, Cochain omega);
Character zero_character(ComplexPtr x, int k);
bool is_character(const Complex& x, int k, const RatVector& f, const Cochain& omega);

Character operator+(const Character& a, const Character& b);
Character operator-(const Character& a);
Character operator-(const Character& a, const Character& b);

/// f(z) for a (k-1)-cycle z; throws NotACycle.
Rational evaluate(const Character& ch, const IntVector& z);

/// Rational (k-1)-cochain T with T(z) = lift(f(z)) on the cycle basis and
/// zero on the complement of Z_{k-1} (SNF-adapted).
Cochain character_lift(const Character& ch, LiftStrategy s = LiftStrategy::kUnit);
/// delta2 of a character: the class of omega - dT.
CohomologyClass delta2_via_lift(const Character& ch, LiftStrategy s = LiftStrategy::kUnit);

/// f = h on cycles mod 1, omega carried along.
Character phi_direct(const DiffClass& x);
/// (omega - dT, T, omega).
DiffClass phi_inverse(const Character& ch);

/// Hom-model transformations: i1(u) evaluates u in Hom(H_{k-1}, Q/Z) on the
/// homology class of each cycle; i2(theta) = (theta on cycles, d theta).
Character hom_i1(const ComplexPtr& x, const CohomologyClass& u);
Character hom_i2(const ComplexPtr& x, int k, const QuotientForm& theta);
/// Pullback along phi: Y -> X: f'(z) = f(phi_# z), omega' = phi^* omega.
Character pullback(const SimplicialMap& phi, const Character& ch);

struct PhiGood {
  Rational value;                                // in [0, 1)
  std::vector<std::pair<int, Rational>> by_depth;  // value on every good depth
  bool consistent() const;
};

/// theta(z) mod 1 for theta = lift_through_i2 of x restricted to each good
/// neighbourhood of |z|; every good depth up to max_depth is evaluated.
/// Throws GeometryBudgetExceeded when none is good, NotACycle.
PhiGood phi_good(const SubdivisionTower& t, const DiffClass& x, const IntVector& z,
                 int max_depth = kDefaultMaxSubdiv);
/// Same with precomputed neighbourhoods of |z| (good_neighborhoods(t, 0,
/// k-1, z, k-1, ...)).
PhiGood phi_good(const SubdivisionTower& t, const std::vector<Neighborhood>& us, const DiffClass& x,
                 const IntVector& z);

/// Random valid characters: T random, omega = dT + an integral cocycle.
std::vector<Character> sample_characters(const ComplexPtr& x, int k, std::uint64_t seed,
                                         std::size_t count = 20);

Json character_to_json(const Character& ch);
Character character_from_json(const ComplexPtr& x, const Json& doc);

/// Equivalence suite for degree k: round trips, phi_good against
/// phi_direct, the compatibility properties, the ladder rows and the
/// pseudomanifold evaluation identity.
CheckList check_phi(const SubdivisionTower& t, int k, std::uint64_t seed,
                    int max_depth = kDefaultMaxSubdiv);

}  // namespace charrig
