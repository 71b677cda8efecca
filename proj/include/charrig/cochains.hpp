#pragma once

// Cochains over Z, Q and Q/Z, the Alexander-Whitney cup product, cohomology
// in the three rings, and the two long sequences feeding the character
// diagram: the Bockstein sequence (r, alpha, B) of 0 -> Z -> Q -> Q/Z -> 0
// and the de Rham-type sequence (beta, d, s).
//
// Q stands in for R and Q/Z for R/Z; rational cochains play the role of
// differential forms. Every cochain stores its values as rationals: integral
// for Z, arbitrary for Q, reduced into [0, 1) for Q/Z.

#include "charrig/check.hpp"
#include "charrig/complex.hpp"

#include <string>
#include <vector>

namespace charrig {

enum class Ring { kZ, kQ, kQmodZ };

const char* ring_name(Ring r);  // "Z", "Q", "QmodZ"
Ring parse_ring(std::string_view name);

struct Cochain {
  Ring ring = Ring::kQ;
  int degree = 0;
  RatVector values;

  static Cochain zero(const Complex& x, int degree, Ring ring);
  static Cochain integral(int degree, const IntVector& values);
  static Cochain rational(int degree, RatVector values);
  /// Reduces every value mod 1.
  static Cochain mod_one(int degree, const RatVector& values);

  std::size_t size() const { return values.size(); }
  bool is_zero() const { return charrig::is_zero(values); }
  IntVector integer_values() const;  // MismatchError unless integral

  friend bool operator==(const Cochain& a, const Cochain& b) {
    return a.ring == b.ring && a.degree == b.degree && a.values == b.values;
  }
};

/// Sum/difference over a common ring; Q/Z results are re-reduced.
Cochain operator+(const Cochain& a, const Cochain& b);
Cochain operator-(const Cochain& a, const Cochain& b);
Cochain operator-(const Cochain& a);
Cochain operator*(const Integer& n, const Cochain& a);
/// Rational scaling is only meaningful over Q; RingError otherwise.
Cochain scale(const Rational& q, const Cochain& a);

/// The same values viewed in a wider ring (Z -> Q -> Q/Z). RingError when
/// narrowing.
Cochain change_ring(const Cochain& a, Ring to);

/// Throws ShapeError unless the cochain has count(degree) values.
void require_shape(const Complex& x, const Cochain& a);

/// Pairing with an integral chain of the same degree.
Rational evaluate(const Cochain& a, const IntVector& chain);

/// delta a = a o boundary.
Cochain coboundary(const Complex& x, const Cochain& a);
bool is_cocycle(const Complex& x, const Cochain& a);

/// Alexander-Whitney: (a u b)[v0..v_{p+q}] = a[v0..vp] * b[vp..v_{p+q}].
/// Rings: Z.Z -> Z; Z.Q, Q.Z, Q.Q -> Q; Z.QmodZ, QmodZ.Z -> QmodZ.
Cochain cup(const Complex& x, const Cochain& a, const Cochain& b);

/// Q/Z representatives are lifted to rationals in [0, 1) or (-1/2, 1/2].
enum class LiftStrategy { kUnit, kCentered };
Rational lift_value(const Rational& q, LiftStrategy s);

/// Integral homology H_j(X; Z) in cycle-basis coordinates.
struct Homology {
  int degree = 0;
  KernelBasis cycles;     // basis of Z_j = ker d_j with integral retraction
  FgAbelianGroup group;   // Z_j / B_j
  ZMatrix generators;     // count(j) x g chain representatives

  /// Class of a cycle; the caller guarantees d z = 0.
  IntVector class_of(const IntVector& cycle) const;
};

/// Integral cohomology H^j(X; Z) in cocycle-basis coordinates.
struct Cohomology {
  int degree = 0;
  KernelBasis cocycles;  // basis of ker delta_j
  FgAbelianGroup group;
  ZMatrix generators;    // count(j) x g cocycle representatives
  std::vector<std::size_t> free_slots;  // positions of Z summands in coordinates

  IntVector class_of(const IntVector& cocycle) const;
  /// Coordinates of a rational cocycle in H^j(X; Q) = Q^rank (free part).
  RatVector rational_class_of(const RatVector& cocycle) const;
  /// Rational cocycle with the given H^j(Q) coordinates.
  RatVector rational_representative(const RatVector& coords) const;
};

/// Cached per complex and degree.
const Homology& homology(const Complex& x, int j);
const Cohomology& integral_cohomology(const Complex& x, int j);
/// SNF of delta_j = boundary(j+1)^T, cached.
const SNFResult& coboundary_snf(const Complex& x, int j);

/// An element of H^j in one of the three rings.
///  Z:     coordinates in the integral group, torsion reduced.
///  Q:     coordinates on the free generators.
///  QmodZ: values in [0, 1) on the homology generators of H_j, i.e. the
///         element of Hom(H_j(Z), Q/Z).
struct CohomologyClass {
  Ring ring = Ring::kZ;
  int degree = 0;
  RatVector coords;

  bool is_zero() const { return charrig::is_zero(coords); }
  friend bool operator==(const CohomologyClass& a, const CohomologyClass& b) {
    return a.ring == b.ring && a.degree == b.degree && a.coords == b.coords;
  }
};

CohomologyClass operator+(const CohomologyClass& a, const CohomologyClass& b);
CohomologyClass operator-(const CohomologyClass& a);
CohomologyClass operator*(const Integer& n, const CohomologyClass& a);

/// Summary of H^j(X; ring): "Z^2 + Z/2", "Q", "Q/Z + Z/3", "0".
std::string describe_cohomology(const Complex& x, int j, Ring ring);
/// Number of coordinates of a class.
std::size_t class_size(const Complex& x, int j, Ring ring);
/// Canonical reduction of a coordinate vector.
CohomologyClass make_class(const Complex& x, int j, Ring ring, RatVector coords);

/// Class of a cocycle in its own ring. Throws NotACycle.
CohomologyClass cohomology_class(const Complex& x, const Cochain& a);
/// Cocycle representative in the class's ring. For QmodZ the rational lift
/// is representative_lift; this returns it reduced mod 1.
Cochain representative(const Complex& x, const CohomologyClass& u);
/// Rational cochain T whose reduction represents the Q/Z class u: T takes
/// the lifted values on a basis of cycles and vanishes on a complement.
/// delta T is integral.
RatVector representative_lift(const Complex& x, const CohomologyClass& u,
                              LiftStrategy s = LiftStrategy::kUnit);
/// Canonical generators: unit vectors for Z and Q; for QmodZ the dual
/// generators 1/e on torsion cycles and 1/2 on free cycles.
std::vector<CohomologyClass> sample_generators(const Complex& x, int j, Ring ring);

/// Closed with integral periods on a cycle basis.
bool is_integral_form(const Complex& x, const Cochain& w);
/// A generating family of Lambda^j_Z: delta of the unit (j-1)-cochains and
/// the free integral generators.
std::vector<Cochain> integral_form_generators(const Complex& x, int j);

/// Element of Lambda^j / Lambda^j_Z.
struct QuotientForm {
  Cochain representative;  // ring Q
};
bool quotient_equal(const Complex& x, const QuotientForm& a, const QuotientForm& b);

/// The Bockstein maps of 0 -> Z -> Q -> Q/Z -> 0.
CohomologyClass bockstein(const Complex& x, const CohomologyClass& u,
                          LiftStrategy s = LiftStrategy::kUnit);
CohomologyClass alpha(const Complex& x, const CohomologyClass& q);
CohomologyClass r_map(const Complex& x, const CohomologyClass& c);

/// The de Rham-type maps.
QuotientForm beta(const Complex& x, const CohomologyClass& q);
CohomologyClass s_map(const Complex& x, const Cochain& w);
Cochain d_map(const Complex& x, const QuotientForm& theta);

/// Exactness of both sequences at the nodes touching the diagram for
/// degree k: H^{k-1}(Q), H^{k-1}(Q/Z), H^k(Z) (Bockstein) and H^{k-1}(Q),
/// Lambda^{k-1}/Lambda_Z, Lambda^k_Z (de Rham-type).
CheckList check_exactness(const Complex& x, int k);

/// Subgroup of a finitely generated group given by generator coordinate
/// columns; tests whether every column of `sub` lies in the span of `super`
/// modulo the group relations.
bool subgroup_contains(const FgAbelianGroup& g, const ZMatrix& super, const ZMatrix& sub);
/// Kernel of the homomorphism Z^m -> G given by image columns, as a
/// generating set (columns).
ZMatrix hom_kernel(const FgAbelianGroup& target, const ZMatrix& images);

}  // namespace charrig
