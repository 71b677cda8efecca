#pragma once

// Differential cocycles (c, h, w): c an integral k-cocycle, h a rational
// (k-1)-cochain, w a rational k-form, with dh = w - c. Two cocycles are
// equivalent when they differ by (db, -b + ds, 0) for an integral
// (k-1)-cochain b and a rational (k-2)-cochain s. Classes form the group
// G^k of the character diagram
//
//        H^{k-1}(Q)  --alpha-->  H^{k-1}(Q/Z)  --  -B  -->  H^k(Z)
//            \                 i1 \         / delta2              / r
//         beta \                    G^k                          /
//               \               i2 /    \ delta1                /
//        Lambda^{k-1}/Lambda_Z  --d-->  Lambda^k_Z  --s-->  H^k(Q)

#include "charrig/check.hpp"
#include "charrig/cochains.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace charrig {

struct DiffClass {
  ComplexPtr space;
  int k = 1;
  Cochain c;      // Z, degree k
  Cochain h;      // Q, degree k-1
  Cochain omega;  // Q, degree k
};

/// Validates dc = 0 and dh = w - c; throws InvalidArgument, NotACycle,
/// RingError, ShapeError, DegreeError.
DiffClass make_diff_class(ComplexPtr x, Cochain c, Cochain h, Cochain omega);
DiffClass zero_class(ComplexPtr x, int k);
/// True when the invariants hold (no throw).
bool is_diff_cocycle(const DiffClass& x);

DiffClass operator+(const DiffClass& a, const DiffClass& b);
DiffClass operator-(const DiffClass& a);
DiffClass operator-(const DiffClass& a, const DiffClass& b);
DiffClass operator*(const Integer& n, const DiffClass& a);

/// x + (db, -b + ds, 0).
DiffClass shift(const DiffClass& x, const Cochain& b, const Cochain& s);

/// (b, s) with x - y = (db, -b + ds, 0).
struct EquivalenceWitness {
  Cochain b;  // Z, degree k-1
  Cochain s;  // Q, degree k-2
};
/// Witness that x and y represent the same class, or nullopt. Throws
/// MismatchError for different complexes or degrees.
std::optional<EquivalenceWitness> equivalence_witness(const DiffClass& x, const DiffClass& y);
bool class_equal(const DiffClass& x, const DiffClass& y);

/// The four natural transformations.
DiffClass i1(const ComplexPtr& x, const CohomologyClass& u, LiftStrategy s = LiftStrategy::kUnit);
DiffClass i2(const ComplexPtr& x, const QuotientForm& theta);
Cochain delta1(const DiffClass& x);
CohomologyClass delta2(const DiffClass& x);

/// Componentwise pullback along phi: Y -> X of a class on X.
DiffClass pullback(const SimplicialMap& phi, const DiffClass& x);
/// Pullback of a cohomology class (any ring) along phi.
CohomologyClass pullback(const SimplicialMap& phi, const CohomologyClass& u);

/// theta with i2(theta) equivalent to x. Throws NotInImage when delta2(x) != 0.
QuotientForm lift_through_i2(const DiffClass& x);

/// Constructive surjectivity: a class with delta2 = g, and one with
/// delta1 = w for w in Lambda^k_Z (NotInImage when w is not integral).
DiffClass delta2_preimage(const ComplexPtr& x, const CohomologyClass& g);
DiffClass delta1_preimage(const ComplexPtr& x, const Cochain& w);

/// Holonomy of x around a (k-1)-cycle: h(z) mod 1. Throws NotACycle.
Rational holonomy(const DiffClass& x, const IntVector& z);

/// Deterministic random source shared by all samplers; the modulo draw keeps
/// sequences identical across standard libraries.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : rng_() % n; }
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  /// Small rational with numerator in [-2, 2] and denominator in {1, 2, 3};
  /// zero with probability about one half.
  Rational small_rational();
  /// Sparse small cochains.
  Cochain rational_cochain(const Complex& x, int degree);
  Cochain integral_cochain(const Complex& x, int degree);

 private:
  std::mt19937_64 rng_;
};

/// A labelled sample class.
struct SampleClass {
  std::string label;
  DiffClass value;
};

/// Seeded family of degree-k classes: i1 of Q/Z generators, i2 of random
/// rational forms, delta2-preimages of H^k(Z) generators, delta1-preimages of
/// integral forms, and random sums perturbed by random equivalences.
std::vector<SampleClass> sample_classes(const ComplexPtr& x, int k, std::uint64_t seed,
                                        std::size_t minimum = 20);

/// Both diagonal sequences (constructive injectivity, kernel = image and
/// surjectivity) and the four diamond faces, on generators and samples.
CheckList check_character_diagram(const ComplexPtr& x, int k, std::uint64_t seed);

/// Naturality of i1, i2, delta1, delta2 under phi: Y -> X on samples from X.
CheckList check_naturality(const SimplicialMap& phi, int k, const std::vector<SampleClass>& samples);

}  // namespace charrig
