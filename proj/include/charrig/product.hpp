#pragma once

// Product of differential classes,
//   (c1, h1, w1) * (c2, h2, w2) = (c1 u c2, (-1)^k c1 u h2 + h1 u w2, w1 u w2),
// with the Alexander-Whitney cup standing in for the wedge product, and the
// executable ring-axiom grid.

#include "charrig/check.hpp"
#include "charrig/diffcocycle.hpp"
#include "charrig/geometry.hpp"

#include <cstdint>

namespace charrig {

/// Degree k + l product; MismatchError for different complexes.
DiffClass star(const DiffClass& x, const DiffClass& y);

/// Axioms on the seeded grid of degree-k by degree-l classes: closure and
/// well-definedness, graded commutativity at class level, the delta1 /
/// delta2 / i1 / i2 compatibilities, associativity, biadditivity,
/// naturality, and the uniqueness mechanism against the transposed product.
CheckList verify_ring_axioms(const SubdivisionTower& t, int k, int l, std::uint64_t seed);

}  // namespace charrig
