#pragma once

// Exact integer linear algebra: Smith normal form and everything derived
// from it (integer and rational solves, kernels, cokernels).

#include "charrig/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace charrig {

/// U * A * V = S with U, V unimodular and S diagonal, d1 | d2 | ... > 0.
/// The inverses are tracked alongside so callers never invert.
struct SNFResult {
  ZMatrix U, V, S;
  ZMatrix U_inv, V_inv;
  std::size_t rank = 0;

  IntVector invariant_factors() const;  // the nonzero diagonal entries

  /// SNF of A^T obtained by transposing this one.
  SNFResult transposed() const;
};

SNFResult smith_normal_form(const ZMatrix& a);

/// Some x with A x = b over Z, or nullopt. Throws ShapeError.
std::optional<IntVector> solve_integer(const ZMatrix& a, const IntVector& b);
std::optional<IntVector> solve_integer(const SNFResult& snf, const IntVector& b);

/// Some x with A x = b over Q, or nullopt.
std::optional<RatVector> solve_rational(const SNFResult& snf, const RatVector& b);

/// Columns form a Z-basis of ker A.
ZMatrix kernel_basis(const ZMatrix& a);

/// Kernel basis together with an integral retraction onto it:
/// coords * basis = I and coords(x) are the basis coordinates of any x in ker A.
struct KernelBasis {
  ZMatrix basis;   // n x z
  ZMatrix coords;  // z x n
};

KernelBasis kernel_with_coordinates(const SNFResult& snf);

/// A finitely generated abelian group presented as a quotient of Z^m.
/// Coordinates list the torsion summands (ascending invariant factors)
/// followed by the free summands; order 0 marks a copy of Z.
struct FgAbelianGroup {
  std::vector<Integer> orders;
  ZMatrix gen_lift;  // m x g: coordinate vectors -> ambient vectors
  ZMatrix project;   // g x m: ambient vectors -> coordinates (before reduction)

  std::size_t generator_count() const { return orders.size(); }
  std::size_t rank() const;
  std::vector<Integer> torsion() const;
  bool is_trivial() const { return orders.empty(); }

  /// Canonical representative: torsion entries reduced into [0, order).
  IntVector reduce(IntVector coords) const;
  IntVector coordinates(const IntVector& ambient) const;
  IntVector lift(const IntVector& coords) const;

  /// e.g. "Z^2 + Z/2", "0".
  std::string describe() const;
};

/// Z^rows / im A.
FgAbelianGroup cokernel(const ZMatrix& a);
FgAbelianGroup cokernel(const SNFResult& snf);

}  // namespace charrig
