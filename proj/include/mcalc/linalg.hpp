#pragma once

#include <cstddef>
#include <vector>

#include "mcalc/int_matrix.hpp"

namespace mcalc {

/// left * A * right == diag(invariant_factors), padded with zeros to the
/// shape of A. The factors form a divisibility chain with zeros last and
/// both transforms are unimodular.
struct SmithDecomposition {
  IntVector invariant_factors;  // length min(rows, cols), all >= 0
  IntMatrix left;               // rows x rows
  IntMatrix right;              // cols x cols

  std::size_t rank() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Saturated basis of {v in Z^cols : A v = 0}.
std::vector<IntVector> kernel_basis(const IntMatrix& a);

/// The group Z^rows / image(A) as (torsion coefficients, then one 0 per
/// free summand). Factors equal to 1 are dropped, so the trivial group is
/// the empty list.
IntVector cokernel_invariants(const IntMatrix& a);

/// Coordinates on Z^rows / image(A) matching cokernel_invariants(A): the
/// projection sends x to one coordinate per factor, reduced into [0, d)
/// for torsion factors.
struct CokernelPresentation {
  IntVector factors;
  IntMatrix projection;  // factors.size() x rows

  IntVector coordinates(std::span<const Integer> x) const;
};

CokernelPresentation cokernel_presentation(const IntMatrix& a);

struct Inertia {
  std::size_t positive = 0;
  std::size_t zero = 0;
  std::size_t negative = 0;

  long signature() const { return static_cast<long>(positive) - static_cast<long>(negative); }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Exact inertia of a symmetric matrix by rational congruence
/// diagonalization. Throws std::invalid_argument if Q is not symmetric.
Inertia signature_symmetric(const IntMatrix& q);

Integer determinant(const IntMatrix& a);
std::size_t rank(const IntMatrix& a);

/// Inverse of a unimodular matrix; throws std::invalid_argument otherwise.
IntMatrix unimodular_inverse(const IntMatrix& a);

}  // namespace mcalc
