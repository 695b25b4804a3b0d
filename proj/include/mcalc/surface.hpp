#pragma once

#include <cstddef>
#include <string>

#include "mcalc/int_matrix.hpp"

namespace mcalc {

/// Twist handedness. Positive is right-handed.
enum class Sign : int { positive = 1, negative = -1 };

constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }
constexpr Sign flip(Sign s) noexcept { return s == Sign::positive ? Sign::negative : Sign::positive; }

/// Compact oriented surface of genus g with m boundary components, seen
/// through H_1 with the ordered basis a1,b1,...,ag,bg,d1,...,d(m-1).
///
/// <a_i, b_i> = +1 and every other basis pairing vanishes; the boundary
/// classes d_j span the radical of the pairing.
class Surface {
 public:
  Surface(unsigned genus, unsigned boundary_components);

  unsigned genus() const noexcept { return genus_; }
  unsigned boundary_components() const noexcept { return boundary_; }
  bool is_closed() const noexcept { return boundary_ == 0; }

  /// 2g + m - 1 for bounded surfaces, 2g for closed ones.
  std::size_t rank() const noexcept;
  /// Rank of the symplectic part a1..bg.
  std::size_t symplectic_rank() const noexcept { return 2 * std::size_t{genus_}; }

  /// Euler characteristic 2 - 2g - m.
  long euler_characteristic() const noexcept;

  std::string basis_label(std::size_t index) const;

  /// The skew matrix J with <x, y> = x^T J y.
  IntMatrix pairing_matrix() const;
  Integer pair(std::span<const Integer> x, std::span<const Integer> y) const;

  std::string to_string() const;

  friend bool operator==(const Surface&, const Surface&) = default;

 private:
  unsigned genus_;
  unsigned boundary_;
};

/// A primitive nonzero class in H_1 of a surface, standing for a
/// nonseparating simple closed curve.
class CurveClass {
 public:
  /// Throws std::invalid_argument on rank mismatch, the zero vector, or a
  /// non-primitive vector. Non-primitive input is rejected, never rescaled.
  CurveClass(Surface surface, IntVector coordinates);

  const Surface& surface() const noexcept { return surface_; }
  const IntVector& coordinates() const noexcept { return coords_; }

  /// True when the class pairs trivially with everything (a combination of
  /// boundary classes). Twists about such classes act as the identity.
  bool is_radical() const;

  std::string to_string() const;

  friend bool operator==(const CurveClass&, const CurveClass&) = default;

 private:
  Surface surface_;
  IntVector coords_;
};

/// Throws std::invalid_argument when the classes live on different surfaces.
Integer intersection_pairing(const CurveClass& x, const CurveClass& y);

/// Automorphism of H_1 induced by a mapping class, acting on column vectors.
class ActionMatrix {
 public:
  /// Throws std::invalid_argument unless the matrix is square of the
  /// surface rank, preserves the pairing and has determinant +-1.
  ActionMatrix(Surface surface, IntMatrix matrix);

  static ActionMatrix identity(const Surface& surface);

  const Surface& surface() const noexcept { return surface_; }
  const IntMatrix& matrix() const noexcept { return matrix_; }

  /// `next` after `*this`: the matrix next * this.
  ActionMatrix then(const ActionMatrix& next) const;
  ActionMatrix inverse() const;
  bool is_identity() const { return matrix_.is_identity(); }

  friend bool operator==(const ActionMatrix&, const ActionMatrix&) = default;

 private:
  struct Unchecked {};
  ActionMatrix(Surface surface, IntMatrix matrix, Unchecked);

  friend ActionMatrix twist_action(const CurveClass&, Sign);

  Surface surface_;
  IntMatrix matrix_;
};

/// M^T J M == J, checked directly on the matrix.
bool preserves_pairing(const Surface& surface, const IntMatrix& m);

/// The transvection x -> x + sign * <x, c> * c.
ActionMatrix twist_action(const CurveClass& c, Sign sign);

/// M * c. Throws std::invalid_argument on a surface mismatch.
CurveClass map_curve(const ActionMatrix& m, const CurveClass& c);

struct CappedSurface {
  Surface surface;       // genus unchanged, no boundary
  IntMatrix projection;  // 2g x rank(original): drops the d_j coordinates
};

/// Caps every boundary component. Throws std::invalid_argument if the
/// surface is already closed.
CappedSurface cap_boundary(const Surface& surface);

}  // namespace mcalc
