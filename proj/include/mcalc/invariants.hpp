#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "mcalc/factorization.hpp"
#include "mcalc/linalg.hpp"

namespace mcalc {

/// Achiral Lefschetz fibration over D^2: F x D^2 plus one 2-handle per
/// letter, attached along the letter's curve with framing -sign relative to
/// the fiber.
class FibrationOverDisk {
 public:
  explicit FibrationOverDisk(Factorization word);

  const Surface& fiber() const noexcept { return word_.surface(); }
  const Factorization& word() const noexcept { return word_; }

 private:
  Factorization word_;
};

long long euler_characteristic(const FibrationOverDisk& f);

/// H_1(F) modulo the vanishing cycles.
IntVector fibration_first_homology(const FibrationOverDisk& f);

/// Handle linking data on the vanishing-cycle coordinates: L_ii = -sign_i,
/// L_ij = <c_i, c_j> for i < j and 0 below the diagonal. The form
/// x^T L y is symmetric on the kernel of the cycle matrix.
IntMatrix linking_matrix(const Factorization& word);

struct IntersectionForm {
  std::size_t b2 = 0;
  IntMatrix gram;  // b2 x b2, in the saturated kernel basis
  Inertia inertia;
  Integer determinant = 1;

  long signature() const { return inertia.signature(); }
  bool even() const;
  bool definite() const { return inertia.zero == 0 && (inertia.positive == 0 || inertia.negative == 0); }
  bool unimodular() const { return determinant == 1 || determinant == -1; }
};

IntersectionForm intersection_form(const FibrationOverDisk& f);

/// Open book with bounded page, recorded through its homological monodromy
/// and its variation map H_1(F, dF) -> H_1(F). Relative classes are written
/// in the dual basis, so a single twist t_c^s has variation s * c c^T.
class OpenBook {
 public:
  /// The open book on the boundary of a fibration over the disk.
  static OpenBook bounding(const Factorization& word);
  /// Only connected bindings: for one boundary component the variation is
  /// determined by the action. Throws std::invalid_argument otherwise.
  static OpenBook from_action(const ActionMatrix& action);

  const Surface& page() const noexcept { return action_.surface(); }
  const ActionMatrix& action() const noexcept { return action_; }
  const IntMatrix& variation() const noexcept { return variation_; }

 private:
  OpenBook(ActionMatrix action, IntMatrix variation);

  ActionMatrix action_;
  IntMatrix variation_;
};

/// H_1 of the open-book 3-manifold: the cokernel of the variation, which
/// equals coker(action - id) when the binding is connected.
IntVector openbook_first_homology(const OpenBook& ob);

struct MatchResult {
  bool matches = false;
  IntMatrix defect;  // action(neg) * action(pos) - id
};

/// Homological matching of the boundary open books.
MatchResult matches(const FibrationOverDisk& pos, const FibrationOverDisk& neg);

/// A PALF and a NALF over complementary disks glued along their common
/// boundary open book. Throws std::invalid_argument for impure signs, a
/// surface mismatch, or sides whose actions do not cancel.
class FoldedAssembly {
 public:
  FoldedAssembly(FibrationOverDisk positive_side, FibrationOverDisk negative_side);
  static FoldedAssembly from_split(const ChiralSplit& split);

  const FibrationOverDisk& positive_side() const noexcept { return positive_; }
  const FibrationOverDisk& negative_side() const noexcept { return negative_; }
  const Surface& page() const noexcept { return positive_.fiber(); }

 private:
  FibrationOverDisk positive_;
  FibrationOverDisk negative_;
};

struct InvariantReport {
  long long euler = 0;
  std::optional<IntVector> h1;  // nullopt: indeterminate
  std::optional<std::size_t> b2;
  std::optional<IntMatrix> gram;
  long signature = 0;
  bool closed = false;
  /// Set after binding surgery, which cannot see the framing in
  /// pi_1(SO(3)) = Z/2 and so cannot tell S^2 x S^2 from its twisted twin.
  bool framing_blind = false;

  std::optional<bool> even() const;
  std::optional<bool> definite() const;
  std::optional<Integer> determinant() const;
};

/// Human-readable group, e.g. "0", "Z^2", "Z/2 + Z".
std::string describe_group(std::span<const Integer> factors);

InvariantReport fibration_report(const FibrationOverDisk& f);
InvariantReport folded_invariants(const FoldedAssembly& fa);

/// Coordinates of the binding component through d_m (the last boundary
/// component) in the H_1 presentation that folded_invariants reports.
IntVector binding_class(const FoldedAssembly& fa);

enum class SurgeryDirection {
  circle_to_sphere,  // remove S^1 x D^3, glue in D^2 x S^2: chi + 2
  sphere_to_circle,  // the reverse: chi - 2
};

/// Surgery bookkeeping. For circle_to_sphere with a known H_1 and a
/// supplied class (coordinates in the report's H_1 presentation) the new H_1
/// is the quotient by that class; otherwise H_1 and b2 become indeterminate.
InvariantReport binding_surgery(const InvariantReport& report, SurgeryDirection direction,
                                std::optional<IntVector> curve_class = std::nullopt);

}  // namespace mcalc
