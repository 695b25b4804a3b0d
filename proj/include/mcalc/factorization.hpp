#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mcalc/surface.hpp"

namespace mcalc {

/// One Lefschetz letter: t_c (positive, framing -1 relative to the fiber)
/// or t_c^{-1} (negative, framing +1).
struct SignedTwist {
  CurveClass curve;
  Sign sign;

  friend bool operator==(const SignedTwist&, const SignedTwist&) = default;
};

/// Ordered word of signed Dehn twists on one surface. The first letter acts
/// first: the word t1 t2 ... tk has action M_k ... M_2 M_1.
class Factorization {
 public:
  explicit Factorization(Surface surface, std::vector<SignedTwist> letters = {});

  const Surface& surface() const noexcept { return surface_; }
  std::span<const SignedTwist> letters() const noexcept { return letters_; }
  const SignedTwist& operator[](std::size_t i) const { return letters_.at(i); }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  std::size_t count(Sign sign) const;
  /// Every letter has the given sign (vacuously true for the empty word).
  bool is_pure(Sign sign) const { return count(sign) == size(); }

  Factorization concatenated(const Factorization& tail) const;

  /// Largest absolute coordinate over all letters.
  Integer max_abs_coefficient() const;
  /// Positions of letters twisting along radical (boundary-parallel) classes.
  std::vector<std::size_t> radical_letters() const;

  /// Columns are the letters' curve classes: rank x size.
  IntMatrix cycle_matrix() const;

  std::string to_string() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  Surface surface_;
  std::vector<SignedTwist> letters_;
};

ActionMatrix word_action(const Factorization& word);

enum class MoveDirection { left, right };

/// A Hurwitz move on the adjacent pair (position, position + 1), 0-based.
struct HurwitzMove {
  MoveDirection direction;
  std::size_t position;

  std::string to_string() const;
  friend bool operator==(const HurwitzMove&, const HurwitzMove&) = default;
};

/// (t_i, t_{i+1}) -> (t_i^{-1}(c_{i+1}) twist with the sign of t_{i+1}, t_i).
/// Throws std::out_of_range unless position + 1 < size.
Factorization hurwitz_left(const Factorization& word, std::size_t position);

/// Inverse of hurwitz_left at the same position:
/// (t_i, t_{i+1}) -> (t_{i+1}, t_{i+1}(c_i) twist with the sign of t_i).
Factorization hurwitz_right(const Factorization& word, std::size_t position);

Factorization apply_move(const Factorization& word, const HurwitzMove& move);
Factorization apply_moves(Factorization word, std::span<const HurwitzMove> moves);

/// A mixed word rewritten as all positive letters followed by all negative
/// letters, with the Hurwitz moves that produce it.
struct ChiralSplit {
  Factorization positive;
  Factorization negative;
  std::vector<HurwitzMove> certificate;
  /// origin[k] is the input position whose letter became letter k of
  /// positive followed by negative.
  std::vector<std::size_t> origin;

  Factorization combined() const { return positive.concatenated(negative); }
};

/// Bubble negatives rightward: repeatedly apply hurwitz_left at the leftmost
/// (negative, positive) pair. Uses exactly (number of such inversions) moves.
ChiralSplit chiral_split(const Factorization& word);

/// Checks a split against its input without trusting the splitter: sign
/// purity, letter counts, certificate replay and action equality.
bool verify_split(const Factorization& input, const ChiralSplit& split);

/// Where the 1-handle of a stabilization lands.
enum class StabilizationModel {
  /// Both feet on the last boundary component: (g, m) -> (g, m + 1); the
  /// new boundary class d_m is appended to the basis.
  split_boundary,
  /// Feet on the last two boundary components: (g, m) -> (g + 1, m - 1);
  /// d_(m-1) becomes a_(g+1) and the handle core gives b_(g+1).
  merge_boundaries,
};

struct Stabilization {
  StabilizationModel model = StabilizationModel::split_boundary;
  Sign sign = Sign::positive;
  /// Class of the arc closed up inside the old page; empty means zero.
  IntVector arc_class;
};

struct StabilizedSurface {
  Surface surface;
  IntMatrix embedding;  // new rank x old rank
  IntVector handle_class;  // the generator dual to the new handle
};

StabilizedSurface stabilized_surface(const Surface& surface, StabilizationModel model);

/// Appends one letter of the given sign whose class crosses the new handle
/// once. Throws std::invalid_argument on a closed surface, or for the merge
/// model on fewer than two boundary components.
Factorization stabilize(const Factorization& word, const Stabilization& spec);

/// Reverses the letters and flips every sign: the action is inverted.
Factorization reverse_inverse(const Factorization& word);

}  // namespace mcalc
