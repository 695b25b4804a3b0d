#include "mcalc/factorization.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace mcalc {

Factorization::Factorization(Surface surface, std::vector<SignedTwist> letters)
    : surface_(surface), letters_(std::move(letters)) {
  for (const auto& letter : letters_)
    if (!(letter.curve.surface() == surface_))
      throw std::invalid_argument("factorization letter lives on a different surface");
}

std::size_t Factorization::count(Sign sign) const {
  return static_cast<std::size_t>(
      std::count_if(letters_.begin(), letters_.end(), [sign](const SignedTwist& t) { return t.sign == sign; }));
}

Factorization Factorization::concatenated(const Factorization& tail) const {
  if (!(tail.surface_ == surface_)) throw std::invalid_argument("cannot concatenate words on different surfaces");
  std::vector<SignedTwist> letters = letters_;
  letters.insert(letters.end(), tail.letters_.begin(), tail.letters_.end());
  return Factorization(surface_, std::move(letters));
}

Integer Factorization::max_abs_coefficient() const {
  Integer best = 0;
  for (const auto& letter : letters_)
    for (const auto& x : letter.curve.coordinates())
      if (abs(x) > best) best = abs(x);
  return best;
}

std::vector<std::size_t> Factorization::radical_letters() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < letters_.size(); ++i)
    if (letters_[i].curve.is_radical()) out.push_back(i);
  return out;
}

IntMatrix Factorization::cycle_matrix() const {
  IntMatrix m(surface_.rank(), letters_.size());
  for (std::size_t c = 0; c < letters_.size(); ++c) {
    const auto& v = letters_[c].curve.coordinates();
    for (std::size_t r = 0; r < v.size(); ++r) m(r, c) = v[r];
  }
  return m;
}

std::string Factorization::to_string() const {
  std::string out;
  for (const auto& letter : letters_) {
    if (!out.empty()) out += ' ';
    out += "t" + letter.curve.to_string();
    if (letter.sign == Sign::negative) out += "^-1";
  }
  return out;
}

ActionMatrix word_action(const Factorization& word) {
  ActionMatrix total = ActionMatrix::identity(word.surface());
  for (const auto& letter : word.letters()) total = total.then(twist_action(letter.curve, letter.sign));
  return total;
}

std::string HurwitzMove::to_string() const {
  return (direction == MoveDirection::left ? "L" : "R") + std::to_string(position);
}

namespace {

void check_position(const Factorization& word, std::size_t position) {
  if (position + 1 >= word.size())
    throw std::out_of_range("Hurwitz move at position " + std::to_string(position) + " needs an adjacent pair in a word of length " +
                            std::to_string(word.size()));
}

}  // namespace

Factorization hurwitz_left(const Factorization& word, std::size_t position) {
  check_position(word, position);
  std::vector<SignedTwist> letters(word.letters().begin(), word.letters().end());
  const SignedTwist first = letters[position];
  const SignedTwist second = letters[position + 1];
  // Conjugating t_c by the first letter: M1^{-1} T_c M1 = T_{M1^{-1} c}.
  const ActionMatrix undo = twist_action(first.curve, flip(first.sign));
  letters[position] = SignedTwist{map_curve(undo, second.curve), second.sign};
  letters[position + 1] = first;
  return Factorization(word.surface(), std::move(letters));
}

Factorization hurwitz_right(const Factorization& word, std::size_t position) {
  check_position(word, position);
  std::vector<SignedTwist> letters(word.letters().begin(), word.letters().end());
  const SignedTwist first = letters[position];
  const SignedTwist second = letters[position + 1];
  const ActionMatrix apply = twist_action(second.curve, second.sign);
  letters[position] = second;
  letters[position + 1] = SignedTwist{map_curve(apply, first.curve), first.sign};
  return Factorization(word.surface(), std::move(letters));
}

Factorization apply_move(const Factorization& word, const HurwitzMove& move) {
  return move.direction == MoveDirection::left ? hurwitz_left(word, move.position)
                                               : hurwitz_right(word, move.position);
}

Factorization apply_moves(Factorization word, std::span<const HurwitzMove> moves) {
  for (const auto& move : moves) word = apply_move(word, move);
  return word;
}

ChiralSplit chiral_split(const Factorization& word) {
  Factorization current = word;
  std::vector<std::size_t> origin(word.size());
  std::iota(origin.begin(), origin.end(), std::size_t{0});
  std::vector<HurwitzMove> certificate;

  // Everything left of `scan` is free of (negative, positive) pairs, and a
  // move at i can only create a new pair at i - 1.
  std::size_t scan = 0;
  while (scan + 1 < current.size()) {
    if (current[scan].sign == Sign::negative && current[scan + 1].sign == Sign::positive) {
      current = hurwitz_left(current, scan);
      std::swap(origin[scan], origin[scan + 1]);
      certificate.push_back({MoveDirection::left, scan});
      if (scan > 0) --scan;
    } else {
      ++scan;
    }
  }

  const std::size_t positives = current.count(Sign::positive);
  auto letters = current.letters();
  ChiralSplit split{
      Factorization(word.surface(), {letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(positives)}),
      Factorization(word.surface(), {letters.begin() + static_cast<std::ptrdiff_t>(positives), letters.end()}),
      std::move(certificate),
      std::move(origin),
  };
  return split;
}

bool verify_split(const Factorization& input, const ChiralSplit& split) {
  if (!split.positive.is_pure(Sign::positive) || !split.negative.is_pure(Sign::negative)) return false;
  if (split.positive.size() != input.count(Sign::positive) || split.negative.size() != input.count(Sign::negative))
    return false;
  const Factorization combined = split.combined();
  if (!(apply_moves(input, split.certificate) == combined)) return false;
  return word_action(combined) == word_action(input);
}

StabilizedSurface stabilized_surface(const Surface& surface, StabilizationModel model) {
  if (surface.is_closed()) throw std::invalid_argument("stabilization needs a page with boundary");
  const std::size_t old_rank = surface.rank();
  const std::size_t sym = surface.symplectic_rank();
  if (model == StabilizationModel::split_boundary) {
    Surface grown(surface.genus(), surface.boundary_components() + 1);
    IntMatrix embedding(grown.rank(), old_rank);
    for (std::size_t i = 0; i < old_rank; ++i) embedding(i, i) = 1;
    IntVector handle(grown.rank(), Integer(0));
    handle[old_rank] = 1;
    return {grown, std::move(embedding), std::move(handle)};
  }
  if (surface.boundary_components() < 2)
    throw std::invalid_argument("merging stabilization needs at least two boundary components");
  Surface grown(surface.genus() + 1, surface.boundary_components() - 1);
  IntMatrix embedding(grown.rank(), old_rank);
  for (std::size_t i = 0; i < sym; ++i) embedding(i, i) = 1;
  // d_(m-1) is the last old coordinate; it becomes a_(g+1).
  embedding(sym, old_rank - 1) = 1;
  for (std::size_t j = sym; j + 1 < old_rank; ++j) embedding(j + 2, j) = 1;
  IntVector handle(grown.rank(), Integer(0));
  handle[sym + 1] = 1;
  return {grown, std::move(embedding), std::move(handle)};
}

Factorization stabilize(const Factorization& word, const Stabilization& spec) {
  const StabilizedSurface target = stabilized_surface(word.surface(), spec.model);
  IntVector arc = spec.arc_class.empty() ? IntVector(word.surface().rank(), Integer(0)) : spec.arc_class;
  if (arc.size() != word.surface().rank()) throw std::invalid_argument("stabilization arc class does not match page rank");

  std::vector<SignedTwist> letters;
  letters.reserve(word.size() + 1);
  for (const auto& letter : word.letters())
    letters.push_back({CurveClass(target.surface, target.embedding * letter.curve.coordinates()), letter.sign});
  IntVector curve = target.embedding * arc;
  for (std::size_t i = 0; i < curve.size(); ++i) curve[i] += target.handle_class[i];
  letters.push_back({CurveClass(target.surface, std::move(curve)), spec.sign});
  return Factorization(target.surface, std::move(letters));
}

Factorization reverse_inverse(const Factorization& word) {
  std::vector<SignedTwist> letters;
  letters.reserve(word.size());
  for (auto it = word.letters().rbegin(); it != word.letters().rend(); ++it) letters.push_back({it->curve, flip(it->sign)});
  return Factorization(word.surface(), std::move(letters));
}

}  // namespace mcalc
