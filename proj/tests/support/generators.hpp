#pragma once

// Random surfaces, curve classes and words for property tests. Every
// generator takes the engine explicitly so failures replay from a seed.

#include <random>
#include <vector>

#include "mcalc/factorization.hpp"

namespace mcalc::testing {

using Engine = std::mt19937_64;

inline int uniform(Engine& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// g <= 3, m <= 2, rank at least 1.
inline Surface random_surface(Engine& rng, unsigned min_boundary = 0) {
  while (true) {
    Surface s(static_cast<unsigned>(uniform(rng, 0, 3)), static_cast<unsigned>(uniform(rng, static_cast<int>(min_boundary), 2)));
    if (s.rank() > 0) return s;
  }
}

inline CurveClass random_curve(Engine& rng, const Surface& s, int bound = 2) {
  while (true) {
    IntVector v(s.rank());
    for (auto& x : v) x = uniform(rng, -bound, bound);
    if (content(v) == 1) return CurveClass(s, v);
  }
}

inline Sign random_sign(Engine& rng) { return uniform(rng, 0, 1) ? Sign::positive : Sign::negative; }

inline Factorization random_word(Engine& rng, const Surface& s, std::size_t max_length = 12) {
  std::vector<SignedTwist> letters;
  const auto length = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(max_length)));
  for (std::size_t i = 0; i < length; ++i) letters.push_back({random_curve(rng, s), random_sign(rng)});
  return Factorization(s, std::move(letters));
}

inline Factorization random_pure_word(Engine& rng, const Surface& s, Sign sign, std::size_t max_length = 12) {
  std::vector<SignedTwist> letters;
  const auto length = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(max_length)));
  for (std::size_t i = 0; i < length; ++i) letters.push_back({random_curve(rng, s), sign});
  return Factorization(s, std::move(letters));
}

inline IntMatrix random_matrix(Engine& rng, std::size_t rows, std::size_t cols, int bound = 5) {
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = uniform(rng, -bound, bound);
  return m;
}

/// Product of random elementary matrices: unimodular by construction.
inline IntMatrix random_unimodular(Engine& rng, std::size_t n, int steps = 8) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) return u;
  for (int s = 0; s < steps; ++s) {
    const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 1));
    auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 2));
    if (j >= i) ++j;
    u.add_row_multiple(i, j, Integer(uniform(rng, -2, 2)));
    if (uniform(rng, 0, 3) == 0) u.swap_rows(i, j);
  }
  return u;
}

}  // namespace mcalc::testing
