#include "mcalc/linalg.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>

namespace mcalc {

namespace {

struct Position {
  std::size_t row;
  std::size_t col;
};

// Smallest nonzero |entry| in the trailing block starting at (t, t).
std::optional<Position> smallest_pivot(const IntMatrix& d, std::size_t t) {
  std::optional<Position> best;
  Integer best_abs;
  for (std::size_t r = t; r < d.rows(); ++r)
    for (std::size_t c = t; c < d.cols(); ++c) {
      const Integer& x = d(r, c);
      if (x == 0) continue;
      if (!best || abs(x) < best_abs) {
        best = Position{r, c};
        best_abs = abs(x);
      }
    }
  return best;
}

}  // namespace

std::size_t SmithDecomposition::rank() const {
  return static_cast<std::size_t>(
      std::count_if(invariant_factors.begin(), invariant_factors.end(), [](const Integer& x) { return x != 0; }));
}

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  IntMatrix d = a;
  IntMatrix left = IntMatrix::identity(a.rows());
  IntMatrix right = IntMatrix::identity(a.cols());
  const std::size_t n = std::min(a.rows(), a.cols());

  bool exhausted = false;
  for (std::size_t t = 0; t < n && !exhausted; ++t) {
    bool done = false;
    while (!done) {
      auto pivot = smallest_pivot(d, t);
      if (!pivot) {
        exhausted = true;  // trailing block is zero
        break;
      }
      d.swap_rows(t, pivot->row);
      left.swap_rows(t, pivot->row);
      d.swap_cols(t, pivot->col);
      right.swap_cols(t, pivot->col);

      bool clean = true;
      for (std::size_t r = t + 1; r < d.rows(); ++r) {
        if (d(r, t) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), d(r, t).get_mpz_t(), d(t, t).get_mpz_t());
        d.add_row_multiple(r, t, -q);
        left.add_row_multiple(r, t, -q);
        if (d(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < d.cols(); ++c) {
        if (d(t, c) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), d(t, c).get_mpz_t(), d(t, t).get_mpz_t());
        d.add_col_multiple(c, t, -q);
        right.add_col_multiple(c, t, -q);
        if (d(t, c) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce d_t | every entry of the trailing block.
      done = true;
      for (std::size_t r = t + 1; r < d.rows() && done; ++r)
        for (std::size_t c = t + 1; c < d.cols(); ++c) {
          if (!mpz_divisible_p(d(r, c).get_mpz_t(), d(t, t).get_mpz_t())) {
            d.add_row_multiple(t, r, 1);
            left.add_row_multiple(t, r, 1);
            done = false;
            break;
          }
        }
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      left.negate_row(t);
    }
  }

  SmithDecomposition out;
  out.invariant_factors.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.invariant_factors.push_back(d(i, i));
  out.left = std::move(left);
  out.right = std::move(right);
  return out;
}

std::vector<IntVector> kernel_basis(const IntMatrix& a) {
  const SmithDecomposition snf = smith_normal_form(a);
  std::vector<IntVector> basis;
  for (std::size_t c = snf.rank(); c < a.cols(); ++c) basis.push_back(snf.right.column(c));
  return basis;
}

CokernelPresentation cokernel_presentation(const IntMatrix& a) {
  const SmithDecomposition snf = smith_normal_form(a);
  const std::size_t n = snf.invariant_factors.size();
  std::vector<std::size_t> kept;
  CokernelPresentation out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Integer factor = i < n ? snf.invariant_factors[i] : Integer(0);
    if (factor == 1) continue;
    kept.push_back(i);
    out.factors.push_back(factor);
  }
  out.projection = IntMatrix(kept.size(), a.rows());
  for (std::size_t k = 0; k < kept.size(); ++k)
    for (std::size_t c = 0; c < a.rows(); ++c) out.projection(k, c) = snf.left(kept[k], c);
  return out;
}

IntVector CokernelPresentation::coordinates(std::span<const Integer> x) const {
  IntVector coords = projection * x;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (factors[i] != 0) mpz_fdiv_r(coords[i].get_mpz_t(), coords[i].get_mpz_t(), factors[i].get_mpz_t());
  return coords;
}

IntVector cokernel_invariants(const IntMatrix& a) { return cokernel_presentation(a).factors; }

Inertia signature_symmetric(const IntMatrix& q) {
  if (!q.is_symmetric()) throw std::invalid_argument("signature_symmetric: matrix is not symmetric");
  const std::size_t n = q.rows();
  std::vector<mpq_class> m(n * n);
  auto at = [&](std::size_t r, std::size_t c) -> mpq_class& { return m[r * n + c]; };
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) at(r, c) = q(r, c);

  auto swap_index = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < n; ++k) std::swap(at(i, k), at(j, k));
    for (std::size_t k = 0; k < n; ++k) std::swap(at(k, i), at(k, j));
  };
  // e_i <- e_i + e_j as a congruence.
  auto add_index = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < n; ++k) at(i, k) += at(j, k);
    for (std::size_t k = 0; k < n; ++k) at(k, i) += at(k, j);
  };

  Inertia inertia;
  for (std::size_t k = 0; k < n; ++k) {
    std::optional<std::size_t> diag;
    for (std::size_t i = k; i < n && !diag; ++i)
      if (at(i, i) != 0) diag = i;
    if (!diag) {
      // All remaining diagonal entries vanish: a nonzero off-diagonal entry
      // spans a hyperbolic block, which we turn into a nonzero diagonal.
      std::optional<Position> off;
      for (std::size_t i = k; i < n && !off; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (at(i, j) != 0) {
            off = Position{i, j};
            break;
          }
      if (!off) {
        inertia.zero += n - k;
        break;
      }
      add_index(off->row, off->col);
      diag = off->row;
    }
    swap_index(k, *diag);
    const mpq_class pivot = at(k, k);
    if (pivot > 0)
      ++inertia.positive;
    else
      ++inertia.negative;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (at(i, k) == 0) continue;
      const mpq_class f = at(i, k) / pivot;
      for (std::size_t c = k; c < n; ++c) at(i, c) -= f * at(k, c);
      for (std::size_t r = k; r < n; ++r) at(r, i) -= f * at(r, k);
    }
  }
  return inertia;
}

Integer determinant(const IntMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  // Fraction-free Bareiss elimination.
  IntMatrix m = a;
  Integer sign = 1;
  Integer previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      m.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer value = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), previous.get_mpz_t());
        m(i, j) = value;
      }
    previous = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& a) { return smith_normal_form(a).rank(); }

IntMatrix unimodular_inverse(const IntMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("unimodular_inverse: matrix is not square");
  const SmithDecomposition snf = smith_normal_form(a);
  for (const auto& d : snf.invariant_factors)
    if (d != 1) throw std::invalid_argument("unimodular_inverse: matrix is not unimodular");
  // left * A * right = I  =>  A^{-1} = right * left
  return snf.right * snf.left;
}

}  // namespace mcalc
