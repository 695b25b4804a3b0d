#pragma once

// Independent reference computations. Nothing here calls into the linalg
// module: small matrices are handled with plain integers and cofactor
// expansion.

#include <cstdint>
#include <numeric>
#include <vector>

#include "mcalc/int_matrix.hpp"

namespace mcalc::oracle {

using Small = std::vector<std::vector<std::int64_t>>;

inline Small to_small(const IntMatrix& m) {
  Small out(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c).get_si();
  return out;
}

/// Cofactor expansion along the first row.
inline std::int64_t det(const Small& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  std::int64_t total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    Small minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<std::int64_t> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    total += (c % 2 ? -1 : 1) * m[0][c] * det(minor);
  }
  return total;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

/// gcd of all k x k minors.
inline std::int64_t determinantal_divisor(const Small& m, std::size_t k) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<std::vector<std::size_t>> rs, cs;
  std::vector<std::size_t> cur;
  subsets(rows, k, 0, cur, rs);
  subsets(cols, k, 0, cur, cs);
  std::int64_t g = 0;
  for (const auto& r : rs)
    for (const auto& c : cs) {
      Small sub(k, std::vector<std::int64_t>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[r[i]][c[j]];
      g = std::gcd(g, det(sub));
    }
  return g;
}

/// Invariant factors d_k = D_k / D_(k-1), zero past the rank.
inline std::vector<std::int64_t> invariant_factors(const IntMatrix& a) {
  const Small m = to_small(a);
  const std::size_t n = std::min(a.rows(), a.cols());
  std::vector<std::int64_t> out;
  std::int64_t previous = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    const std::int64_t d = determinantal_divisor(m, k);
    if (d == 0) {
      out.resize(n, 0);
      break;
    }
    out.push_back(d / previous);
    previous = d;
  }
  return out;
}

/// Leading principal minors D_1..D_n.
inline std::vector<std::int64_t> leading_minors(const IntMatrix& a) {
  const Small m = to_small(a);
  std::vector<std::int64_t> out;
  for (std::size_t k = 1; k <= m.size(); ++k) {
    Small sub(k, std::vector<std::int64_t>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[i][j];
    out.push_back(det(sub));
  }
  return out;
}

/// The E8 Cartan matrix with -2 on the diagonal (negative definite).
inline IntMatrix negative_e8() {
  // Dynkin diagram: chain 0-1-2-3-4-5-6 with node 7 attached to node 4.
  IntMatrix m(8, 8);
  for (std::size_t i = 0; i < 8; ++i) m(i, i) = -2;
  auto link = [&](std::size_t i, std::size_t j) { m(i, j) = m(j, i) = 1; };
  for (std::size_t i = 0; i + 1 < 7; ++i) link(i, i + 1);
  link(4, 7);
  return m;
}

}  // namespace mcalc::oracle
