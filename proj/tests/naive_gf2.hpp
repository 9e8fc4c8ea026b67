#pragma once

// Textbook Gaussian elimination over GF(2) on byte matrices, kept independent
// of the packed implementation so the two can be compared.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "twistcy/gf2.hpp"

namespace naive {

using Matrix = std::vector<std::vector<std::uint8_t>>;

inline Matrix from(const twistcy::gf2::BitMatrix& m) {
  Matrix a(m.rows(), std::vector<std::uint8_t>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m.get(r, c);
  return a;
}

// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(Matrix& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
    std::size_t p = row;
    while (p < a.size() && !a[p][c]) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r != row && a[r][c]) {
        for (std::size_t k = 0; k < a[r].size(); ++k) a[r][k] ^= a[row][k];
      }
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

inline std::size_t rank(const twistcy::gf2::BitMatrix& m) {
  auto a = from(m);
  return rref(a, m.cols()).size();
}

inline std::size_t nullity(const twistcy::gf2::BitMatrix& m) { return m.cols() - naive::rank(m); }

/// Solves m x = b; nullopt if inconsistent.
inline std::optional<std::vector<std::uint8_t>> solve(const twistcy::gf2::BitMatrix& m,
                                                       const twistcy::gf2::BitVector& b) {
  auto a = from(m);
  for (std::size_t r = 0; r < a.size(); ++r) a[r].push_back(b.get(r));
  const auto pivots = rref(a, m.cols() + 1);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<std::uint8_t> x(m.cols(), 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = a[i][m.cols()];
  return x;
}

}  // namespace naive
