#pragma once

// Dense linear algebra over the two-element field.
//
// Bits are packed 64 to a word, least significant bit first. Every operation
// is a pure function of its inputs and pivoting is fully deterministic
// (leftmost pivot column, topmost available row), so kernel bases and
// particular solutions are reproducible byte for byte.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace twistcy::gf2 {

class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size);

  static BitVector unit(std::size_t size, std::size_t index);
  /// Parses a string of '0'/'1' characters, index 0 first.
  static BitVector from_string(const std::string& bits);

  std::size_t size() const { return size_; }
  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  bool any() const;
  bool none() const { return !any(); }
  std::size_t count() const;
  /// Inner product over GF(2).
  bool dot(const BitVector& other) const;
  std::vector<std::size_t> ones() const;

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend bool operator==(const BitVector&, const BitVector&) = default;
  /// Lexicographic on (size, words); gives containers a deterministic order.
  friend auto operator<=>(const BitVector&, const BitVector&) = default;

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }
  std::string to_string() const;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix identity(std::size_t n);
  static BitMatrix from_rows(const std::vector<BitVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return stride_; }

  bool get(std::size_t r, std::size_t c) const {
    return (bits_[r * stride_ + (c >> 6)] >> (c & 63)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool value = true);

  BitVector row(std::size_t r) const;
  std::span<const std::uint64_t> row_words(std::size_t r) const {
    return {bits_.data() + r * stride_, stride_};
  }
  void set_row(std::size_t r, const BitVector& v);

  BitVector multiply(const BitVector& x) const;
  BitMatrix transposed() const;
  bool is_zero() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct RankKernel {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
  /// Basis of {x : m x = 0}; one vector per free column, in column order.
  std::vector<BitVector> kernel_basis;
};

struct AffineSolution {
  BitVector particular;
  std::vector<BitVector> kernel_basis;
};

RankKernel rank_and_kernel(const BitMatrix& m);
std::size_t rank(const BitMatrix& m);

/// Solves m x = b. Returns nullopt when the system is inconsistent.
/// Throws DimensionError if b.size() != m.rows().
std::optional<AffineSolution> solve_affine(const BitMatrix& m, const BitVector& b);

/// Incrementally built subspace kept in reduced row echelon form, so that
/// `reduce` returns a canonical representative of a coset v + span.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim) : dim_(ambient_dim) {}

  /// Adds v to the span; returns false if v was already in it.
  bool insert(const BitVector& v);
  BitVector reduce(BitVector v) const;
  bool contains(const BitVector& v) const { return reduce(v).none(); }
  std::size_t dimension() const { return basis_.size(); }
  std::size_t ambient_dimension() const { return dim_; }
  bool same_span(const Subspace& other) const;

 private:
  std::size_t dim_;
  // Sorted by pivot; each basis vector has a 1 at its pivot and zeros at all
  // other pivots.
  std::vector<BitVector> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace twistcy::gf2
