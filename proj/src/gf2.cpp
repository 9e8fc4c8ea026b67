#include "twistcy/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

#include "twistcy/errors.hpp"

namespace twistcy::gf2 {

namespace {

std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

// Lowest set bit index of a packed vector, or `limit` if none.
std::size_t first_one(std::span<const std::uint64_t> words, std::size_t limit) {
  for (std::size_t w = 0; w < words.size(); ++w) {
    if (words[w] != 0) {
      return std::min(limit, w * 64 + static_cast<std::size_t>(std::countr_zero(words[w])));
    }
  }
  return limit;
}

// Row echelon reduction of a packed row-major matrix, in place. Returns the
// pivot columns; rows [0, pivots.size()) hold the fully reduced pivot rows.
std::vector<std::size_t> reduce_rows(std::vector<std::uint64_t>& bits, std::size_t rows,
                                     std::size_t cols, std::size_t stride) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    const std::size_t w = c >> 6;
    const std::uint64_t mask = std::uint64_t{1} << (c & 63);
    std::size_t p = r;
    while (p < rows && !(bits[p * stride + w] & mask)) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap_ranges(bits.begin() + static_cast<std::ptrdiff_t>(p * stride),
                       bits.begin() + static_cast<std::ptrdiff_t>((p + 1) * stride),
                       bits.begin() + static_cast<std::ptrdiff_t>(r * stride));
    }
    const std::uint64_t* pivot_row = bits.data() + r * stride;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      std::uint64_t* row = bits.data() + i * stride;
      if (row[w] & mask) {
        for (std::size_t k = w; k < stride; ++k) row[k] ^= pivot_row[k];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

// ---------------------------------------------------------------- BitVector

BitVector::BitVector(std::size_t size) : size_(size), words_(word_count(size), 0) {}

BitVector BitVector::unit(std::size_t size, std::size_t index) {
  BitVector v(size);
  v.set(index);
  return v;
}

BitVector BitVector::from_string(const std::string& bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw InputError("bit string contains a character other than 0/1");
    }
  }
  return v;
}

void BitVector::set(std::size_t i, bool value) {
  const std::uint64_t mask = std::uint64_t{1} << (i & 63);
  if (value) {
    words_[i >> 6] |= mask;
  } else {
    words_[i >> 6] &= ~mask;
  }
}

bool BitVector::any() const {
  return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t BitVector::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool BitVector::dot(const BitVector& other) const {
  if (other.size_ != size_) throw DimensionError("dot product of vectors of different length");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
  return std::popcount(acc) & 1;
}

std::vector<std::size_t> BitVector::ones() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t word = words_[w];
    while (word) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return out;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.size_ != size_) throw DimensionError("xor of vectors of different length");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

std::string BitVector::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

// ---------------------------------------------------------------- BitMatrix

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(word_count(cols)), bits_(rows * stride_, 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<BitVector>& rows, std::size_t cols) {
  BitMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool value) {
  const std::uint64_t mask = std::uint64_t{1} << (c & 63);
  auto& word = bits_[r * stride_ + (c >> 6)];
  if (value) {
    word |= mask;
  } else {
    word &= ~mask;
  }
}

BitVector BitMatrix::row(std::size_t r) const {
  BitVector v(cols_);
  std::copy_n(bits_.begin() + static_cast<std::ptrdiff_t>(r * stride_), stride_, v.words().begin());
  return v;
}

void BitMatrix::set_row(std::size_t r, const BitVector& v) {
  if (v.size() != cols_) throw DimensionError("row length does not match column count");
  std::copy(v.words().begin(), v.words().end(),
            bits_.begin() + static_cast<std::ptrdiff_t>(r * stride_));
}

BitVector BitMatrix::multiply(const BitVector& x) const {
  if (x.size() != cols_) throw DimensionError("matrix-vector product with mismatched length");
  BitVector y(rows_);
  const auto xw = x.words();
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    const std::uint64_t* row = bits_.data() + r * stride_;
    for (std::size_t k = 0; k < stride_; ++k) acc ^= row[k] & xw[k];
    if (std::popcount(acc) & 1) y.set(r);
  }
  return y;
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (get(r, c)) t.set(c, r);
    }
  }
  return t;
}

bool BitMatrix::is_zero() const {
  return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
}

// ---------------------------------------------------------------- algorithms

RankKernel rank_and_kernel(const BitMatrix& m) {
  std::vector<std::uint64_t> bits(m.rows() * m.words_per_row());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto src = m.row_words(r);
    std::copy(src.begin(), src.end(), bits.begin() + static_cast<std::ptrdiff_t>(r * src.size()));
  }
  const std::size_t stride = m.words_per_row();
  RankKernel out;
  out.pivot_columns = reduce_rows(bits, m.rows(), m.cols(), stride);
  out.rank = out.pivot_columns.size();

  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : out.pivot_columns) is_pivot[c] = true;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    BitVector k(m.cols());
    k.set(f);
    for (std::size_t i = 0; i < out.rank; ++i) {
      if ((bits[i * stride + (f >> 6)] >> (f & 63)) & 1u) k.set(out.pivot_columns[i]);
    }
    out.kernel_basis.push_back(std::move(k));
  }
  return out;
}

std::size_t rank(const BitMatrix& m) { return rank_and_kernel(m).rank; }

std::optional<AffineSolution> solve_affine(const BitMatrix& m, const BitVector& b) {
  if (b.size() != m.rows()) {
    throw DimensionError("right-hand side has " + std::to_string(b.size()) + " entries, matrix has " +
                         std::to_string(m.rows()) + " rows");
  }
  const std::size_t cols = m.cols() + 1;
  const std::size_t stride = word_count(cols);
  std::vector<std::uint64_t> bits(m.rows() * stride, 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto src = m.row_words(r);
    std::copy(src.begin(), src.end(), bits.begin() + static_cast<std::ptrdiff_t>(r * stride));
    if (b.get(r)) bits[r * stride + (m.cols() >> 6)] |= std::uint64_t{1} << (m.cols() & 63);
  }
  const auto pivots = reduce_rows(bits, m.rows(), cols, stride);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;

  AffineSolution sol{BitVector(m.cols()), {}};
  const std::size_t rhs = m.cols();
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if ((bits[i * stride + (rhs >> 6)] >> (rhs & 63)) & 1u) sol.particular.set(pivots[i]);
  }
  sol.kernel_basis = rank_and_kernel(m).kernel_basis;
  return sol;
}

// ---------------------------------------------------------------- Subspace

BitVector Subspace::reduce(BitVector v) const {
  if (v.size() != dim_) throw DimensionError("vector does not live in the subspace's ambient space");
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (v.get(pivots_[i])) v ^= basis_[i];
  }
  return v;
}

bool Subspace::insert(const BitVector& v) {
  BitVector r = reduce(v);
  const std::size_t p = first_one(r.words(), dim_);
  if (p == dim_) return false;
  for (auto& b : basis_) {
    if (b.get(p)) b ^= r;
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, p);
  basis_.insert(basis_.begin() + pos, std::move(r));
  return true;
}

bool Subspace::same_span(const Subspace& other) const {
  if (other.dim_ != dim_ || other.dimension() != dimension()) return false;
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [this](const BitVector& v) { return contains(v); });
}

}  // namespace twistcy::gf2
