#ifndef QPC_BITLIN_H
#define QPC_BITLIN_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qpc {

/// Dense bit vector over GF(2), packed into 64-bit words. Bits past `size()` in
/// the last word are always zero.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(size_t len);

  /// Parses a string of '0'/'1' characters.
  static BitVector from_string(std::string_view bits);
  static BitVector from_support(size_t len, std::span<const size_t> support);

  size_t size() const { return len_; }
  size_t num_words() const { return words_.size(); }

  bool get(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(size_t i, bool value = true) {
    uint64_t mask = uint64_t{1} << (i & 63);
    if (value) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }
  void flip(size_t i) { words_[i >> 6] ^= uint64_t{1} << (i & 63); }

  size_t weight() const;
  bool is_zero() const;
  void clear();
  std::vector<size_t> support() const;

  /// Parity of the bitwise AND, i.e. the GF(2) inner product.
  bool dot(const BitVector& other) const;

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  BitVector& operator&=(const BitVector& other);
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
  BitVector& operator|=(const BitVector& other);
  friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }
  bool operator==(const BitVector& other) const = default;

  std::span<const uint64_t> words() const { return words_; }
  std::span<uint64_t> words() { return words_; }

  std::string to_string() const;

 private:
  size_t len_ = 0;
  std::vector<uint64_t> words_;
};

/// Dense row-major binary matrix. Each row occupies `stride()` words.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(size_t rows, size_t cols);

  static BitMatrix identity(size_t n);
  /// One '0'/'1' string per row; all strings must have equal length.
  static BitMatrix from_strings(const std::vector<std::string>& rows);
  static BitMatrix from_rows(const std::vector<BitVector>& rows, size_t cols);
  /// A 1 x v.size() matrix holding `v` as its only row.
  static BitMatrix row_matrix(const BitVector& v);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  size_t stride() const { return stride_; }

  bool get(size_t r, size_t c) const { return (data_[r * stride_ + (c >> 6)] >> (c & 63)) & 1; }
  void set(size_t r, size_t c, bool value = true) {
    uint64_t mask = uint64_t{1} << (c & 63);
    uint64_t& w = data_[r * stride_ + (c >> 6)];
    if (value) {
      w |= mask;
    } else {
      w &= ~mask;
    }
  }
  void flip(size_t r, size_t c) { data_[r * stride_ + (c >> 6)] ^= uint64_t{1} << (c & 63); }

  std::span<const uint64_t> row_words(size_t r) const { return {data_.data() + r * stride_, stride_}; }
  std::span<uint64_t> row_words(size_t r) { return {data_.data() + r * stride_, stride_}; }

  BitVector row(size_t r) const;
  BitVector column(size_t c) const;
  void set_row(size_t r, const BitVector& v);

  /// row[dst] ^= row[src]
  void xor_row_into(size_t dst, size_t src);
  void swap_rows(size_t a, size_t b);

  size_t row_weight(size_t r) const;
  std::vector<size_t> row_weights() const;
  std::vector<size_t> column_weights() const;
  size_t max_row_weight() const;
  size_t max_column_weight() const;
  size_t count_ones() const;
  bool is_zero() const;

  BitMatrix transpose() const;
  /// Matrix-vector product over GF(2): this * v.
  BitVector multiply(const BitVector& v) const;
  /// Matrix product over GF(2): this * other.
  BitMatrix multiply(const BitMatrix& other) const;
  /// Keeps the given columns, in order.
  BitMatrix select_columns(std::span<const size_t> columns) const;
  BitMatrix select_rows(size_t begin, size_t end) const;

  bool operator==(const BitMatrix& other) const = default;

  std::string to_string() const;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  size_t stride_ = 0;
  std::vector<uint64_t> data_;
};

BitMatrix operator^(const BitMatrix& a, const BitMatrix& b);

struct RowReduction {
  BitMatrix echelon;    ///< Reduced row echelon form; zero rows at the bottom.
  BitMatrix transform;  ///< Invertible, with transform * input == echelon.
  size_t rank = 0;
  std::vector<size_t> pivot_cols;
};

size_t rank(const BitMatrix& m);

/// Reduced row echelon form with the row operations recorded. Pivots are the
/// leftmost nonzero column and the topmost available row.
RowReduction row_reduce(const BitMatrix& m);

/// Columns of the returned (cols x k) matrix are a basis of the right kernel.
BitMatrix kernel_basis(const BitMatrix& m);

/// Some x with m * x == s, free variables set to zero. nullopt when s is not in
/// the column span of m.
std::optional<BitVector> solve(const BitMatrix& m, const BitVector& s);

BitMatrix kron(const BitMatrix& a, const BitMatrix& b);
BitMatrix kron_all(std::span<const BitMatrix> factors);

/// Vertical concatenation; throws std::invalid_argument on column mismatch.
BitMatrix stack(std::span<const BitMatrix> parts);
BitMatrix stack(std::initializer_list<BitMatrix> parts);
/// Horizontal concatenation; throws std::invalid_argument on row mismatch.
BitMatrix hstack(std::span<const BitMatrix> parts);
BitMatrix hstack(std::initializer_list<BitMatrix> parts);

bool in_rowspan(const BitMatrix& m, const BitVector& v);

/// Precomputed echelon basis for repeated row-space membership queries.
class RowSpace {
 public:
  RowSpace() = default;
  explicit RowSpace(const BitMatrix& m);

  size_t dimension() const { return basis_.rows(); }
  size_t ambient() const { return ambient_; }
  bool contains(const BitVector& v) const;
  /// Reduces v modulo the row space; zero iff v is contained.
  BitVector reduce(BitVector v) const;

 private:
  size_t ambient_ = 0;
  BitMatrix basis_;
  std::vector<size_t> pivots_;
};

}  // namespace qpc

#endif
