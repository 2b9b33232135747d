#include "qpc/bitlin.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace qpc {

namespace {

size_t words_for(size_t bits) { return (bits + 63) / 64; }

void require_same_size(size_t a, size_t b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": size mismatch (" + std::to_string(a) + " vs " +
                                std::to_string(b) + ")");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// BitVector

BitVector::BitVector(size_t len) : len_(len), words_(words_for(len), 0) {}

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (size_t i = 0; i < bits.size(); i++) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("BitVector::from_string: unexpected character '" + std::string(1, bits[i]) +
                                  "'");
    }
  }
  return v;
}

BitVector BitVector::from_support(size_t len, std::span<const size_t> support) {
  BitVector v(len);
  for (size_t i : support) {
    if (i >= len) {
      throw std::out_of_range("BitVector::from_support: index out of range");
    }
    v.set(i);
  }
  return v;
}

size_t BitVector::weight() const {
  size_t w = 0;
  for (uint64_t x : words_) {
    w += std::popcount(x);
  }
  return w;
}

bool BitVector::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](uint64_t x) { return x == 0; });
}

void BitVector::clear() { std::fill(words_.begin(), words_.end(), 0); }

std::vector<size_t> BitVector::support() const {
  std::vector<size_t> out;
  for (size_t w = 0; w < words_.size(); w++) {
    uint64_t x = words_[w];
    while (x) {
      out.push_back(w * 64 + std::countr_zero(x));
      x &= x - 1;
    }
  }
  return out;
}

bool BitVector::dot(const BitVector& other) const {
  require_same_size(len_, other.len_, "BitVector::dot");
  uint64_t acc = 0;
  for (size_t i = 0; i < words_.size(); i++) {
    acc ^= words_[i] & other.words_[i];
  }
  return std::popcount(acc) & 1;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  require_same_size(len_, other.len_, "BitVector::operator^=");
  for (size_t i = 0; i < words_.size(); i++) {
    words_[i] ^= other.words_[i];
  }
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  require_same_size(len_, other.len_, "BitVector::operator&=");
  for (size_t i = 0; i < words_.size(); i++) {
    words_[i] &= other.words_[i];
  }
  return *this;
}

BitVector& BitVector::operator|=(const BitVector& other) {
  require_same_size(len_, other.len_, "BitVector::operator|=");
  for (size_t i = 0; i < words_.size(); i++) {
    words_[i] |= other.words_[i];
  }
  return *this;
}

std::string BitVector::to_string() const {
  std::string s(len_, '0');
  for (size_t i = 0; i < len_; i++) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

// ---------------------------------------------------------------------------
// BitMatrix

BitMatrix::BitMatrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * stride_, 0) {}

BitMatrix BitMatrix::identity(size_t n) {
  BitMatrix m(n, n);
  for (size_t i = 0; i < n; i++) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
  size_t cols = rows.empty() ? 0 : rows[0].size();
  BitMatrix m(rows.size(), cols);
  for (size_t r = 0; r < rows.size(); r++) {
    if (rows[r].size() != cols) {
      throw std::invalid_argument("BitMatrix::from_strings: ragged rows");
    }
    for (size_t c = 0; c < cols; c++) {
      char ch = rows[r][c];
      if (ch == '1') {
        m.set(r, c);
      } else if (ch != '0') {
        throw std::invalid_argument("BitMatrix::from_strings: unexpected character");
      }
    }
  }
  return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<BitVector>& rows, size_t cols) {
  BitMatrix m(rows.size(), cols);
  for (size_t r = 0; r < rows.size(); r++) m.set_row(r, rows[r]);
  return m;
}

BitMatrix BitMatrix::row_matrix(const BitVector& v) {
  BitMatrix m(1, v.size());
  m.set_row(0, v);
  return m;
}

BitVector BitMatrix::row(size_t r) const {
  BitVector v(cols_);
  std::copy_n(data_.begin() + r * stride_, stride_, v.words().begin());
  return v;
}

BitVector BitMatrix::column(size_t c) const {
  BitVector v(rows_);
  for (size_t r = 0; r < rows_; r++) {
    if (get(r, c)) v.set(r);
  }
  return v;
}

void BitMatrix::set_row(size_t r, const BitVector& v) {
  require_same_size(v.size(), cols_, "BitMatrix::set_row");
  std::copy(v.words().begin(), v.words().end(), data_.begin() + r * stride_);
}

void BitMatrix::xor_row_into(size_t dst, size_t src) {
  uint64_t* d = data_.data() + dst * stride_;
  const uint64_t* s = data_.data() + src * stride_;
  for (size_t w = 0; w < stride_; w++) d[w] ^= s[w];
}

void BitMatrix::swap_rows(size_t a, size_t b) {
  if (a == b) return;
  std::swap_ranges(data_.begin() + a * stride_, data_.begin() + (a + 1) * stride_, data_.begin() + b * stride_);
}

size_t BitMatrix::row_weight(size_t r) const {
  size_t w = 0;
  for (uint64_t x : row_words(r)) w += std::popcount(x);
  return w;
}

std::vector<size_t> BitMatrix::row_weights() const {
  std::vector<size_t> out(rows_);
  for (size_t r = 0; r < rows_; r++) out[r] = row_weight(r);
  return out;
}

std::vector<size_t> BitMatrix::column_weights() const {
  std::vector<size_t> out(cols_, 0);
  for (size_t r = 0; r < rows_; r++) {
    auto words = row_words(r);
    for (size_t w = 0; w < stride_; w++) {
      uint64_t x = words[w];
      while (x) {
        out[w * 64 + std::countr_zero(x)]++;
        x &= x - 1;
      }
    }
  }
  return out;
}

size_t BitMatrix::max_row_weight() const {
  size_t best = 0;
  for (size_t r = 0; r < rows_; r++) best = std::max(best, row_weight(r));
  return best;
}

size_t BitMatrix::max_column_weight() const {
  auto w = column_weights();
  return w.empty() ? 0 : *std::max_element(w.begin(), w.end());
}

size_t BitMatrix::count_ones() const {
  size_t total = 0;
  for (uint64_t x : data_) total += std::popcount(x);
  return total;
}

bool BitMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](uint64_t x) { return x == 0; });
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_);
  for (size_t r = 0; r < rows_; r++) {
    auto words = row_words(r);
    for (size_t w = 0; w < stride_; w++) {
      uint64_t x = words[w];
      while (x) {
        t.set(w * 64 + std::countr_zero(x), r);
        x &= x - 1;
      }
    }
  }
  return t;
}

BitVector BitMatrix::multiply(const BitVector& v) const {
  require_same_size(cols_, v.size(), "BitMatrix::multiply");
  BitVector out(rows_);
  auto vw = v.words();
  for (size_t r = 0; r < rows_; r++) {
    const uint64_t* row = data_.data() + r * stride_;
    uint64_t acc = 0;
    for (size_t w = 0; w < stride_; w++) acc ^= row[w] & vw[w];
    if (std::popcount(acc) & 1) out.set(r);
  }
  return out;
}

BitMatrix BitMatrix::multiply(const BitMatrix& other) const {
  require_same_size(cols_, other.rows_, "BitMatrix::multiply");
  BitMatrix out(rows_, other.cols_);
  for (size_t r = 0; r < rows_; r++) {
    uint64_t* dst = out.data_.data() + r * out.stride_;
    auto words = row_words(r);
    for (size_t w = 0; w < stride_; w++) {
      uint64_t x = words[w];
      while (x) {
        size_t k = w * 64 + std::countr_zero(x);
        const uint64_t* src = other.data_.data() + k * other.stride_;
        for (size_t j = 0; j < out.stride_; j++) dst[j] ^= src[j];
        x &= x - 1;
      }
    }
  }
  return out;
}

BitMatrix BitMatrix::select_columns(std::span<const size_t> columns) const {
  BitMatrix out(rows_, columns.size());
  for (size_t j = 0; j < columns.size(); j++) {
    size_t c = columns[j];
    if (c >= cols_) throw std::out_of_range("BitMatrix::select_columns: column out of range");
    for (size_t r = 0; r < rows_; r++) {
      if (get(r, c)) out.set(r, j);
    }
  }
  return out;
}

BitMatrix BitMatrix::select_rows(size_t begin, size_t end) const {
  if (begin > end || end > rows_) throw std::out_of_range("BitMatrix::select_rows: bad range");
  BitMatrix out(end - begin, cols_);
  std::copy(data_.begin() + begin * stride_, data_.begin() + end * stride_, out.data_.begin());
  return out;
}

std::string BitMatrix::to_string() const {
  std::string s;
  s.reserve(rows_ * (cols_ + 1));
  for (size_t r = 0; r < rows_; r++) {
    for (size_t c = 0; c < cols_; c++) s.push_back(get(r, c) ? '1' : '0');
    s.push_back('\n');
  }
  return s;
}

BitMatrix operator^(const BitMatrix& a, const BitMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("BitMatrix operator^: shape mismatch");
  }
  BitMatrix out = a;
  for (size_t r = 0; r < a.rows(); r++) {
    auto dst = out.row_words(r);
    auto src = b.row_words(r);
    for (size_t w = 0; w < dst.size(); w++) dst[w] ^= src[w];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Elimination

namespace {

// Reduces `m` in place to RREF, applying the same row operations to `shadow`
// when given. Returns pivot columns.
std::vector<size_t> eliminate(BitMatrix& m, BitMatrix* shadow) {
  std::vector<size_t> pivots;
  size_t next = 0;
  for (size_t c = 0; c < m.cols() && next < m.rows(); c++) {
    size_t found = m.rows();
    for (size_t r = next; r < m.rows(); r++) {
      if (m.get(r, c)) {
        found = r;
        break;
      }
    }
    if (found == m.rows()) continue;
    m.swap_rows(next, found);
    if (shadow) shadow->swap_rows(next, found);
    for (size_t r = 0; r < m.rows(); r++) {
      if (r != next && m.get(r, c)) {
        m.xor_row_into(r, next);
        if (shadow) shadow->xor_row_into(r, next);
      }
    }
    pivots.push_back(c);
    next++;
  }
  return pivots;
}

}  // namespace

size_t rank(const BitMatrix& m) {
  BitMatrix work = m;
  return eliminate(work, nullptr).size();
}

RowReduction row_reduce(const BitMatrix& m) {
  RowReduction out;
  out.echelon = m;
  out.transform = BitMatrix::identity(m.rows());
  out.pivot_cols = eliminate(out.echelon, &out.transform);
  out.rank = out.pivot_cols.size();
  return out;
}

BitMatrix kernel_basis(const BitMatrix& m) {
  BitMatrix e = m;
  std::vector<size_t> pivots = eliminate(e, nullptr);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t c : pivots) is_pivot[c] = true;
  size_t k = m.cols() - pivots.size();
  BitMatrix basis(m.cols(), k);
  size_t j = 0;
  for (size_t f = 0; f < m.cols(); f++) {
    if (is_pivot[f]) continue;
    basis.set(f, j);
    for (size_t r = 0; r < pivots.size(); r++) {
      if (e.get(r, f)) basis.set(pivots[r], j);
    }
    j++;
  }
  return basis;
}

std::optional<BitVector> solve(const BitMatrix& m, const BitVector& s) {
  require_same_size(m.rows(), s.size(), "solve");
  BitMatrix aug(m.rows(), m.cols() + 1);
  for (size_t r = 0; r < m.rows(); r++) {
    auto src = m.row_words(r);
    auto dst = aug.row_words(r);
    std::copy(src.begin(), src.end(), dst.begin());
    if (s.get(r)) aug.set(r, m.cols());
  }
  // Pivot only on the coefficient columns; the last column rides along.
  std::vector<size_t> pivots;
  size_t next = 0;
  for (size_t c = 0; c < m.cols() && next < m.rows(); c++) {
    size_t found = m.rows();
    for (size_t r = next; r < m.rows(); r++) {
      if (aug.get(r, c)) {
        found = r;
        break;
      }
    }
    if (found == m.rows()) continue;
    aug.swap_rows(next, found);
    for (size_t r = 0; r < m.rows(); r++) {
      if (r != next && aug.get(r, c)) aug.xor_row_into(r, next);
    }
    pivots.push_back(c);
    next++;
  }
  for (size_t r = next; r < m.rows(); r++) {
    if (aug.get(r, m.cols())) return std::nullopt;
  }
  BitVector x(m.cols());
  for (size_t r = 0; r < pivots.size(); r++) {
    if (aug.get(r, m.cols())) x.set(pivots[r]);
  }
  return x;
}

BitMatrix kron(const BitMatrix& a, const BitMatrix& b) {
  BitMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (size_t i = 0; i < a.rows(); i++) {
    for (size_t j = 0; j < a.cols(); j++) {
      if (!a.get(i, j)) continue;
      for (size_t k = 0; k < b.rows(); k++) {
        for (size_t l = 0; l < b.cols(); l++) {
          if (b.get(k, l)) out.set(i * b.rows() + k, j * b.cols() + l);
        }
      }
    }
  }
  return out;
}

BitMatrix kron_all(std::span<const BitMatrix> factors) {
  BitMatrix acc = BitMatrix::identity(1);
  for (const auto& f : factors) acc = kron(acc, f);
  return acc;
}

BitMatrix stack(std::span<const BitMatrix> parts) {
  if (parts.empty()) return BitMatrix();
  size_t cols = parts[0].cols();
  size_t rows = 0;
  for (const auto& p : parts) {
    if (p.cols() != cols) {
      throw std::invalid_argument("stack: column count mismatch (" + std::to_string(p.cols()) + " vs " +
                                  std::to_string(cols) + ")");
    }
    rows += p.rows();
  }
  BitMatrix out(rows, cols);
  size_t r0 = 0;
  for (const auto& p : parts) {
    for (size_t r = 0; r < p.rows(); r++) {
      auto src = p.row_words(r);
      std::copy(src.begin(), src.end(), out.row_words(r0 + r).begin());
    }
    r0 += p.rows();
  }
  return out;
}

BitMatrix stack(std::initializer_list<BitMatrix> parts) {
  return stack(std::span<const BitMatrix>(parts.begin(), parts.size()));
}

BitMatrix hstack(std::span<const BitMatrix> parts) {
  if (parts.empty()) return BitMatrix();
  size_t rows = parts[0].rows();
  size_t cols = 0;
  for (const auto& p : parts) {
    if (p.rows() != rows) {
      throw std::invalid_argument("hstack: row count mismatch (" + std::to_string(p.rows()) + " vs " +
                                  std::to_string(rows) + ")");
    }
    cols += p.cols();
  }
  BitMatrix out(rows, cols);
  size_t c0 = 0;
  for (const auto& p : parts) {
    for (size_t r = 0; r < rows; r++) {
      for (size_t c = 0; c < p.cols(); c++) {
        if (p.get(r, c)) out.set(r, c0 + c);
      }
    }
    c0 += p.cols();
  }
  return out;
}

BitMatrix hstack(std::initializer_list<BitMatrix> parts) {
  return hstack(std::span<const BitMatrix>(parts.begin(), parts.size()));
}

bool in_rowspan(const BitMatrix& m, const BitVector& v) {
  require_same_size(m.cols(), v.size(), "in_rowspan");
  return RowSpace(m).contains(v);
}

// ---------------------------------------------------------------------------
// RowSpace

RowSpace::RowSpace(const BitMatrix& m) : ambient_(m.cols()) {
  BitMatrix e = m;
  pivots_ = eliminate(e, nullptr);
  basis_ = e.select_rows(0, pivots_.size());
}

BitVector RowSpace::reduce(BitVector v) const {
  require_same_size(ambient_, v.size(), "RowSpace::reduce");
  auto vw = v.words();
  for (size_t r = 0; r < pivots_.size(); r++) {
    size_t c = pivots_[r];
    if ((vw[c >> 6] >> (c & 63)) & 1) {
      auto bw = basis_.row_words(r);
      for (size_t w = 0; w < vw.size(); w++) vw[w] ^= bw[w];
    }
  }
  return v;
}

bool RowSpace::contains(const BitVector& v) const { return reduce(v).is_zero(); }

}  // namespace qpc
