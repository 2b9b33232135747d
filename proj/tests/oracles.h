// Slow, obviously-correct reference implementations used only by tests. They
// share no code with the library beyond the BitMatrix container.

#ifndef QPC_TESTS_ORACLES_H
#define QPC_TESTS_ORACLES_H

#include <cstdint>
#include <ostream>
#include <random>
#include <vector>

#include "qpc/bitlin.h"

namespace qpc {

// Readable gtest failure messages.
inline void PrintTo(const BitVector& v, std::ostream* os) { *os << v.to_string(); }
inline void PrintTo(const BitMatrix& m, std::ostream* os) { *os << "\n" << m.to_string(); }

}  // namespace qpc

namespace qpc::oracle {

using Dense = std::vector<std::vector<int>>;

inline Dense to_dense(const BitMatrix& m) {
  Dense d(m.rows(), std::vector<int>(m.cols()));
  for (size_t r = 0; r < m.rows(); r++) {
    for (size_t c = 0; c < m.cols(); c++) d[r][c] = m.get(r, c);
  }
  return d;
}

/// Rank by textbook elimination on ints.
inline size_t rank(const BitMatrix& m) {
  Dense d = to_dense(m);
  size_t r = 0;
  for (size_t c = 0; c < m.cols() && r < d.size(); c++) {
    size_t p = r;
    while (p < d.size() && !d[p][c]) p++;
    if (p == d.size()) continue;
    std::swap(d[p], d[r]);
    for (size_t i = 0; i < d.size(); i++) {
      if (i != r && d[i][c]) {
        for (size_t j = 0; j < m.cols(); j++) d[i][j] ^= d[r][j];
      }
    }
    r++;
  }
  return r;
}

inline BitVector from_mask(size_t n, uint64_t mask) {
  BitVector v(n);
  for (size_t i = 0; i < n; i++) {
    if ((mask >> i) & 1) v.set(i);
  }
  return v;
}

/// m * v by the definition.
inline BitVector multiply(const BitMatrix& m, const BitVector& v) {
  BitVector out(m.rows());
  for (size_t r = 0; r < m.rows(); r++) {
    int acc = 0;
    for (size_t c = 0; c < m.cols(); c++) acc ^= m.get(r, c) & v.get(c);
    out.set(r, acc);
  }
  return out;
}

/// Minimum weight of a nonzero kernel vector, by enumerating all 2^n vectors.
/// Returns 0 when the kernel is trivial.
inline size_t classical_distance(const BitMatrix& h) {
  size_t best = 0;
  for (uint64_t mask = 1; mask < (uint64_t{1} << h.cols()); mask++) {
    BitVector v = from_mask(h.cols(), mask);
    if (!multiply(h, v).is_zero()) continue;
    size_t w = v.weight();
    if (best == 0 || w < best) best = w;
  }
  return best;
}

/// Number of kernel vectors of exactly the given weight.
inline uint64_t kernel_count(const BitMatrix& h, size_t weight) {
  uint64_t count = 0;
  for (uint64_t mask = 1; mask < (uint64_t{1} << h.cols()); mask++) {
    if (static_cast<size_t>(__builtin_popcountll(mask)) != weight) continue;
    if (multiply(h, from_mask(h.cols(), mask)).is_zero()) count++;
  }
  return count;
}

/// Row-space membership by enumerating all combinations of rows.
inline bool in_rowspan(const BitMatrix& m, const BitVector& v) {
  for (uint64_t mask = 0; mask < (uint64_t{1} << m.rows()); mask++) {
    BitVector acc(m.cols());
    for (size_t r = 0; r < m.rows(); r++) {
      if ((mask >> r) & 1) acc ^= m.row(r);
    }
    if (acc == v) return true;
  }
  return false;
}

inline BitMatrix random_matrix(size_t rows, size_t cols, std::mt19937_64& rng, double density = 0.5) {
  std::bernoulli_distribution bit(density);
  BitMatrix m(rows, cols);
  for (size_t r = 0; r < rows; r++) {
    for (size_t c = 0; c < cols; c++) m.set(r, c, bit(rng));
  }
  return m;
}

inline BitVector random_vector(size_t n, std::mt19937_64& rng) {
  BitVector v(n);
  for (size_t i = 0; i < n; i++) v.set(i, rng() & 1);
  return v;
}

}  // namespace qpc::oracle

#endif
