#include "qpc/bitlin.h"

#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "oracles.h"
#include "qpc/build.h"
#include "qpc/matrix_io.h"

using namespace qpc;

TEST(bit_vector, string_round_trip_across_words) {
  std::string s(130, '0');
  s[0] = s[63] = s[64] = s[129] = '1';
  BitVector v = BitVector::from_string(s);
  ASSERT_EQ(v.size(), 130u);
  ASSERT_EQ(v.weight(), 4u);
  ASSERT_EQ(v.to_string(), s);
  ASSERT_EQ(v.support(), (std::vector<size_t>{0, 63, 64, 129}));
  ASSERT_THROW(BitVector::from_string("01x"), std::invalid_argument);
}

TEST(bit_vector, dot_and_xor) {
  BitVector a = BitVector::from_string("1101");
  BitVector b = BitVector::from_string("0111");
  ASSERT_FALSE(a.dot(b));
  ASSERT_EQ((a ^ b).to_string(), "1010");
  ASSERT_EQ((a & b).to_string(), "0101");
  ASSERT_EQ((a | b).to_string(), "1111");
  ASSERT_TRUE(BitVector::from_string("1").dot(BitVector::from_string("1")));
}

TEST(bit_matrix, multiply_matches_definition) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 50; t++) {
    BitMatrix m = oracle::random_matrix(1 + rng() % 20, 1 + rng() % 150, rng);
    BitVector v = oracle::random_vector(m.cols(), rng);
    ASSERT_EQ(m.multiply(v), oracle::multiply(m, v));
    BitMatrix n = oracle::random_matrix(m.cols(), 1 + rng() % 10, rng);
    BitMatrix p = m.multiply(n);
    for (size_t c = 0; c < n.cols(); c++) ASSERT_EQ(p.column(c), oracle::multiply(m, n.column(c)));
    ASSERT_EQ(m.transpose().transpose(), m);
  }
}

TEST(rank, examples) {
  ASSERT_EQ(rank(BitMatrix::identity(4)), 4u);
  ASSERT_EQ(rank(BitMatrix::from_strings({"1111"})), 1u);
  ASSERT_EQ(rank(BitMatrix(3, 5)), 0u);
}

TEST(rank, matches_oracle_and_transpose) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 200; t++) {
    BitMatrix m = oracle::random_matrix(1 + rng() % 12, 1 + rng() % 80, rng, 0.3);
    size_t r = rank(m);
    ASSERT_EQ(r, oracle::rank(m));
    ASSERT_EQ(r, rank(m.transpose()));
  }
}

TEST(kernel_basis, examples) {
  BitMatrix k = kernel_basis(BitMatrix::from_strings({"1111"}));
  ASSERT_EQ(k.rows(), 4u);
  ASSERT_EQ(k.cols(), 3u);
  for (size_t c = 0; c < 3; c++) ASSERT_EQ(k.column(c).weight() % 2, 0u);
  ASSERT_EQ(kernel_basis(BitMatrix::identity(5)).cols(), 0u);
}

TEST(kernel_basis, rank_nullity) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; t++) {
    BitMatrix m = oracle::random_matrix(1 + rng() % 12, 1 + rng() % 70, rng);
    BitMatrix k = kernel_basis(m);
    ASSERT_EQ(k.rows(), m.cols());
    ASSERT_EQ(k.cols() + rank(m), m.cols());
    ASSERT_TRUE(m.multiply(k).is_zero());
    ASSERT_EQ(rank(k), k.cols());
  }
}

TEST(solve, examples) {
  BitVector s = BitVector::from_string("1011");
  ASSERT_EQ(solve(BitMatrix::identity(4), s), s);
  ASSERT_EQ(solve(BitMatrix::from_strings({"11"}), BitVector::from_string("1")), BitVector::from_string("10"));
  ASSERT_FALSE(solve(BitMatrix(2, 3), BitVector::from_string("01")).has_value());
}

TEST(solve, random_consistent_and_inconsistent) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 200; t++) {
    BitMatrix m = oracle::random_matrix(1 + rng() % 15, 1 + rng() % 40, rng, 0.3);
    BitVector x = oracle::random_vector(m.cols(), rng);
    BitVector s = m.multiply(x);
    auto y = solve(m, s);
    ASSERT_TRUE(y.has_value());
    ASSERT_EQ(m.multiply(*y), s);
    // Free variables are zero: the solution lives on pivot columns only.
    RowReduction red = row_reduce(m);
    for (size_t c : y->support()) {
      ASSERT_NE(std::find(red.pivot_cols.begin(), red.pivot_cols.end(), c), red.pivot_cols.end());
    }
    BitVector other = oracle::random_vector(m.rows(), rng);
    bool consistent = solve(m, other).has_value();
    BitMatrix augmented = hstack({m, BitMatrix::row_matrix(other).transpose()});
    ASSERT_EQ(consistent, oracle::rank(augmented) == oracle::rank(m));
  }
}

TEST(row_reduce, transform_invariants) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; t++) {
    BitMatrix m = oracle::random_matrix(1 + rng() % 20, 1 + rng() % 70, rng, 0.2);
    RowReduction red = row_reduce(m);
    ASSERT_EQ(red.transform.rows(), m.rows());
    ASSERT_EQ(rank(red.transform), m.rows());
    ASSERT_EQ(red.transform.multiply(m), red.echelon);
    ASSERT_EQ(red.rank, rank(m));
    ASSERT_EQ(red.pivot_cols.size(), red.rank);
    for (size_t r = 0; r < m.rows(); r++) ASSERT_EQ(red.echelon.row(r).is_zero(), r >= red.rank);
    for (size_t i = 0; i < red.rank; i++) {
      // Reduced form: the pivot column is a unit vector.
      ASSERT_EQ(red.echelon.column(red.pivot_cols[i]).support(), std::vector<size_t>{i});
      if (i > 0) {
        ASSERT_LT(red.pivot_cols[i - 1], red.pivot_cols[i]);
      }
    }
    ASSERT_TRUE(red.transform.select_rows(red.rank, m.rows()).multiply(m).is_zero());
  }
}

TEST(row_reduce, examples) {
  RowReduction id = row_reduce(BitMatrix::identity(5));
  ASSERT_EQ(id.transform, BitMatrix::identity(5));
  ASSERT_EQ(id.rank, 5u);
  RowReduction dup = row_reduce(BitMatrix::from_strings({"1100", "0110", "1100"}));
  ASSERT_EQ(dup.rank, 2u);
  ASSERT_EQ(dup.transform.row(2).to_string(), "101");
}

TEST(row_reduce, spc31_hx) {
  CssCode c = spc({3, 1});
  RowReduction red = row_reduce(c.hx());
  ASSERT_EQ(red.rank, 169u);
  ASSERT_EQ(c.hx().rows() - red.rank, 23u);
  ASSERT_EQ(kernel_basis(c.hx()).cols(), 343u);
}

TEST(kron, examples_and_identities) {
  ASSERT_EQ(kron(BitMatrix::from_strings({"11"}), BitMatrix::from_strings({"11"})), BitMatrix::from_strings({"1111"}));
  ASSERT_EQ(kron(BitMatrix::identity(2), BitMatrix::from_strings({"11"})),
            BitMatrix::from_strings({"1100", "0011"}));
  std::mt19937_64 rng(6);
  for (int t = 0; t < 30; t++) {
    BitMatrix a = oracle::random_matrix(3, 4, rng), b = oracle::random_matrix(3, 4, rng);
    BitMatrix c = oracle::random_matrix(3, 4, rng);
    BitMatrix ab = kron(a, b);
    for (size_t i = 0; i < 3; i++) {
      for (size_t j = 0; j < 4; j++) {
        for (size_t k = 0; k < 3; k++) {
          for (size_t l = 0; l < 4; l++) ASSERT_EQ(ab.get(i * 3 + k, j * 4 + l), a.get(i, j) && b.get(k, l));
        }
      }
    }
    ASSERT_EQ(rank(ab), rank(a) * rank(b));
    ASSERT_EQ(kron(a, b ^ c), kron(a, b) ^ kron(a, c));
  }
}

TEST(stack, examples_and_errors) {
  BitMatrix a = BitMatrix::from_strings({"11"});
  ASSERT_EQ(stack({a}), a);
  ASSERT_EQ(stack({a, BitMatrix::from_strings({"10"})}), BitMatrix::from_strings({"11", "10"}));
  ASSERT_EQ(classical_product_pcm(a, a), BitMatrix::from_strings({"1010", "0101", "1100", "0011"}));
  ASSERT_THROW(stack({a, BitMatrix(1, 3)}), std::invalid_argument);
  ASSERT_THROW(hstack({a, BitMatrix(2, 3)}), std::invalid_argument);
  ASSERT_EQ(hstack({a, BitMatrix::from_strings({"0"})}), BitMatrix::from_strings({"110"}));
}

TEST(in_rowspan, consistent_with_solve) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; t++) {
    BitMatrix m = oracle::random_matrix(1 + rng() % 8, 1 + rng() % 12, rng, 0.4);
    BitVector v = oracle::random_vector(m.cols(), rng);
    bool in = in_rowspan(m, v);
    ASSERT_EQ(in, solve(m.transpose(), v).has_value());
    ASSERT_EQ(in, oracle::in_rowspan(m, v));
    ASSERT_EQ(in, RowSpace(m).contains(v));
    ASSERT_TRUE(in_rowspan(m, m.row(0)));
    ASSERT_TRUE(in_rowspan(m, BitVector(m.cols())));
  }
}

TEST(matrix_io, alist_and_dense_round_trip) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 30; t++) {
    BitMatrix m = oracle::random_matrix(1 + rng() % 30, 1 + rng() % 90, rng, 0.1);
    std::stringstream a, d;
    write_alist(a, m);
    write_dense(d, m);
    ASSERT_EQ(read_alist(a), m);
    ASSERT_EQ(read_dense(d), m);
  }
}

TEST(matrix_io, alist_accepts_zero_padding) {
  // 3 columns, 2 rows: ((1 1 0), (0 0 1)).
  std::stringstream good("3 2\n1 2\n1 1 1\n2 1\n1\n1\n2\n1 2\n3\n");
  BitMatrix m = read_alist(good);
  ASSERT_EQ(m, BitMatrix::from_strings({"110", "001"}));
  std::stringstream padded("3 2\n1 2\n1 1 1\n2 1\n1\n1\n2\n1 2\n3 0\n");
  ASSERT_EQ(read_alist(padded), m);
  std::stringstream bad("3 2\n1 2\n1 1 1\n2 1\n1\n2\n2\n1 2\n3\n");
  ASSERT_THROW(read_alist(bad), std::runtime_error);
}
