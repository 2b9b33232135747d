#include "qpc/build.h"

#include <random>

#include <gtest/gtest.h>

#include "oracles.h"
#include "qpc/distance.h"
#include "qpc/zoo.h"

using namespace qpc;

namespace {

size_t kernel_dim(const BitMatrix& h) { return h.cols() - oracle::rank(h); }

/// Small random component: a random CSS pair, sometimes with a redundant
/// row appended so that rank < rows.
ComponentCss random_component(std::mt19937_64& rng, size_t n) {
  size_t r = 1 + rng() % (n / 2);
  CssCode c = random_css(n, r, rng());
  BitMatrix hx = c.hx(), hz = c.hz();
  if (rng() & 1) hx = stack({hx, BitMatrix::row_matrix(hx.row(0) ^ hx.row(hx.rows() - 1))});
  if (rng() & 1) hz = stack({hz, BitMatrix::row_matrix(hz.row(0))});
  return {hx, hz};
}

BitVector kron_vec(std::vector<BitVector> parts) {
  std::vector<BitMatrix> m;
  for (auto& p : parts) m.push_back(BitMatrix::row_matrix(p));
  return kron_all(m).row(0);
}

BitVector unit(size_t n, std::initializer_list<size_t> ones) {
  BitVector v(n);
  for (size_t i : ones) v.set(i - 1);
  return v;
}

BitVector ones(size_t n) {
  BitVector v(n);
  for (size_t i = 0; i < n; i++) v.set(i);
  return v;
}

}  // namespace

TEST(classical_product, distance_is_product) {
  std::mt19937_64 rng(11);
  int checked = 0;
  while (checked < 20) {
    BitMatrix h1 = oracle::random_matrix(1 + rng() % 2, 2 + rng() % 3, rng);
    BitMatrix h2 = oracle::random_matrix(1 + rng() % 2, 2 + rng() % 3, rng);
    size_t d1 = oracle::classical_distance(h1), d2 = oracle::classical_distance(h2);
    if (d1 == 0 || d2 == 0) continue;
    BitMatrix h = classical_product_pcm(h1, h2);
    ASSERT_EQ(h.rows(), h1.rows() * h2.cols() + h1.cols() * h2.rows());
    ASSERT_EQ(oracle::classical_distance(h), d1 * d2);
    ASSERT_EQ(kernel_dim(h), kernel_dim(h1) * kernel_dim(h2));
    checked++;
  }
}

TEST(tensor_product, distance_is_min) {
  std::mt19937_64 rng(12);
  int checked = 0;
  while (checked < 20) {
    BitMatrix h1 = oracle::random_matrix(1 + rng() % 3, 2 + rng() % 3, rng);
    BitMatrix h2 = oracle::random_matrix(1 + rng() % 3, 2 + rng() % 3, rng);
    size_t d1 = oracle::classical_distance(h1), d2 = oracle::classical_distance(h2);
    if (d1 == 0 || d2 == 0) continue;
    BitMatrix h = tensor_product_pcm(h1, h2);
    ASSERT_EQ(oracle::classical_distance(h), std::min(d1, d2));
    ASSERT_EQ(oracle::rank(h), oracle::rank(h1) * oracle::rank(h2));
    checked++;
  }
}

TEST(asymmetric_product, table_formulas) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 20; t++) {
    ComponentCss c1 = random_component(rng, 2 + rng() % 4);
    ComponentCss c2 = random_component(rng, 2 + rng() % 4);
    CssCode q = asymmetric_product(c1, c2);
    size_t n1 = c1.n(), n2 = c2.n();
    size_t m1x = c1.hx.rows(), m2x = c2.hx.rows(), m1z = c1.hz.rows(), m2z = c2.hz.rows();
    size_t r1x = oracle::rank(c1.hx), r2x = oracle::rank(c2.hx);
    size_t r1z = oracle::rank(c1.hz), r2z = oracle::rank(c2.hz);
    ASSERT_EQ(q.n(), n1 * n2);
    ASSERT_EQ(q.hx().rows(), m1x * n2 + n1 * m2x);
    ASSERT_EQ(q.hz().rows(), m1z * m2z);
    ASSERT_EQ(q.hx().rows() - q.rank_x(), (m1x - r1x) * n2 + n1 * (m2x - r2x) + r1x * r2x);
    ASSERT_EQ(q.k(), (n1 - r1x) * (n2 - r2x) - r1z * r2z);
  }
}

TEST(asymmetric_product, shor_witness) {
  ComponentCss shor = shor_component(3);
  CssCode q = asymmetric_product(shor, shor);
  BitVector v = kron_vec({unit(9, {1, 2}), unit(9, {1, 4, 7})});
  BitVector u = kron_vec({unit(9, {1}), ones(9)});
  ASSERT_EQ(v.weight(), 6u);
  ASSERT_TRUE(q.hx().multiply(v).is_zero());
  ASSERT_TRUE(q.hz().multiply(u).is_zero());
  ASSERT_TRUE(u.dot(v));
  ASSERT_TRUE(is_logical_failure(q, PauliVector::pure_z(v)));
}

TEST(asymmetric_product, generalized_shor_witnesses) {
  for (size_t D : {3, 4}) {
    ComponentCss shor = shor_component(D);
    CssCode sc = shor.validate();
    ASSERT_EQ(sc.n(), D * D);
    ASSERT_EQ(sc.k(), 1u);
    PureDistance pd = pure_distance(sc, D);
    ASSERT_EQ(pd.x, D);
    ASSERT_EQ(pd.z, 2u);
    CssCode q = asymmetric_product(shor, shor);
    BitVector v = kron_vec({unit(D, {1}), unit(D, {1, 2}), ones(D), unit(D, {1})});
    BitVector u = kron_vec({unit(D, {1}), unit(D, {1}), unit(D, {1}), ones(D)});
    ASSERT_EQ(v.weight(), 2 * D);
    ASSERT_TRUE(q.hx().multiply(v).is_zero());
    ASSERT_TRUE(q.hz().multiply(u).is_zero());
    ASSERT_TRUE(u.dot(v));
  }
}

TEST(symmetric_product, table_formulas) {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 12; t++) {
    std::vector<ComponentCss> c;
    for (int i = 0; i < 4; i++) c.push_back(random_component(rng, 2 + rng() % 3));
    CssCode q = symmetric_product(c[0], c[1], c[2], c[3]);
    size_t n[4], mx[4], mz[4], rx[4], rz[4];
    for (int i = 0; i < 4; i++) {
      n[i] = c[i].n();
      mx[i] = c[i].hx.rows();
      mz[i] = c[i].hz.rows();
      rx[i] = oracle::rank(c[i].hx);
      rz[i] = oracle::rank(c[i].hz);
    }
    ASSERT_EQ(q.n(), n[0] * n[1] * n[2] * n[3]);
    ASSERT_EQ(q.hx().rows(), mx[0] * mx[1] * n[2] * n[3] + n[0] * n[1] * mx[2] * mx[3]);
    ASSERT_EQ(q.hz().rows(), mz[0] * n[1] * mz[2] * n[3] + n[0] * mz[1] * n[2] * mz[3]);
    ASSERT_EQ(q.hx().rows() - q.rank_x(), (mx[0] * mx[1] - rx[0] * rx[1]) * n[2] * n[3] +
                                              n[0] * n[1] * (mx[2] * mx[3] - rx[2] * rx[3]) +
                                              rx[0] * rx[1] * rx[2] * rx[3]);
    ASSERT_EQ(q.hz().rows() - q.rank_z(), (mz[0] * mz[2] - rz[0] * rz[2]) * n[1] * n[3] +
                                              n[0] * n[2] * (mz[1] * mz[3] - rz[1] * rz[3]) +
                                              rz[0] * rz[1] * rz[2] * rz[3]);
    long long k = (long long)(n[0] * n[1] * n[2] * n[3]) + rx[0] * rx[1] * rx[2] * rx[3] +
                  rz[0] * rz[1] * rz[2] * rz[3] - rx[0] * rx[1] * n[2] * n[3] - n[0] * n[1] * rx[2] * rx[3] -
                  rz[0] * n[1] * rz[2] * n[3] - n[0] * rz[1] * n[2] * rz[3];
    ASSERT_EQ((long long)q.k(), k);
    ASSERT_EQ(dfold_product(c, 2), q);
  }
}

TEST(dfold_product, dimension_formula) {
  std::mt19937_64 rng(15);
  for (int t = 0; t < 6; t++) {
    std::vector<ComponentCss> c;
    for (int i = 0; i < 9; i++) {
      c.push_back(i == static_cast<int>(rng() % 9) ? random_component(rng, 4) : random_component(rng, 2));
    }
    CssCode q = dfold_product(c, 3);
    size_t kx = 1, kz = 1, mx = 0, mz = 0, n = 1;
    for (size_t l = 0; l < 9; l++) n *= c[l].n();
    for (size_t j = 0; j < 3; j++) {
      size_t pn = 1, px = 1, qn = 1, qz = 1, bx = 1, bz = 1;
      for (size_t l = 0; l < 9; l++) {
        bool in_x = l / 3 == j, in_z = l % 3 == j;
        if (in_x) {
          pn *= c[l].n();
          px *= oracle::rank(c[l].hx);
        }
        if (in_z) {
          qn *= c[l].n();
          qz *= oracle::rank(c[l].hz);
        }
        bx *= in_x ? c[l].hx.rows() : c[l].n();
        bz *= in_z ? c[l].hz.rows() : c[l].n();
      }
      kx *= pn - px;
      kz *= qn - qz;
      mx += bx;
      mz += bz;
    }
    ASSERT_EQ(q.n(), n);
    ASSERT_EQ(q.hx().rows(), mx);
    ASSERT_EQ(q.hz().rows(), mz);
    ASSERT_EQ(n - q.rank_x(), kx);
    ASSERT_EQ(n - q.rank_z(), kz);
    ASSERT_EQ(q.k(), kx + kz - n);
    ASSERT_EQ(mx - q.rank_x(), mx - (n - kx));
  }
  ASSERT_THROW(dfold_product(std::vector<ComponentCss>(8, bell_pair_component()), 3), std::invalid_argument);
}

TEST(spc, equals_products_of_bell_pairs) {
  std::vector<ComponentCss> bells(4, bell_pair_component());
  ASSERT_EQ(spc({2, 1}), symmetric_product(bells[0], bells[1], bells[2], bells[3]));
  ASSERT_EQ(spc({3, 1}), dfold_product(std::vector<ComponentCss>(9, bell_pair_component()), 3));
  auto comps = spc_components({3, 2});
  ASSERT_EQ(comps.size(), 9u);
  for (size_t l = 1; l <= 9; l++) {
    bool diag = l == 1 || l == 5 || l == 9;
    ASSERT_EQ(comps[l - 1].n(), diag ? 4u : 2u) << l;
  }
  ASSERT_THROW(spc({1, 1}), std::invalid_argument);
  ASSERT_THROW(spc({2, 0}), std::invalid_argument);
}

TEST(spc, predictions_match_constructed_codes) {
  for (SpcParams p : {SpcParams{2, 1}, SpcParams{2, 2}, SpcParams{2, 3}, SpcParams{3, 1}}) {
    PredictedStats want = predict_spc_stats(p);
    CodeStats got = stats(spc(p));
    ASSERT_EQ(got.n, want.n);
    ASSERT_EQ(got.k, want.k);
    ASSERT_EQ(got.mx, want.m);
    ASSERT_EQ(got.mz, want.m);
    ASSERT_EQ(got.meta_x, want.meta);
    ASSERT_EQ(got.meta_z, want.meta);
    ASSERT_EQ(got.row_weight_x, want.row_weight);
    ASSERT_EQ(got.row_weight_z, want.row_weight);
    ASSERT_EQ(got.col_weight_x, want.col_weight);
    ASSERT_EQ(got.col_weight_z, want.col_weight);
  }
  PredictedStats s = predict_spc_stats({2, 2});
  ASSERT_EQ(s.n, 64u);
  ASSERT_EQ(s.k, 34u);
  ASSERT_EQ(predict_spc_stats({2, 3}).k, 98u);
}

TEST(spc, distance_small_cases) {
  DistanceReport r = search_min_logical(spc({2, 1}), 4);
  ASSERT_EQ(r.found_weight, 4u);
  DistanceReport r2 = search_min_logical(spc({2, 2}), 4);
  ASSERT_EQ(r2.found_weight, 4u);
}

TEST(spc, logical_witnesses) {
  for (SpcParams p : {SpcParams{2, 1}, SpcParams{2, 2}, SpcParams{3, 1}, SpcParams{3, 2}}) {
    CssCode c = spc(p);
    SpcWitnesses w = spc_logical_witnesses(p);
    ASSERT_EQ(w.w.weight(), size_t{1} << p.D);
    ASSERT_TRUE(c.hx().multiply(w.w).is_zero());
    ASSERT_TRUE(c.hz().multiply(w.w).is_zero());
    ASSERT_TRUE(c.hx().multiply(w.v).is_zero());
    ASSERT_TRUE(c.hz().multiply(w.v).is_zero());
    ASSERT_TRUE(w.w.dot(w.v));
    ASSERT_TRUE(is_logical_failure(c, PauliVector::pure_x(w.w)));
    ASSERT_TRUE(is_logical_failure(c, PauliVector::pure_z(w.w)));
  }
}
