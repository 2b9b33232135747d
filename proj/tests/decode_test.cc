#include "qpc/decode.h"

#include <algorithm>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "oracles.h"
#include "qpc/build.h"
#include "qpc/sim.h"

using namespace qpc;

namespace {

CssCode bell() { return CssCode(BitMatrix::from_strings({"11"}), BitMatrix::from_strings({"11"})); }

/// Distinct elements of the row span of h.
std::vector<BitVector> span_elements(const BitMatrix& h) {
  std::vector<BitVector> out;
  for (uint64_t mask = 0; mask < (uint64_t{1} << h.rows()); mask++) {
    BitVector acc(h.cols());
    for (size_t r = 0; r < h.rows(); r++) {
      if ((mask >> r) & 1) acc ^= h.row(r);
    }
    out.push_back(acc);
  }
  auto key = [](const BitVector& v) { return v.to_string(); };
  std::sort(out.begin(), out.end(), [&](const BitVector& a, const BitVector& b) { return key(a) < key(b); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool supported_on(const BitVector& v, uint64_t mask) {
  for (size_t q : v.support()) {
    if (!((mask >> q) & 1)) return false;
  }
  return true;
}

}  // namespace

TEST(decode_erasure, examples) {
  CssCode c = spc({2, 1});
  std::vector<size_t> none;
  auto id = decode_erasure(c, none, BitVector(c.hx().rows()), BitVector(c.hz().rows()));
  ASSERT_TRUE(id.has_value());
  ASSERT_TRUE(id->is_identity());

  BitVector row = c.hx().row(2);
  std::vector<size_t> erased = row.support();
  PauliVector e = PauliVector::pure_x(row);
  Syndrome s = syndromes(c, e);
  auto est = decode_erasure(c, erased, s.sx, s.sz);
  ASSERT_TRUE(est.has_value());
  ASSERT_FALSE(is_logical_failure(c, e * *est));

  BitVector w = spc_logical_witnesses({2, 1}).w;
  PauliVector logical = PauliVector::pure_x(w);
  Syndrome zero = syndromes(c, logical);
  ASSERT_TRUE(zero.is_zero());
  auto est2 = decode_erasure(c, w.support(), zero.sx, zero.sz);
  ASSERT_TRUE(est2->is_identity());
  ASSERT_TRUE(is_logical_failure(c, logical * *est2));

  std::vector<size_t> bad{0};
  BitVector sx(c.hx().rows());
  sx.set(5);
  ASSERT_FALSE(decode_erasure(c, bad, sx, BitVector(c.hz().rows())).has_value());
  std::vector<size_t> out_of_range{16};
  ASSERT_THROW(decode_erasure(c, out_of_range, BitVector(c.hx().rows()), BitVector(c.hz().rows())),
               std::out_of_range);
}

TEST(decode_erasure, matches_ml_coset_oracle_on_spc21) {
  CssCode c = spc({2, 1});
  const size_t n = c.n();
  std::vector<BitVector> sx_span = span_elements(c.hx()), sz_span = span_elements(c.hz());
  size_t patterns = 0;
  for (uint64_t mask = 1; mask < (uint64_t{1} << n); mask++) {
    const size_t size = __builtin_popcountll(mask);
    if (size > 5) continue;
    patterns++;
    std::vector<size_t> erased;
    for (size_t q = 0; q < n; q++) {
      if ((mask >> q) & 1) erased.push_back(q);
    }
    // Oracle: errors on the erased set split evenly over L logical classes,
    // L = |undetectable errors on E| / |stabilizers on E|. ML succeeds with
    // probability 1 / L.
    uint64_t undetectable = 0;
    for (uint64_t bx = 0; bx < (uint64_t{1} << size); bx++) {
      for (uint64_t bz = 0; bz < (uint64_t{1} << size); bz++) {
        BitVector vx(n), vz(n);
        for (size_t i = 0; i < size; i++) {
          vx.set(erased[i], (bx >> i) & 1);
          vz.set(erased[i], (bz >> i) & 1);
        }
        if (oracle::multiply(c.hz(), vx).is_zero() && oracle::multiply(c.hx(), vz).is_zero()) undetectable++;
      }
    }
    uint64_t stab_x = 0, stab_z = 0;
    for (const auto& v : sx_span) stab_x += supported_on(v, mask);
    for (const auto& v : sz_span) stab_z += supported_on(v, mask);
    ASSERT_EQ(undetectable % (stab_x * stab_z), 0u);
    const uint64_t classes = undetectable / (stab_x * stab_z);

    uint64_t failures = 0, total = uint64_t{1} << (2 * size);
    for (uint64_t bits = 0; bits < total; bits++) {
      PauliVector e(n);
      for (size_t i = 0; i < size; i++) e.set(erased[i], static_cast<Pauli>((bits >> (2 * i)) & 3));
      Syndrome s = syndromes(c, e);
      auto est = decode_erasure(c, erased, s.sx, s.sz);
      ASSERT_TRUE(est.has_value());
      PauliVector residual = e * *est;
      ASSERT_TRUE(syndromes(c, residual).is_zero());
      failures += is_logical_failure(c, residual);
    }
    // failures / total == 1 - 1 / classes
    ASSERT_EQ(failures * classes, total * (classes - 1)) << "mask " << mask;
  }
  ASSERT_EQ(patterns, 6884u);
}

TEST(bp_priors, formulas) {
  BpConfig cfg;
  cfg.epsilon = 0.01;
  ASSERT_NEAR(bp_initial_llr(cfg), std::log(2.98 / 0.02), 1e-12);
  ASSERT_NEAR(bp_initial_llr(cfg), 5.003, 1e-3);
  ASSERT_NEAR(bp_qubit_prior(cfg), std::log(0.01 / 2.97), 1e-12);
  cfg.p_readout = 1e-3;
  ASSERT_NEAR(bp_readout_prior(cfg), 6.907, 1e-3);
  ASSERT_GT(bp_readout_prior(cfg), 0);
  cfg.epsilon = 0;
  cfg.p_readout = 0;
  ASSERT_EQ(bp_initial_llr(cfg), 30.0);
  ASSERT_EQ(bp_readout_prior(cfg), 30.0);
  ASSERT_EQ(bp_qubit_prior(cfg), -30.0);
}

TEST(bp_config, validation) {
  BpConfig cfg;
  validate(cfg);
  cfg.epsilon = 0.75;
  ASSERT_THROW(validate(cfg), std::invalid_argument);
  cfg = {};
  cfg.p_readout = -0.1;
  ASSERT_THROW(validate(cfg), std::invalid_argument);
  cfg = {};
  cfg.max_iters = 0;
  ASSERT_THROW(validate(cfg), std::invalid_argument);
}

TEST(maxs, accuracy) {
  for (double a = -30; a <= 30; a += 0.37) {
    for (double b = -30; b <= 30; b += 0.41) {
      long double exact = std::log(std::exp((long double)a) + std::exp((long double)b));
      ASSERT_NEAR(maxs(a, b), (double)exact, 1e-12);
    }
  }
}

TEST(tanner_graph, standard_and_extended_shapes) {
  CssCode c = spc({2, 1});
  TannerGraph g = TannerGraph::standard(c);
  ASSERT_EQ(g.num_checks(), 16u);
  ASSERT_EQ(g.num_vars(), 16u);
  ASSERT_EQ(g.edges().size(), c.hx().count_ones() + c.hz().count_ones());
  ASSERT_FALSE(g.is_extended());
  MetaCheck mx = metacheck_from_pcm(c.hx()), mz = metacheck_from_pcm(c.hz());
  TannerGraph ge = TannerGraph::extended(c, mx, mz);
  ASSERT_EQ(ge.num_checks(), 16u + mx.rows() + mz.rows());
  ASSERT_EQ(ge.num_vars(), 32u);
  ASSERT_EQ(ge.edges().size(), g.edges().size() + 16 + mx.m.count_ones() + mz.m.count_ones());
  for (size_t c2 = 0; c2 < ge.num_checks(); c2++) {
    for (uint32_t e = ge.check_ptr()[c2]; e < ge.check_ptr()[c2 + 1]; e++) {
      const auto& edge = ge.edges()[e];
      ASSERT_EQ(edge.check, c2);
      ASSERT_EQ(edge.label == Pauli::I, edge.var >= 16);
    }
  }
  ASSERT_THROW(TannerGraph::extended(c, mz, MetaCheck{BitMatrix(1, 3), 3, 2}), std::invalid_argument);
}

TEST(bp_decode, zero_syndrome) {
  CssCode c = spc({3, 1});
  for (double eps : {0.001, 0.1, 0.5, 0.7}) {
    BpConfig cfg;
    cfg.epsilon = eps;
    BpResult r = bp_decode(c, BitVector(192), BitVector(192), cfg);
    ASSERT_TRUE(r.converged);
    ASSERT_TRUE(r.estimate.is_identity());
    ASSERT_EQ(r.iterations_used, 1u);
  }
}

TEST(bp_decode, bell_pair_symmetry) {
  // Z0 and Z1 explain sx = (1) equally well: brute-force ML over all 16
  // errors finds the two weight-one Z errors tied, lowest index Z0.
  CssCode b = bell();
  const double eps = 0.01;
  double best = -1;
  std::string best_error;
  for (int i = 0; i < 16; i++) {
    PauliVector e(2);
    e.set(0, static_cast<Pauli>(i & 3));
    e.set(1, static_cast<Pauli>(i >> 2));
    Syndrome s = syndromes(b, e);
    if (!(s.sx.get(0) && !s.sz.get(0))) continue;
    double prob = 1;
    for (size_t q = 0; q < 2; q++) prob *= e.get(q) == Pauli::I ? 1 - eps : eps / 3;
    if (prob > best + 1e-15) {
      best = prob;
      best_error = e.to_string();
    }
  }
  ASSERT_EQ(best_error, "ZI");

  TannerGraph g = TannerGraph::standard(b);
  BpConfig cfg;
  cfg.epsilon = eps;
  for (size_t iters : {1, 2, 5, 64}) {
    cfg.max_iters = iters;
    BpDecoder dec(g, cfg);
    BpResult r = dec.decode(BitVector::from_string("1"), BitVector::from_string("0"));
    // Edges of check c are (c, 0), (c, 1): both qubits see identical messages.
    for (size_t c = 0; c < 2; c++) {
      uint32_t e0 = g.check_ptr()[c];
      ASSERT_EQ(dec.check_to_var()[e0], dec.check_to_var()[e0 + 1]);
      ASSERT_EQ(dec.var_to_check()[e0], dec.var_to_check()[e0 + 1]);
    }
    ASSERT_EQ(r.estimate.get(0), r.estimate.get(1));
    ASSERT_FALSE(r.converged);
    ASSERT_EQ(r.iterations_used, iters);
  }
}

TEST(bp_decode, converged_estimates_match_syndrome) {
  CssCode c = spc({3, 1});
  BpConfig cfg;
  cfg.epsilon = 0.03;
  TannerGraph g = TannerGraph::standard(c);
  BpDecoder dec(g, cfg);
  std::mt19937_64 rng(31);
  ChannelSpec ch = ChannelSpec::depolarizing(0.03);
  int converged = 0;
  for (int t = 0; t < 200; t++) {
    SampledError s = sample_error(ch, c.n(), 0, 0, rng);
    Syndrome syn = syndromes(c, s.error);
    BpResult r = dec.decode(syn.sx, syn.sz);
    if (r.converged) {
      converged++;
      ASSERT_EQ(syndromes(c, r.estimate), syn);
    } else {
      ASSERT_NE(syndromes(c, r.estimate), syn);
    }
  }
  ASSERT_GT(converged, 100);
}

TEST(bp_decode, corrects_single_qubit_errors) {
  CssCode c = spc({2, 1});
  BpConfig cfg;
  cfg.epsilon = 0.01;
  for (size_t q = 0; q < c.n(); q++) {
    for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
      PauliVector e(c.n());
      e.set(q, p);
      Syndrome s = syndromes(c, e);
      BpResult r = bp_decode(c, s.sx, s.sz, cfg);
      ASSERT_TRUE(r.converged);
      ASSERT_FALSE(is_logical_failure(c, e * r.estimate));
    }
  }
}

TEST(bp_decode_extended, locates_single_readout_flip) {
  CssCode c = spc({3, 1});
  MetaCheck mx = spc3_metacheck(1, CheckType::X), mz = spc3_metacheck(1, CheckType::Z);
  BpConfig cfg;
  cfg.epsilon = 0.01;
  cfg.p_readout = 1e-3;
  TannerGraph g = TannerGraph::extended(c, mx, mz);
  BpDecoder dec(g, cfg);
  for (size_t j : {0, 17, 100, 191}) {
    for (bool x_side : {true, false}) {
      BitVector sx(192), sz(192);
      (x_side ? sx : sz).set(j);
      ExtendedSyndrome ex = extended_syndrome(mx, sx), ez = extended_syndrome(mz, sz);
      ASSERT_FALSE((x_side ? ex : ez).sigma.is_zero());
      BpResult r = dec.decode_extended(ex, ez);
      ASSERT_TRUE(r.converged);
      ASSERT_TRUE(r.estimate.is_identity());
      ASSERT_EQ(r.readout_estimate.weight(), 1u);
      ASSERT_TRUE(r.readout_estimate.get(x_side ? j : 192 + j));
    }
  }
  ASSERT_THROW(dec.decode(BitVector(192), BitVector(192)), std::logic_error);
}

TEST(bp_decode_extended, agrees_with_plain_bp_without_readout_noise) {
  CssCode c = spc({3, 1});
  MetaCheck mx = spc3_metacheck(1, CheckType::X), mz = spc3_metacheck(1, CheckType::Z);
  BpConfig cfg;
  cfg.epsilon = 0.0398;
  TannerGraph g = TannerGraph::standard(c), ge = TannerGraph::extended(c, mx, mz);
  BpDecoder plain(g, cfg), ext(ge, cfg);
  ChannelSpec ch = ChannelSpec::depolarizing(cfg.epsilon);
  int agree = 0;
  for (uint64_t t = 0; t < 1000; t++) {
    std::mt19937_64 rng = trial_rng(7, t);
    SampledError s = sample_error(ch, c.n(), 0, 0, rng);
    Syndrome syn = syndromes(c, s.error);
    BpResult a = plain.decode(syn.sx, syn.sz);
    BpResult b = ext.decode_extended(extended_syndrome(mx, syn.sx), extended_syndrome(mz, syn.sz));
    agree += a.estimate == b.estimate;
  }
  ASSERT_EQ(agree, 1000);
}
