#include "qpc/decode.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qpc {

std::optional<PauliVector> decode_erasure(const CssCode& code, std::span<const size_t> erased,
                                          const BitVector& sx, const BitVector& sz) {
  const size_t n = code.n();
  if (sx.size() != code.hx().rows() || sz.size() != code.hz().rows()) {
    throw std::invalid_argument("decode_erasure: syndrome length mismatch");
  }
  for (size_t q : erased) {
    if (q >= n) throw std::out_of_range("decode_erasure: erased qubit " + std::to_string(q) + " out of range");
  }
  // X errors are seen by the Z checks and vice versa.
  std::optional<BitVector> x_part = solve(code.hz().select_columns(erased), sz);
  std::optional<BitVector> z_part = solve(code.hx().select_columns(erased), sx);
  if (!x_part || !z_part) return std::nullopt;
  BitVector vx(n), vz(n);
  for (size_t i = 0; i < erased.size(); i++) {
    if (x_part->get(i)) vx.set(erased[i]);
    if (z_part->get(i)) vz.set(erased[i]);
  }
  return PauliVector(std::move(vx), std::move(vz));
}

// ---------------------------------------------------------------------------
// Configuration and priors

void validate(const BpConfig& cfg) {
  if (!(cfg.epsilon >= 0 && cfg.epsilon < 0.75)) throw std::invalid_argument("BpConfig: need 0 <= epsilon < 3/4");
  if (!(cfg.p_readout >= 0 && cfg.p_readout < 0.5)) throw std::invalid_argument("BpConfig: need 0 <= p < 1/2");
  if (cfg.max_iters < 1) throw std::invalid_argument("BpConfig: max_iters must be at least 1");
  if (!(cfg.llr_clamp > 0)) throw std::invalid_argument("BpConfig: llr_clamp must be positive");
}

namespace {

double clamp_llr(double x, double bound) { return std::clamp(x, -bound, bound); }

}  // namespace

double bp_initial_llr(const BpConfig& cfg) {
  if (cfg.epsilon == 0) return cfg.llr_clamp;
  return clamp_llr(std::log((3 - 2 * cfg.epsilon) / (2 * cfg.epsilon)), cfg.llr_clamp);
}

double bp_qubit_prior(const BpConfig& cfg) {
  if (cfg.epsilon == 0) return -cfg.llr_clamp;
  return clamp_llr(std::log(cfg.epsilon / (3 * (1 - cfg.epsilon))), cfg.llr_clamp);
}

double bp_readout_prior(const BpConfig& cfg) {
  if (cfg.p_readout == 0) return cfg.llr_clamp;
  return clamp_llr(std::log((1 - cfg.p_readout) / cfg.p_readout), cfg.llr_clamp);
}

// ---------------------------------------------------------------------------
// Graph

void TannerGraph::add_check(std::span<const size_t> support, Pauli label, size_t var_offset) {
  const auto c = static_cast<uint32_t>(check_ptr_.size() - 1);
  for (size_t v : support) edges_.push_back({c, static_cast<uint32_t>(var_offset + v), label});
  check_ptr_.push_back(static_cast<uint32_t>(edges_.size()));
}

void TannerGraph::finish(size_t num_vars) {
  var_ptr_.assign(num_vars + 1, 0);
  for (const Edge& e : edges_) var_ptr_[e.var + 1]++;
  for (size_t v = 0; v < num_vars; v++) var_ptr_[v + 1] += var_ptr_[v];
  var_edges_.resize(edges_.size());
  std::vector<uint32_t> fill(var_ptr_.begin(), var_ptr_.end() - 1);
  for (size_t e = 0; e < edges_.size(); e++) var_edges_[fill[edges_[e].var]++] = static_cast<uint32_t>(e);
}

TannerGraph TannerGraph::standard(const CssCode& code) {
  TannerGraph g;
  g.num_qubits_ = code.n();
  g.num_x_checks_ = code.hx().rows();
  g.num_parent_checks_ = code.hx().rows() + code.hz().rows();
  for (size_t r = 0; r < code.hx().rows(); r++) g.add_check(code.hx().row(r).support(), Pauli::X, 0);
  for (size_t r = 0; r < code.hz().rows(); r++) g.add_check(code.hz().row(r).support(), Pauli::Z, 0);
  g.finish(g.num_qubits_);
  return g;
}

TannerGraph TannerGraph::extended(const CssCode& code, const MetaCheck& mx, const MetaCheck& mz) {
  const size_t n = code.n();
  const size_t rx = code.hx().rows(), rz = code.hz().rows();
  if (mx.m.cols() != rx || mz.m.cols() != rz) {
    throw std::invalid_argument("TannerGraph::extended: meta-check widths do not match the PCM heights");
  }
  TannerGraph g;
  g.num_qubits_ = n;
  g.num_readout_ = rx + rz;
  g.num_x_checks_ = rx;
  g.num_parent_checks_ = rx + rz;
  // Parent check r also touches its own readout bit through a binary edge.
  auto parent = [&](const BitMatrix& h, Pauli label, size_t readout_offset) {
    for (size_t r = 0; r < h.rows(); r++) {
      const auto c = static_cast<uint32_t>(g.check_ptr_.size() - 1);
      for (size_t v : h.row(r).support()) g.edges_.push_back({c, static_cast<uint32_t>(v), label});
      g.edges_.push_back({c, static_cast<uint32_t>(n + readout_offset + r), Pauli::I});
      g.check_ptr_.push_back(static_cast<uint32_t>(g.edges_.size()));
    }
  };
  parent(code.hx(), Pauli::X, 0);
  parent(code.hz(), Pauli::Z, rx);
  for (size_t r = 0; r < mx.m.rows(); r++) g.add_check(mx.m.row(r).support(), Pauli::I, n);
  for (size_t r = 0; r < mz.m.rows(); r++) g.add_check(mz.m.row(r).support(), Pauli::I, n + rx);
  g.finish(n + rx + rz);
  return g;
}

// ---------------------------------------------------------------------------
// Decoder

BpDecoder::BpDecoder(const TannerGraph& graph, BpConfig cfg) : graph_(graph), cfg_(cfg) {
  validate(cfg_);
  qubit_prior_ = bp_qubit_prior(cfg_);
  readout_prior_ = bp_readout_prior(cfg_);
  init_llr_ = bp_initial_llr(cfg_);
  syndrome_.assign(graph_.num_checks(), 0);
  c2v_.assign(graph_.edges().size(), 0.0);
  v2c_.assign(graph_.edges().size(), 0.0);
  hard_.assign(graph_.num_vars(), 0);
}

BpResult BpDecoder::decode(const BitVector& sx, const BitVector& sz) {
  const size_t rx = graph_.num_x_checks();
  if (graph_.is_extended()) throw std::logic_error("BpDecoder::decode: graph is extended");
  if (sx.size() != rx || sz.size() != graph_.num_checks() - rx) {
    throw std::invalid_argument("BpDecoder::decode: syndrome length mismatch");
  }
  for (size_t i = 0; i < rx; i++) syndrome_[i] = sx.get(i);
  for (size_t i = 0; i < sz.size(); i++) syndrome_[rx + i] = sz.get(i);
  return run();
}

BpResult BpDecoder::decode_extended(const ExtendedSyndrome& x, const ExtendedSyndrome& z) {
  if (!graph_.is_extended()) throw std::logic_error("BpDecoder::decode_extended: graph is not extended");
  const size_t rx = graph_.num_x_checks();
  const size_t rz = graph_.num_parent_checks() - rx;
  if (x.s_prime.size() != rx || z.s_prime.size() != rz ||
      rx + rz + x.sigma.size() + z.sigma.size() != graph_.num_checks()) {
    throw std::invalid_argument("BpDecoder::decode_extended: syndrome length mismatch");
  }
  size_t c = 0;
  for (size_t i = 0; i < rx; i++) syndrome_[c++] = x.s_prime.get(i);
  for (size_t i = 0; i < rz; i++) syndrome_[c++] = z.s_prime.get(i);
  for (size_t i = 0; i < x.sigma.size(); i++) syndrome_[c++] = x.sigma.get(i);
  for (size_t i = 0; i < z.sigma.size(); i++) syndrome_[c++] = z.sigma.get(i);
  return run();
}

BpResult BpDecoder::run() {
  const auto& edges = graph_.edges();
  const auto check_ptr = graph_.check_ptr();
  const auto var_ptr = graph_.var_ptr();
  const auto var_edges = graph_.var_edges();
  const size_t nq = graph_.num_qubits();
  const size_t nv = graph_.num_vars();
  const double clamp = cfg_.llr_clamp;
  constexpr double kAtanhLimit = 1.0 - 1e-15;

  for (size_t e = 0; e < edges.size(); e++) v2c_[e] = edges[e].var < nq ? init_llr_ : readout_prior_;

  BpResult result;
  for (size_t iter = 1; iter <= cfg_.max_iters; iter++) {
    // Check nodes.
    for (size_t c = 0; c + 1 < check_ptr.size(); c++) {
      const size_t a = check_ptr[c], b = check_ptr[c + 1];
      const size_t deg = b - a;
      scratch_.resize(2 * deg + 2);
      double* tanhs = scratch_.data();
      double* suffix = scratch_.data() + deg;
      // A message at the clamp counts as certain, so a saturated neighbor
      // leaves the product exactly unchanged.
      for (size_t k = 0; k < deg; k++) {
        const double x = v2c_[a + k];
        tanhs[k] = x >= clamp ? 1.0 : x <= -clamp ? -1.0 : std::tanh(0.5 * x);
      }
      suffix[deg] = 1.0;
      for (size_t k = deg; k-- > 0;) suffix[k] = suffix[k + 1] * tanhs[k];
      const double sign = syndrome_[c] ? -1.0 : 1.0;
      double prefix = 1.0;
      for (size_t k = 0; k < deg; k++) {
        double prod = std::clamp(prefix * suffix[k + 1], -kAtanhLimit, kAtanhLimit);
        c2v_[a + k] = sign * 2.0 * std::atanh(prod);
        prefix *= tanhs[k];
      }
    }

    // Variable nodes.
    for (size_t v = 0; v < nv; v++) {
      const size_t a = var_ptr[v], b = var_ptr[v + 1];
      if (v < nq) {
        // Log-likelihoods of X, Y, Z relative to I.
        double gx = qubit_prior_, gy = qubit_prior_, gz = qubit_prior_;
        for (size_t k = a; k < b; k++) {
          const uint32_t e = var_edges[k];
          const double m = c2v_[e];
          if (edges[e].label == Pauli::X) {
            gy -= m;
            gz -= m;
          } else {
            gx -= m;
            gy -= m;
          }
        }
        Pauli best = Pauli::I;
        double best_val = 0.0;
        if (gx > best_val) best = Pauli::X, best_val = gx;
        if (gy > best_val) best = Pauli::Y, best_val = gy;
        if (gz > best_val) best = Pauli::Z, best_val = gz;
        hard_[v] = static_cast<uint8_t>(best);
        for (size_t k = a; k < b; k++) {
          const uint32_t e = var_edges[k];
          const double m = c2v_[e];
          if (edges[e].label == Pauli::X) {
            v2c_[e] = maxs(0.0, gx) - maxs(gy + m, gz + m);
          } else {
            v2c_[e] = maxs(0.0, gz) - maxs(gx + m, gy + m);
          }
        }
      } else {
        double total = readout_prior_;
        for (size_t k = a; k < b; k++) total += c2v_[var_edges[k]];
        hard_[v] = total < 0 ? 1 : 0;
        for (size_t k = a; k < b; k++) {
          const uint32_t e = var_edges[k];
          v2c_[e] = total - c2v_[e];
        }
      }
    }

    result.iterations_used = iter;
    bool ok = true;
    for (size_t c = 0; c + 1 < check_ptr.size() && ok; c++) {
      uint8_t parity = 0;
      for (size_t e = check_ptr[c]; e < check_ptr[c + 1]; e++) {
        const auto& edge = edges[e];
        if (edge.label == Pauli::I) {
          parity ^= hard_[edge.var];
        } else {
          parity ^= anticommutes(edge.label, static_cast<Pauli>(hard_[edge.var])) ? 1 : 0;
        }
      }
      ok = parity == syndrome_[c];
    }
    if (ok) {
      result.converged = true;
      break;
    }
  }

  result.estimate = PauliVector(BitVector(nq), BitVector(nq));
  for (size_t q = 0; q < nq; q++) result.estimate.set(q, static_cast<Pauli>(hard_[q]));
  result.readout_estimate = BitVector(nv - nq);
  for (size_t v = nq; v < nv; v++) {
    if (hard_[v]) result.readout_estimate.set(v - nq);
  }
  return result;
}

BpResult bp_decode(const CssCode& code, const BitVector& sx, const BitVector& sz, const BpConfig& cfg) {
  TannerGraph graph = TannerGraph::standard(code);
  BpDecoder decoder(graph, cfg);
  return decoder.decode(sx, sz);
}

BpResult bp_decode_extended(const CssCode& code, const MetaCheck& mx, const MetaCheck& mz,
                            const ExtendedSyndrome& x, const ExtendedSyndrome& z, const BpConfig& cfg) {
  TannerGraph graph = TannerGraph::extended(code, mx, mz);
  BpDecoder decoder(graph, cfg);
  return decoder.decode_extended(x, z);
}

}  // namespace qpc
