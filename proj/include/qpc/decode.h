#ifndef QPC_DECODE_H
#define QPC_DECODE_H

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <vector>

#include "qpc/css.h"
#include "qpc/meta.h"

namespace qpc {

/// Returns an error supported on `erased` with syndromes (sx, sz): the X part
/// solves hz restricted to the erased columns against sz, the Z part solves hx
/// against sx, free variables zero. nullopt when either system is
/// inconsistent.
std::optional<PauliVector> decode_erasure(const CssCode& code, std::span<const size_t> erased,
                                          const BitVector& sx, const BitVector& sz);

/// 1 iff the Paulis anticommute.
inline int f4_inner(Pauli a, Pauli b) { return anticommutes(a, b) ? 1 : 0; }


struct BpConfig {
  double epsilon = 0.01;
  double p_readout = 0.0;
  size_t max_iters = 64;
  double llr_clamp = 30.0;
};

/// Throws std::invalid_argument when a field is out of range.
void validate(const BpConfig& cfg);

/// Initial variable-to-check message log((3 - 2 eps) / (2 eps)), clamped.
double bp_initial_llr(const BpConfig& cfg);
/// Depolarizing prior log(eps / (3 (1 - eps))) of X, Y and Z relative to I.
double bp_qubit_prior(const BpConfig& cfg);
/// Readout prior log((1 - p) / p), clamped.
double bp_readout_prior(const BpConfig& cfg);

/// Labeled bipartite graph. Check nodes: X rows, Z rows, then (extended) X
/// meta-checks and Z meta-checks. Variable nodes: n qubits, then (extended)
/// one readout bit per X row and per Z row.
class TannerGraph {
 public:
  /// Edge label: Pauli::X or Pauli::Z for qubit edges, Pauli::I for binary
  /// edges to readout bits.
  struct Edge {
    uint32_t check;
    uint32_t var;
    Pauli label;
  };

  static TannerGraph standard(const CssCode& code);
  static TannerGraph extended(const CssCode& code, const MetaCheck& mx, const MetaCheck& mz);

  size_t num_qubits() const { return num_qubits_; }
  size_t num_readout() const { return num_readout_; }
  size_t num_vars() const { return num_qubits_ + num_readout_; }
  size_t num_checks() const { return check_ptr_.size() - 1; }
  size_t num_parent_checks() const { return num_parent_checks_; }
  size_t num_x_checks() const { return num_x_checks_; }
  bool is_extended() const { return num_readout_ > 0; }

  const std::vector<Edge>& edges() const { return edges_; }
  /// Edges of check c are the contiguous range [check_ptr[c], check_ptr[c+1]).
  std::span<const uint32_t> check_ptr() const { return check_ptr_; }
  /// Edge ids of variable v are var_edges[var_ptr[v] .. var_ptr[v+1]).
  std::span<const uint32_t> var_ptr() const { return var_ptr_; }
  std::span<const uint32_t> var_edges() const { return var_edges_; }

 private:
  void add_check(std::span<const size_t> support, Pauli label, size_t var_offset);
  void finish(size_t num_vars);

  size_t num_qubits_ = 0;
  size_t num_readout_ = 0;
  size_t num_parent_checks_ = 0;
  size_t num_x_checks_ = 0;
  std::vector<Edge> edges_;
  std::vector<uint32_t> check_ptr_{0};
  std::vector<uint32_t> var_ptr_;
  std::vector<uint32_t> var_edges_;
};

struct BpResult {
  PauliVector estimate;
  BitVector readout_estimate;  ///< X-row bits then Z-row bits; empty unless extended
  bool converged = false;
  size_t iterations_used = 0;
};

/// Flooding-schedule quaternary BP. Owns its message buffers; reuse one
/// instance per thread. The graph must outlive the decoder.
class BpDecoder {
 public:
  BpDecoder(const TannerGraph& graph, BpConfig cfg);

  /// Check syndrome in graph order: sx for X rows then sz for Z rows.
  BpResult decode(const BitVector& sx, const BitVector& sz);
  /// Extended graphs only. s_prime and sigma per check type.
  BpResult decode_extended(const ExtendedSyndrome& x, const ExtendedSyndrome& z);

  /// Messages of the last run, indexed by edge id.
  const std::vector<double>& check_to_var() const { return c2v_; }
  const std::vector<double>& var_to_check() const { return v2c_; }

 private:
  BpResult run();

  const TannerGraph& graph_;
  BpConfig cfg_;
  double qubit_prior_;
  double readout_prior_;
  double init_llr_;
  std::vector<uint8_t> syndrome_;  // per check
  std::vector<double> c2v_;
  std::vector<double> v2c_;
  std::vector<double> scratch_;
  std::vector<uint8_t> hard_;  // per variable: Pauli value for qubits, 0/1 for readout bits
};

BpResult bp_decode(const CssCode& code, const BitVector& sx, const BitVector& sz, const BpConfig& cfg);
BpResult bp_decode_extended(const CssCode& code, const MetaCheck& mx, const MetaCheck& mz,
                            const ExtendedSyndrome& x, const ExtendedSyndrome& z, const BpConfig& cfg);

/// Numerically stable log(e^a + e^b).
inline double maxs(double a, double b) {
  return std::max(a, b) + std::log1p(std::exp(-std::abs(a - b)));
}

}  // namespace qpc

#endif
