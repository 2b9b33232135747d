#ifndef QPC_SIM_H
#define QPC_SIM_H

#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "qpc/decode.h"

namespace qpc {

enum class ChannelKind : uint8_t { Erasure, Depolarizing, DepolarizingReadout };

struct ChannelSpec {
  ChannelKind kind = ChannelKind::Depolarizing;
  double param1 = 0;  ///< beta for erasure, epsilon otherwise
  double param2 = 0;  ///< readout flip probability p

  static ChannelSpec erasure(double beta) { return {ChannelKind::Erasure, beta, 0}; }
  static ChannelSpec depolarizing(double eps) { return {ChannelKind::Depolarizing, eps, 0}; }
  static ChannelSpec depolarizing_readout(double eps, double p) {
    return {ChannelKind::DepolarizingReadout, eps, p};
  }
};

void validate(const ChannelSpec& ch);
std::string channel_name(ChannelKind kind);

enum class DecoderKind : uint8_t { ErasureMl, Bp, BpExtended };
std::string decoder_name(DecoderKind kind);
/// Accepts "erasure-ml", "bp" and "bp-extended".
DecoderKind parse_decoder(const std::string& name);

struct SampledError {
  PauliVector error;
  std::vector<size_t> erased;  ///< erasure channel only, ascending
  BitVector readout_x;         ///< readout channel only
  BitVector readout_z;
};

/// Uniform double in [0, 1) from the top 53 bits of one draw.
inline double uniform01(std::mt19937_64& rng) { return double(rng() >> 11) * 0x1.0p-53; }

/// Generator for trial `index` of a point run with `seed`. Independent of how
/// trials are scheduled.
std::mt19937_64 trial_rng(uint64_t seed, uint64_t index);

/// Readout flips are drawn only for the readout channel, with mx and mz bits.
SampledError sample_error(const ChannelSpec& ch, size_t n, size_t mx, size_t mz, std::mt19937_64& rng);

struct TrialOutcome {
  bool failed = false;
  bool converged = false;
  size_t residual_weight = 0;
};

/// Everything a point needs besides the trial count and seed. Meta-checks are
/// required for bp-extended.
struct SimSetup {
  const CssCode* code = nullptr;
  DecoderKind decoder = DecoderKind::Bp;
  ChannelSpec channel;
  size_t max_iters = 64;
  const MetaCheck* meta_x = nullptr;
  const MetaCheck* meta_z = nullptr;
};

/// Throws std::invalid_argument for incompatible decoder/channel pairs or
/// missing meta-checks.
void validate(const SimSetup& setup);

/// One worker's decoding state. The graph, if any, must outlive the runner.
class TrialRunner {
 public:
  TrialRunner(const SimSetup& setup, const TannerGraph* graph);
  /// Sample, decode, classify. The residual is error + estimate; the trial
  /// fails when the residual has a nonzero syndrome or is a logical operator.
  TrialOutcome run(std::mt19937_64& rng);
  TrialOutcome run_on(const SampledError& sample);

 private:
  SimSetup setup_;
  std::optional<BpDecoder> bp_;
};

/// Decoding graph for the setup, or nullopt for the erasure decoder.
std::optional<TannerGraph> make_graph(const SimSetup& setup);

struct SimPoint {
  ChannelSpec channel;
  DecoderKind decoder = DecoderKind::Bp;
  uint64_t trials = 0;
  uint64_t failures = 0;
  uint64_t seed = 0;
  double rate = 0;
  double stderr_ = 0;
};

struct RunOptions {
  size_t threads = 0;         ///< 0 means hardware concurrency
  uint64_t min_failures = 0;  ///< stop after the first chunk reaching this; 0 disables
  uint64_t chunk = 4096;      ///< early-stop granularity
};

SimPoint run_point(const SimSetup& setup, uint64_t trials, uint64_t seed, const RunOptions& opts = {});

void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const std::string& code_name, const SimPoint& p);

}  // namespace qpc

#endif
