#include "qpc/sim.h"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <thread>

namespace qpc {

void validate(const ChannelSpec& ch) {
  if (ch.kind == ChannelKind::Erasure) {
    if (!(ch.param1 >= 0 && ch.param1 <= 1)) throw std::invalid_argument("erasure channel: need 0 <= beta <= 1");
    return;
  }
  if (!(ch.param1 >= 0 && ch.param1 <= 0.75)) {
    throw std::invalid_argument("depolarizing channel: need 0 <= epsilon <= 3/4");
  }
  if (ch.kind == ChannelKind::DepolarizingReadout && !(ch.param2 >= 0 && ch.param2 <= 0.5)) {
    throw std::invalid_argument("readout channel: need 0 <= p <= 1/2");
  }
}

std::string channel_name(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::Erasure:
      return "erasure";
    case ChannelKind::Depolarizing:
      return "depolarizing";
    case ChannelKind::DepolarizingReadout:
      return "depolarizing-readout";
  }
  return "?";
}

std::string decoder_name(DecoderKind kind) {
  switch (kind) {
    case DecoderKind::ErasureMl:
      return "erasure-ml";
    case DecoderKind::Bp:
      return "bp";
    case DecoderKind::BpExtended:
      return "bp-extended";
  }
  return "?";
}

DecoderKind parse_decoder(const std::string& name) {
  if (name == "erasure-ml") return DecoderKind::ErasureMl;
  if (name == "bp") return DecoderKind::Bp;
  if (name == "bp-extended") return DecoderKind::BpExtended;
  throw std::invalid_argument("unknown decoder '" + name + "'");
}

std::mt19937_64 trial_rng(uint64_t seed, uint64_t index) {
  // splitmix64 over (seed, index) gives a well-mixed key per trial.
  auto mix = [](uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  std::seed_seq seq{mix(seed), mix(seed ^ mix(index)), mix(index)};
  return std::mt19937_64(seq);
}

SampledError sample_error(const ChannelSpec& ch, size_t n, size_t mx, size_t mz, std::mt19937_64& rng) {
  SampledError out;
  out.error = PauliVector(BitVector(n), BitVector(n));
  if (ch.kind == ChannelKind::Erasure) {
    for (size_t q = 0; q < n; q++) {
      if (uniform01(rng) < ch.param1) {
        out.erased.push_back(q);
        out.error.set(q, static_cast<Pauli>(rng() & 3));
      }
    }
    return out;
  }
  const double eps = ch.param1;
  for (size_t q = 0; q < n; q++) {
    double u = uniform01(rng);
    if (u < eps) out.error.set(q, static_cast<Pauli>(1 + std::min<int>(2, int(3 * u / eps))));
  }
  if (ch.kind == ChannelKind::DepolarizingReadout) {
    out.readout_x = BitVector(mx);
    out.readout_z = BitVector(mz);
    for (size_t i = 0; i < mx; i++) {
      if (uniform01(rng) < ch.param2) out.readout_x.set(i);
    }
    for (size_t i = 0; i < mz; i++) {
      if (uniform01(rng) < ch.param2) out.readout_z.set(i);
    }
  }
  return out;
}

void validate(const SimSetup& setup) {
  if (setup.code == nullptr) throw std::invalid_argument("simulation: no code");
  validate(setup.channel);
  const bool erasure = setup.channel.kind == ChannelKind::Erasure;
  switch (setup.decoder) {
    case DecoderKind::ErasureMl:
      if (!erasure) throw std::invalid_argument("decoder erasure-ml requires the erasure channel");
      break;
    case DecoderKind::Bp:
      if (erasure) throw std::invalid_argument("decoder bp requires a depolarizing channel");
      break;
    case DecoderKind::BpExtended:
      if (setup.channel.kind != ChannelKind::DepolarizingReadout) {
        throw std::invalid_argument("decoder bp-extended requires the depolarizing channel with readout flips");
      }
      if (setup.meta_x == nullptr || setup.meta_z == nullptr) {
        throw std::invalid_argument("decoder bp-extended requires meta-checks");
      }
      break;
  }
  if (setup.max_iters < 1) throw std::invalid_argument("simulation: max_iters must be at least 1");
}

namespace {

BpConfig bp_config(const SimSetup& setup) {
  BpConfig cfg;
  cfg.epsilon = setup.channel.param1;
  cfg.p_readout = setup.channel.kind == ChannelKind::DepolarizingReadout ? setup.channel.param2 : 0.0;
  // Priors at the edges of the valid range are clamped inside the decoder.
  cfg.epsilon = std::min(cfg.epsilon, std::nextafter(0.75, 0.0));
  cfg.p_readout = std::min(cfg.p_readout, std::nextafter(0.5, 0.0));
  cfg.max_iters = setup.max_iters;
  return cfg;
}

}  // namespace

std::optional<TannerGraph> make_graph(const SimSetup& setup) {
  validate(setup);
  switch (setup.decoder) {
    case DecoderKind::ErasureMl:
      return std::nullopt;
    case DecoderKind::Bp:
      return TannerGraph::standard(*setup.code);
    case DecoderKind::BpExtended:
      return TannerGraph::extended(*setup.code, *setup.meta_x, *setup.meta_z);
  }
  return std::nullopt;
}

TrialRunner::TrialRunner(const SimSetup& setup, const TannerGraph* graph) : setup_(setup) {
  validate(setup_);
  if (setup_.decoder != DecoderKind::ErasureMl) {
    if (graph == nullptr) throw std::invalid_argument("TrialRunner: BP decoders need a graph");
    bp_.emplace(*graph, bp_config(setup_));
  }
}

TrialOutcome TrialRunner::run(std::mt19937_64& rng) {
  const CssCode& code = *setup_.code;
  return run_on(sample_error(setup_.channel, code.n(), code.hx().rows(), code.hz().rows(), rng));
}

TrialOutcome TrialRunner::run_on(const SampledError& sample) {
  const CssCode& code = *setup_.code;
  const Syndrome syn = syndromes(code, sample.error);
  TrialOutcome out;
  PauliVector estimate;
  switch (setup_.decoder) {
    case DecoderKind::ErasureMl: {
      std::optional<PauliVector> est = decode_erasure(code, sample.erased, syn.sx, syn.sz);
      if (!est) throw std::logic_error("erasure decoder found no solution for a consistent syndrome");
      estimate = std::move(*est);
      out.converged = true;
      break;
    }
    case DecoderKind::Bp: {
      BitVector sx = syn.sx, sz = syn.sz;
      if (setup_.channel.kind == ChannelKind::DepolarizingReadout) {
        sx ^= sample.readout_x;
        sz ^= sample.readout_z;
      }
      BpResult r = bp_->decode(sx, sz);
      estimate = std::move(r.estimate);
      out.converged = r.converged;
      break;
    }
    case DecoderKind::BpExtended: {
      BitVector sx = syn.sx, sz = syn.sz;
      sx ^= sample.readout_x;
      sz ^= sample.readout_z;
      BpResult r = bp_->decode_extended(extended_syndrome(*setup_.meta_x, std::move(sx)),
                                        extended_syndrome(*setup_.meta_z, std::move(sz)));
      estimate = std::move(r.estimate);
      out.converged = r.converged;
      break;
    }
  }
  PauliVector residual = sample.error;
  residual *= estimate;
  out.residual_weight = residual.weight();
  const Syndrome rs = syndromes(code, residual);
  out.failed = !rs.sx.is_zero() || !rs.sz.is_zero() || is_logical_failure(code, residual);
  return out;
}

SimPoint run_point(const SimSetup& setup, uint64_t trials, uint64_t seed, const RunOptions& opts) {
  if (trials < 1) throw std::invalid_argument("run_point: trials must be at least 1");
  const std::optional<TannerGraph> graph = make_graph(setup);
  const TannerGraph* gp = graph ? &*graph : nullptr;
  size_t threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  const uint64_t chunk = opts.min_failures ? std::max<uint64_t>(1, opts.chunk) : trials;

  std::vector<TrialRunner> runners;
  threads = std::max<size_t>(1, std::min<uint64_t>(threads, chunk));
  for (size_t t = 0; t < threads; t++) runners.emplace_back(setup, gp);

  uint64_t done = 0, failures = 0;
  while (done < trials) {
    const uint64_t begin = done, end = std::min(trials, done + chunk);
    std::vector<uint64_t> fails(threads, 0);
    std::vector<std::exception_ptr> errors(threads);
    auto work = [&](size_t t) {
      try {
        for (uint64_t i = begin + t; i < end; i += threads) {
          std::mt19937_64 rng = trial_rng(seed, i);
          if (runners[t].run(rng).failed) fails[t]++;
        }
      } catch (...) {
        errors[t] = std::current_exception();
      }
    };
    if (threads == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (size_t t = 0; t < threads; t++) pool.emplace_back(work, t);
      for (auto& th : pool) th.join();
    }
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    for (uint64_t f : fails) failures += f;
    done = end;
    if (opts.min_failures && failures >= opts.min_failures) break;
  }

  SimPoint p;
  p.channel = setup.channel;
  p.decoder = setup.decoder;
  p.trials = done;
  p.failures = failures;
  p.seed = seed;
  p.rate = double(failures) / double(done);
  p.stderr_ = std::sqrt(p.rate * (1 - p.rate) / double(done));
  return p;
}

void write_csv_header(std::ostream& out) {
  out << "code,decoder,channel,param1,param2,trials,failures,rate,stderr,seed\n";
}

void write_csv_row(std::ostream& out, const std::string& code_name, const SimPoint& p) {
  char buf[512];
  std::snprintf(buf, sizeof buf, "%s,%s,%s,%.17g,%.17g,%" PRIu64 ",%" PRIu64 ",%.17g,%.17g,%" PRIu64 "\n",
                code_name.c_str(), decoder_name(p.decoder).c_str(), channel_name(p.channel.kind).c_str(),
                p.channel.param1, p.channel.param2, p.trials, p.failures, p.rate, p.stderr_, p.seed);
  out << buf;
}

}  // namespace qpc
