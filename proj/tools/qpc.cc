// Command-line front end: construct, params, distance, metacheck, simulate.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qpc/build.h"
#include "qpc/distance.h"
#include "qpc/families.h"
#include "qpc/matrix_io.h"
#include "qpc/meta.h"
#include "qpc/sim.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInternal = 2;
constexpr int kExitNotFound = 3;

struct CodeOptions {
  qpc::FamilyParams params;
  std::string positional_family;
  std::string code_prefix;
};

void add_code_options(CLI::App* sub, CodeOptions& o) {
  sub->add_option("family", o.positional_family, "Code family (same as --code-family)");
  sub->add_option("--code-family", o.params.family,
                  "spc, asymmetric, symmetric, dfold, shor, bicycle, hpc, tanner or random-css");
  sub->add_option("--code", o.code_prefix, "Load a code written by construct --out instead of building one");
  sub->add_option("--D", o.params.D, "Fold count (spc, dfold) or Shor size");
  sub->add_option("--s", o.params.s, "SPC scale");
  sub->add_option("--component", o.params.component, "Product factor: bell, spc or shor");
  sub->add_option("--component-size", o.params.component_size, "Length of an spc factor or D of a shor factor");
  sub->add_option("--seed", o.params.seed, "Construction seed (bicycle, random-css)");
  sub->add_option("--n", o.params.n, "Block length (bicycle, random-css)");
  sub->add_option("--r", o.params.r, "Rows per matrix (random-css)");
  sub->add_option("--row-weight", o.params.row_weight, "Row weight (bicycle)");
  sub->add_option("--k", o.params.k, "Target dimension (bicycle)");
}

struct Loaded {
  qpc::CssCode code;
  std::string label;
};

Loaded load(CodeOptions& o) {
  if (!o.positional_family.empty()) o.params.family = o.positional_family;
  if (!o.code_prefix.empty()) {
    qpc::LoadedCode lc = qpc::load_code(o.code_prefix);
    return {std::move(lc.code), lc.label};
  }
  return {qpc::make_code(o.params), qpc::family_label(o.params)};
}

int run_construct(CodeOptions& o, const std::string& out) {
  Loaded c = load(o);
  std::cout << qpc::format_stats(qpc::stats(c.code));
  if (!out.empty()) {
    qpc::save_code(out, c.code, c.label, o.code_prefix.empty() ? &o.params : nullptr);
    std::cout << "wrote " << out << ".hx.alist, " << out << ".hz.alist, " << out << ".meta.json\n";
  }
  return kExitOk;
}

int run_params(CodeOptions& o) {
  Loaded c = load(o);
  std::cout << c.label << "\n" << qpc::format_stats(qpc::stats(c.code));
  qpc::MeasurementOverhead ov = qpc::measurement_overhead(c.code);
  std::printf("measurements: minimum %zu, actual %zu, overhead %.2f%%\n", ov.minimum, ov.actual, 100 * ov.ratio);
  if (o.params.family == "spc" && o.code_prefix.empty()) {
    qpc::PredictedStats p = qpc::predict_spc_stats({o.params.D, o.params.s});
    std::printf("predicted: n=%zu k=%zu m=%zu meta=%zu w_r=%zu w_c=%zu d=%zu\n", p.n, p.k, p.m, p.meta,
                p.row_weight, p.col_weight, p.distance);
  }
  return kExitOk;
}

int run_distance(CodeOptions& o, size_t max_weight, bool witness_only) {
  if (max_weight < 1) throw std::invalid_argument("--max-weight must be at least 1");
  Loaded c = load(o);
  if (witness_only) {
    if (o.params.family != "spc" || !o.code_prefix.empty()) {
      throw std::invalid_argument("--witness-only is available for the spc family only");
    }
    qpc::SpcParams sp{o.params.D, o.params.s};
    qpc::SpcWitnesses w = qpc::spc_logical_witnesses(sp);
    const bool undetected = c.code.hx().multiply(w.w).is_zero() && c.code.hz().multiply(w.w).is_zero();
    const bool logical = w.w.dot(w.v) && c.code.hx().multiply(w.v).is_zero();
    std::printf("witness weight %zu: zero syndrome %s, pairs with a stabilizer-orthogonal vector %s\n",
                w.w.weight(), undetected ? "yes" : "no", logical ? "yes" : "no");
    if (!undetected || !logical) return kExitInternal;
    std::printf("d <= %zu\n", w.w.weight());
    return w.w.weight() <= max_weight ? kExitOk : kExitNotFound;
  }
  qpc::DistanceReport r = qpc::search_min_logical(c.code, max_weight);
  if (!r.found_weight) {
    std::printf("no logical operator of weight <= %zu\nd >= %zu\n", r.searched_up_to, r.searched_up_to + 1);
    return kExitNotFound;
  }
  std::printf("d = %zu\nweight-%zu logicals: X %llu, Z %llu, Y %llu\n", *r.found_weight, *r.found_weight,
              static_cast<unsigned long long>(r.multiplicity_x), static_cast<unsigned long long>(r.multiplicity_z),
              static_cast<unsigned long long>(r.multiplicity_y));
  if (r.witness) std::printf("witness: %s\n", r.witness->to_string().c_str());
  return kExitOk;
}

int run_metacheck(CodeOptions& o, const std::string& out, bool certify) {
  Loaded c = load(o);
  auto [mx, mz] = qpc::default_metachecks(c.code, o.params);
  qpc::MeasurementOverhead ov = qpc::measurement_overhead(c.code);
  std::printf("minimum %zu\nactual %zu\noverhead %.2f%%\n", ov.minimum, ov.actual, 100 * ov.ratio);
  std::printf("meta-checks: X %zu rows (rank %zu), Z %zu rows (rank %zu)\n", mx.rows(), qpc::rank(mx.m), mz.rows(),
              qpc::rank(mz.m));
  if (!out.empty()) {
    qpc::save_alist(out + ".mx.alist", mx.m);
    qpc::save_alist(out + ".mz.alist", mz.m);
    std::cout << "wrote " << out << ".mx.alist, " << out << ".mz.alist\n";
  }
  if (certify) {
    for (auto [name, m] : {std::pair{"X", &mx}, std::pair{"Z", &mz}}) {
      size_t d = qpc::metacheck_distance_upto(*m, 3);
      if (d == 0) {
        std::printf("%s meta-check distance > 3\n", name);
      } else {
        std::printf("%s meta-check distance = %zu\n", name, d);
      }
    }
  }
  return kExitOk;
}

struct SimOptions {
  std::string decoder = "bp";
  std::string channel = "depolarizing";
  std::vector<double> beta;
  std::vector<double> epsilon;
  double p = 0;
  uint64_t trials = 10000;
  uint64_t sim_seed = 1;
  size_t max_iters = 64;
  size_t threads = 0;
  uint64_t min_failures = 0;
  std::string out;
};

int run_simulate(CodeOptions& o, const SimOptions& s) {
  Loaded c = load(o);
  qpc::DecoderKind decoder = qpc::parse_decoder(s.decoder);
  std::vector<qpc::ChannelSpec> sweep;
  if (s.channel == "erasure") {
    if (s.beta.empty()) throw std::invalid_argument("the erasure channel needs at least one --beta");
    for (double b : s.beta) sweep.push_back(qpc::ChannelSpec::erasure(b));
  } else if (s.channel == "depolarizing") {
    if (s.epsilon.empty()) throw std::invalid_argument("the depolarizing channel needs at least one --epsilon");
    const bool readout = decoder == qpc::DecoderKind::BpExtended || s.p > 0;
    for (double e : s.epsilon) {
      sweep.push_back(readout ? qpc::ChannelSpec::depolarizing_readout(e, s.p) : qpc::ChannelSpec::depolarizing(e));
    }
  } else {
    throw std::invalid_argument("unknown channel '" + s.channel + "' (expected erasure or depolarizing)");
  }

  std::optional<std::pair<qpc::MetaCheck, qpc::MetaCheck>> metas;
  if (decoder == qpc::DecoderKind::BpExtended) metas = qpc::default_metachecks(c.code, o.params);

  std::ofstream file;
  if (!s.out.empty()) {
    file.open(s.out);
    if (!file) throw std::runtime_error("cannot write " + s.out);
  }
  std::ostream& out = s.out.empty() ? std::cout : file;
  qpc::write_csv_header(out);
  for (const qpc::ChannelSpec& ch : sweep) {
    qpc::SimSetup setup{&c.code, decoder, ch, s.max_iters, metas ? &metas->first : nullptr,
                        metas ? &metas->second : nullptr};
    qpc::RunOptions ro;
    ro.threads = s.threads;
    ro.min_failures = s.min_failures;
    qpc::SimPoint pt = qpc::run_point(setup, s.trials, s.sim_seed, ro);
    qpc::write_csv_row(out, c.label, pt);
    out.flush();
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Product-code CSS construction, analysis and decoding"};
  app.require_subcommand(1);

  CodeOptions construct_opts, params_opts, distance_opts, meta_opts, sim_opts;
  std::string construct_out, meta_out;
  size_t max_weight = 4;
  bool witness_only = false, certify = false;
  SimOptions sim;

  CLI::App* construct = app.add_subcommand("construct", "Build a code, print its parameters, optionally save it");
  add_code_options(construct, construct_opts);
  construct->add_option("--out", construct_out, "Output prefix for .hx.alist, .hz.alist and .meta.json");

  CLI::App* params = app.add_subcommand("params", "Print code parameters and measurement overhead");
  add_code_options(params, params_opts);

  CLI::App* distance = app.add_subcommand("distance", "Search for minimum-weight logical operators");
  add_code_options(distance, distance_opts);
  distance->add_option("--max-weight", max_weight, "Largest weight searched")->check(CLI::PositiveNumber);
  distance->add_flag("--witness-only", witness_only, "Only verify the closed-form spc witness");

  CLI::App* metacheck = app.add_subcommand("metacheck", "Meta-check matrices and measurement overhead");
  add_code_options(metacheck, meta_opts);
  metacheck->add_option("--out", meta_out, "Output prefix for .mx.alist and .mz.alist");
  metacheck->add_flag("--certify", certify, "Exhaustively find the meta-check distance up to 3");

  CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo logical error rates, one CSV row per point");
  add_code_options(simulate, sim_opts);
  simulate->add_option("--decoder", sim.decoder, "erasure-ml, bp or bp-extended");
  simulate->add_option("--channel", sim.channel, "erasure or depolarizing");
  simulate->add_option("--beta", sim.beta, "Erasure probability (repeatable)");
  simulate->add_option("--epsilon", sim.epsilon, "Depolarizing rate (repeatable)");
  simulate->add_option("--p", sim.p, "Syndrome readout flip probability");
  simulate->add_option("--trials", sim.trials, "Trials per point");
  simulate->add_option("--sim-seed", sim.sim_seed, "Monte Carlo seed (--seed selects the code instance)");
  simulate->add_option("--max-iters", sim.max_iters, "BP iteration limit");
  simulate->add_option("--threads", sim.threads, "Worker threads, 0 for all cores");
  simulate->add_option("--min-failures", sim.min_failures, "Stop a point early after this many failures");
  simulate->add_option("--out", sim.out, "CSV path; stdout when absent");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*construct) return run_construct(construct_opts, construct_out);
    if (*params) return run_params(params_opts);
    if (*distance) return run_distance(distance_opts, max_weight, witness_only);
    if (*metacheck) return run_metacheck(meta_opts, meta_out, certify);
    if (*simulate) return run_simulate(sim_opts, sim);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
