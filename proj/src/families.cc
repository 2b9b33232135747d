#include "qpc/families.h"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "qpc/build.h"
#include "qpc/matrix_io.h"
#include "qpc/zoo.h"

namespace qpc {

namespace {

ComponentCss make_component(const FamilyParams& p) {
  if (p.component == "bell") return bell_pair_component();
  if (p.component == "spc") {
    if (p.component_size < 2) throw std::invalid_argument("spc component needs --component-size >= 2");
    return spc_component(p.component_size);
  }
  if (p.component == "shor") {
    if (p.component_size < 2) throw std::invalid_argument("shor component needs --component-size >= 2");
    return shor_component(p.component_size);
  }
  throw std::invalid_argument("unknown component '" + p.component + "' (expected bell, spc or shor)");
}

std::filesystem::path with_suffix(const std::filesystem::path& prefix, const char* suffix) {
  return std::filesystem::path(prefix.string() + suffix);
}

}  // namespace

CssCode make_code(const FamilyParams& p) {
  const std::string& f = p.family;
  if (f == "spc") return spc({p.D, p.s});
  if (f == "asymmetric") {
    ComponentCss c = make_component(p);
    return asymmetric_product(c, c);
  }
  if (f == "symmetric") {
    ComponentCss c = make_component(p);
    return symmetric_product(c, c, c, c);
  }
  if (f == "dfold") {
    if (p.D < 2) throw std::invalid_argument("dfold requires D >= 2 (got D=" + std::to_string(p.D) + ")");
    std::vector<ComponentCss> comps(p.D * p.D, make_component(p));
    return dfold_product(comps, p.D);
  }
  if (f == "shor") {
    if (p.D < 2) throw std::invalid_argument("shor requires D >= 2");
    return shor_component(p.D).validate();
  }
  if (f == "bicycle") return bicycle({p.n, p.row_weight, p.k, p.seed});
  if (f == "hpc") return hypergraph_product(hpc_seed_matrix());
  if (f == "tanner") return quantum_tanner(default_tanner_spec());
  if (f == "random-css") return random_css(p.n, p.r, p.seed);
  throw std::invalid_argument("unknown code family '" + f + "'");
}

std::string family_label(const FamilyParams& p) {
  const std::string& f = p.family;
  auto num = [](size_t x) { return std::to_string(x); };
  if (f == "spc") return "spc(" + num(p.D) + "," + num(p.s) + ")";
  if (f == "asymmetric" || f == "symmetric") return f + "(" + p.component + num(p.component_size) + ")";
  if (f == "dfold") return "dfold(" + num(p.D) + "," + p.component + num(p.component_size) + ")";
  if (f == "shor") return "shor(" + num(p.D) + ")";
  if (f == "bicycle") {
    return "bicycle(" + num(p.n) + "," + num(p.row_weight) + "," + num(p.k) + ",seed=" + std::to_string(p.seed) + ")";
  }
  if (f == "random-css") return "random-css(" + num(p.n) + "," + num(p.r) + ",seed=" + std::to_string(p.seed) + ")";
  return f;
}

std::pair<MetaCheck, MetaCheck> default_metachecks(const CssCode& code, const FamilyParams& p) {
  if (p.family == "spc" && p.D == 3) {
    return {spc3_metacheck(p.s, CheckType::X), spc3_metacheck(p.s, CheckType::Z)};
  }
  return {metacheck_from_pcm(code.hx()), metacheck_from_pcm(code.hz())};
}

void save_code(const std::filesystem::path& prefix, const CssCode& code, const std::string& label,
               const FamilyParams* params) {
  save_alist(with_suffix(prefix, ".hx.alist"), code.hx());
  save_alist(with_suffix(prefix, ".hz.alist"), code.hz());
  nlohmann::json meta = {
      {"label", label},         {"n", code.n()},           {"k", code.k()},
      {"mx", code.hx().rows()}, {"mz", code.hz().rows()},  {"rank_x", code.rank_x()},
      {"rank_z", code.rank_z()}};
  if (params != nullptr) {
    meta["family"] = {{"name", params->family}, {"D", params->D}, {"s", params->s},
                      {"component", params->component}, {"component_size", params->component_size},
                      {"seed", params->seed}, {"n", params->n}, {"r", params->r},
                      {"row_weight", params->row_weight}, {"k", params->k}};
  }
  std::ofstream out(with_suffix(prefix, ".meta.json"));
  if (!out) throw std::runtime_error("cannot write " + with_suffix(prefix, ".meta.json").string());
  out << meta.dump(2) << "\n";
}

LoadedCode load_code(const std::filesystem::path& prefix) {
  std::ifstream in(with_suffix(prefix, ".meta.json"));
  if (!in) throw std::runtime_error("cannot read " + with_suffix(prefix, ".meta.json").string());
  nlohmann::json meta = nlohmann::json::parse(in);
  CssCode code(load_alist(with_suffix(prefix, ".hx.alist")), load_alist(with_suffix(prefix, ".hz.alist")));
  if (meta.at("n").get<size_t>() != code.n() || meta.at("k").get<size_t>() != code.k()) {
    throw std::runtime_error("code files under " + prefix.string() + " disagree with their metadata");
  }
  return {std::move(code), meta.at("label").get<std::string>()};
}

}  // namespace qpc
