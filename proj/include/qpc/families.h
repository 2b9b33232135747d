#ifndef QPC_FAMILIES_H
#define QPC_FAMILIES_H

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>

#include "qpc/css.h"
#include "qpc/meta.h"

namespace qpc {

/// Flat parameter set naming one code. Fields a family does not use are
/// ignored.
struct FamilyParams {
  std::string family = "spc";  ///< spc, asymmetric, symmetric, dfold, shor, bicycle, hpc, tanner, random-css
  size_t D = 3;                ///< spc / dfold fold count, shor size
  size_t s = 1;                ///< spc scale
  std::string component = "bell";  ///< asymmetric/symmetric/dfold factor: bell, spc or shor
  size_t component_size = 2;       ///< spc length or shor D of the factor
  uint64_t seed = 1;               ///< bicycle and random-css
  size_t n = 512;                  ///< bicycle and random-css length
  size_t r = 169;                  ///< random-css rows per matrix
  size_t row_weight = 8;           ///< bicycle
  size_t k = 174;                  ///< bicycle target dimension
};

/// Throws std::invalid_argument naming the violated constraint.
CssCode make_code(const FamilyParams& p);

/// Short label such as "spc(3,1)" or "bicycle(512,8,174,seed=1)".
std::string family_label(const FamilyParams& p);

/// The sparse structured meta-checks for spc with D = 3, Gaussian-elimination
/// meta-checks otherwise.
std::pair<MetaCheck, MetaCheck> default_metachecks(const CssCode& code, const FamilyParams& p);

/// Writes prefix.hx.alist, prefix.hz.alist and prefix.meta.json. The metadata
/// records the label, code parameters and, when given, the family parameters.
void save_code(const std::filesystem::path& prefix, const CssCode& code, const std::string& label,
               const FamilyParams* params = nullptr);

struct LoadedCode {
  CssCode code;
  std::string label;
};

/// Reads the files written by save_code and checks the recorded parameters.
LoadedCode load_code(const std::filesystem::path& prefix);

}  // namespace qpc

#endif
