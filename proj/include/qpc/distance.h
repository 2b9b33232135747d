#ifndef QPC_DISTANCE_H
#define QPC_DISTANCE_H

#include <cstdint>
#include <functional>
#include <optional>
#include <span>

#include "qpc/css.h"

namespace qpc {

/// Exact low-weight logical error search result. Counts are over pure-type
/// errors of weight `found_weight`: X (vz = 0), Z (vx = 0) and Y (vx = vz).
struct DistanceReport {
  size_t searched_up_to = 0;
  std::optional<size_t> found_weight;
  uint64_t multiplicity_x = 0;
  uint64_t multiplicity_y = 0;
  uint64_t multiplicity_z = 0;
  std::optional<PauliVector> witness;
};

struct PureDistance {
  std::optional<size_t> x;  ///< min weight of a nonzero kernel vector of hz
  std::optional<size_t> z;  ///< min weight of a nonzero kernel vector of hx
};

/// Largest number of half-supports the meet-in-the-middle table may hold.
inline constexpr uint64_t kMaxHalfSupports = 40'000'000;

/// Visits every weight-`weight` vector in ker(h) exactly once, as an ascending
/// support. The visitor returns false to stop early. Returns false if the
/// search was stopped by the visitor, true when it ran to completion. Throws
/// std::length_error when the half-support table would exceed
/// kMaxHalfSupports entries.
bool for_each_kernel_vector(const BitMatrix& h, size_t weight,
                            const std::function<bool(std::span<const uint32_t>)>& visit);

/// Minimum weight of any logical error up to max_weight (inclusive). Stops
/// early, with `searched_up_to` set to the last completed weight, if a weight
/// exceeds the search budget.
DistanceReport search_min_logical(const CssCode& code, size_t max_weight);

PureDistance pure_distance(const CssCode& code, size_t max_weight);

}  // namespace qpc

#endif
