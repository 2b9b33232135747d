#ifndef QPC_ZOO_H
#define QPC_ZOO_H

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "qpc/css.h"

namespace qpc {

/// Element s^a t^b of G = <s, t | s^4 = t^5 = 1, ts = st^2>, in normal form.
/// Multiplication: (s^a t^b)(s^c t^d) = s^(a+c) t^(b 2^c + d).
struct CayleyElement {
  uint8_t a = 0;  ///< exponent of s, mod 4
  uint8_t b = 0;  ///< exponent of t, mod 5

  static constexpr size_t kOrder = 20;

  static CayleyElement identity() { return {}; }
  static CayleyElement s() { return {1, 0}; }
  static CayleyElement t() { return {0, 1}; }
  /// Element with the given lexicographic index 5a + b.
  static CayleyElement from_index(size_t index);
  /// Parses words like "1", "s^3", "t^2 s^2", "ts^3" into normal form.
  static CayleyElement parse(std::string_view word);

  size_t index() const { return 5 * size_t{a} + b; }
  CayleyElement inverse() const;
  CayleyElement pow(unsigned k) const;

  friend CayleyElement operator*(CayleyElement x, CayleyElement y);
  bool operator==(const CayleyElement&) const = default;
};

struct TannerSpec {
  std::vector<CayleyElement> A;
  std::vector<CayleyElement> B;
  BitMatrix h_a;       ///< m x Delta
  BitMatrix h_a_perp;  ///< (Delta - m) x Delta
  BitMatrix h_b;       ///< (Delta - m) x Delta
  BitMatrix h_b_perp;  ///< m x Delta
};

/// The Delta = 5, m = 1 instance with the reference A and B word lists.
TannerSpec default_tanner_spec();

/// Throws std::invalid_argument when A or B is not closed under inversion or
/// the local codes are not orthogonal.
void validate(const TannerSpec& spec);

/// Qubits are squares (g, a, b), indexed g * |A||B| + ia * |B| + ib. Even
/// vertices (g,0,0), (g,1,1) carry X checks h_a (x) h_b; odd vertices (g,0,1),
/// (g,1,0) carry Z checks h_a_perp (x) h_b_perp.
CssCode quantum_tanner(const TannerSpec& spec);

struct BicycleSpec {
  size_t n = 512;
  size_t row_weight = 8;
  size_t k = 174;
  uint64_t seed = 1;
};

/// H0 = (C | C^T) for a random circulant C of size n/2, then k/2 rows are
/// greedily deleted, each time the row whose removal leaves the most uniform
/// column weights (lowest index on ties). hx = hz = the pruned matrix.
/// Circulants are redrawn until the pruned matrix has full row rank.
CssCode bicycle(const BicycleSpec& spec);

/// Hypergraph product of a full-rank m x n PCM h:
/// hx = (h (x) I_n | I_m (x) h^T), hz = (I_n (x) h | h^T (x) I_m).
CssCode hypergraph_product(const BitMatrix& h);

/// Frozen 8 x 21 parity-check matrix of a [21,13,4] code, from find_hpc_seed.
BitMatrix hpc_seed_matrix();
inline constexpr uint64_t kHpcSeedSearchSeed = 2024;

/// Randomized search for a sparse full-rank 8 x 21 PCM (column weights <= 4)
/// whose code has minimum distance exactly 4. Throws std::runtime_error after
/// `max_attempts` rejected samples.
BitMatrix find_hpc_seed(uint64_t seed, size_t max_attempts = 1'000'000);

/// hx = first r rows of a uniformly random invertible A, hz = rows r..2r-1 of
/// (A^-1)^T.
CssCode random_css(size_t n, size_t r, uint64_t seed);

}  // namespace qpc

#endif
