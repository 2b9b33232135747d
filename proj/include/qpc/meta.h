#ifndef QPC_META_H
#define QPC_META_H

#include "qpc/css.h"

namespace qpc {

/// Rows are linear dependencies among the rows of a parent PCM H: m * H = 0.
struct MetaCheck {
  BitMatrix m;
  size_t parent_rows = 0;
  size_t parent_rank = 0;

  size_t rows() const { return m.rows(); }
  /// parent_rows - parent_rank, the dimension of ker(H^T).
  size_t redundancy() const { return parent_rows - parent_rank; }
};

/// Checks m * h = 0 and that the rows of m span the whole left kernel of h.
/// Throws std::invalid_argument otherwise.
void validate(const MetaCheck& meta, const BitMatrix& h);

/// The last (rows - rank) rows of the row-reduction transform of h.
MetaCheck metacheck_from_pcm(const BitMatrix& h);

/// Sparse meta-checks for SPC(3,s) in the code's own row order. Each of the
/// three check blocks computes the parity of (8s)^2 slabs; row (k, x) says the
/// two blocks that see coordinate x of group k agree on its total parity.
/// 24s rows of weight 16s, rank 24s - 1.
MetaCheck spc3_metacheck(size_t s, CheckType type);

struct ExtendedPcm {
  BitMatrix h_ext;  ///< ((H | I_m) / (0 | M))
  size_t n = 0;     ///< data columns
  size_t m = 0;     ///< parent checks
};

ExtendedPcm extend_pcm(const BitMatrix& h, const MetaCheck& meta);

struct ExtendedSyndrome {
  BitVector s_prime;  ///< measured syndrome, possibly with readout flips
  BitVector sigma;    ///< meta * s_prime
};

ExtendedSyndrome extended_syndrome(const MetaCheck& meta, BitVector s_prime);

struct MeasurementOverhead {
  size_t minimum = 0;  ///< rank_x + rank_z
  size_t actual = 0;   ///< m_x + m_z
  double ratio = 0;    ///< (actual - minimum) / minimum
};

MeasurementOverhead measurement_overhead(const CssCode& code);

/// 1_k (x) h: every check measured k times.
BitMatrix repeated_pcm(const BitMatrix& h, size_t k);
/// H_rep(k) (x) I_m, meta-checks of repeated_pcm(h, k) with h having m rows.
MetaCheck repetition_metacheck(const BitMatrix& h, size_t k);

/// Smallest w <= max_weight with a weight-w vector in ker(meta.m), or 0 when
/// none exists up to max_weight.
size_t metacheck_distance_upto(const MetaCheck& meta, size_t max_weight);

}  // namespace qpc

#endif
