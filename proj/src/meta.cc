#include "qpc/meta.h"

#include <stdexcept>
#include <string>

#include "qpc/build.h"
#include "qpc/distance.h"

namespace qpc {

void validate(const MetaCheck& meta, const BitMatrix& h) {
  if (meta.m.cols() != h.rows() || meta.parent_rows != h.rows()) {
    throw std::invalid_argument("MetaCheck: column count does not match the parent PCM rows");
  }
  if (!meta.m.multiply(h).is_zero()) throw std::invalid_argument("MetaCheck: m * H != 0");
  size_t r = rank(h);
  if (meta.parent_rank != r) throw std::invalid_argument("MetaCheck: stale parent rank");
  if (rank(meta.m) != h.rows() - r) {
    throw std::invalid_argument("MetaCheck: rows do not span the left kernel of H");
  }
}

MetaCheck metacheck_from_pcm(const BitMatrix& h) {
  RowReduction red = row_reduce(h);
  MetaCheck out;
  out.parent_rows = h.rows();
  out.parent_rank = red.rank;
  out.m = red.transform.select_rows(red.rank, h.rows());
  return out;
}

MetaCheck spc3_metacheck(size_t s, CheckType type) {
  if (s < 1) throw std::invalid_argument("spc3_metacheck: s must be at least 1");
  constexpr size_t D = 3;
  const SpcParams params{D, s};
  const std::vector<ComponentCss> comps = spc_components(params);
  std::array<size_t, D * D> len{};
  for (size_t l = 0; l < D * D; l++) len[l] = comps[l].n();

  // Components (0-based) whose checks act together in block j.
  auto in_group = [&](size_t l, size_t j) { return type == CheckType::X ? l / D == j : l % D == j; };

  const size_t side = 8 * s;
  const size_t block_rows = side * side;
  const size_t m = D * block_rows;
  BitMatrix meta(D * side, m);
  std::array<size_t, D * D> coord{};
  for (size_t j = 0; j < D; j++) {
    for (size_t r = 0; r < block_rows; r++) {
      // Decode the row index over the identity factors, last factor fastest.
      size_t rem = r;
      for (size_t l = D * D; l-- > 0;) {
        if (in_group(l, j)) continue;
        coord[l] = rem % len[l];
        rem /= len[l];
      }
      for (size_t k = 0; k < D; k++) {
        if (k == j) continue;
        size_t g = 0;
        for (size_t l = 0; l < D * D; l++) {
          if (in_group(l, k)) g = g * len[l] + coord[l];
        }
        meta.set(k * side + g, j * block_rows + r);
      }
    }
  }
  MetaCheck out;
  out.m = std::move(meta);
  out.parent_rows = m;
  out.parent_rank = rank(spc(params).pcm(type));
  return out;
}

ExtendedPcm extend_pcm(const BitMatrix& h, const MetaCheck& meta) {
  if (meta.m.cols() != h.rows()) {
    throw std::invalid_argument("extend_pcm: meta-check has " + std::to_string(meta.m.cols()) +
                                " columns but H has " + std::to_string(h.rows()) + " rows");
  }
  ExtendedPcm out;
  out.n = h.cols();
  out.m = h.rows();
  out.h_ext = stack({hstack({h, BitMatrix::identity(h.rows())}), hstack({BitMatrix(meta.rows(), h.cols()), meta.m})});
  return out;
}

ExtendedSyndrome extended_syndrome(const MetaCheck& meta, BitVector s_prime) {
  BitVector sigma = meta.m.multiply(s_prime);
  return {std::move(s_prime), std::move(sigma)};
}

MeasurementOverhead measurement_overhead(const CssCode& code) {
  MeasurementOverhead out;
  out.minimum = code.rank_x() + code.rank_z();
  out.actual = code.hx().rows() + code.hz().rows();
  out.ratio = out.minimum == 0 ? 0.0 : double(out.actual - out.minimum) / double(out.minimum);
  return out;
}

BitMatrix repeated_pcm(const BitMatrix& h, size_t k) {
  if (k < 1) throw std::invalid_argument("repeated_pcm: k must be at least 1");
  return kron(all_ones(k, 1), h);
}

MetaCheck repetition_metacheck(const BitMatrix& h, size_t k) {
  if (k < 2) throw std::invalid_argument("repetition_metacheck: k must be at least 2");
  MetaCheck out;
  out.m = kron(difference_matrix(k), BitMatrix::identity(h.rows()));
  out.parent_rows = k * h.rows();
  out.parent_rank = rank(h);
  return out;
}

size_t metacheck_distance_upto(const MetaCheck& meta, size_t max_weight) {
  for (size_t w = 1; w <= max_weight; w++) {
    bool found = false;
    for_each_kernel_vector(meta.m, w, [&](std::span<const uint32_t>) {
      found = true;
      return false;
    });
    if (found) return w;
  }
  return 0;
}

}  // namespace qpc
