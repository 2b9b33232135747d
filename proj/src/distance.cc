#include "qpc/distance.h"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace qpc {

namespace {

uint64_t binomial(uint64_t n, uint64_t k) {
  if (k > n) return 0;
  uint64_t out = 1;
  for (uint64_t i = 1; i <= k; i++) {
    // Saturate instead of overflowing; callers only compare against a budget.
    if (out > UINT64_MAX / (n - k + i)) return UINT64_MAX;
    out = out * (n - k + i) / i;
  }
  return out;
}

// Advances `c` to the next k-subset of [0, n) in lexicographic order.
bool next_combination(std::vector<uint32_t>& c, uint32_t n) {
  size_t k = c.size();
  for (size_t i = k; i-- > 0;) {
    if (c[i] < n - (k - i)) {
      c[i]++;
      for (size_t j = i + 1; j < k; j++) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

uint64_t hash_words(const uint64_t* w, size_t count) {
  uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (size_t i = 0; i < count; i++) {
    h ^= w[i] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xbf58476d1ce4e5b9ULL;
  }
  return h ^ (h >> 31);
}

// Column syndromes of h, packed as `stride` words per column.
struct ColumnTable {
  size_t stride;
  std::vector<uint64_t> words;
  const uint64_t* col(size_t j) const { return words.data() + j * stride; }
};

ColumnTable column_table(const BitMatrix& h) {
  BitMatrix t = h.transpose();
  ColumnTable table{t.stride(), {}};
  table.words.resize(t.rows() * t.stride());
  for (size_t j = 0; j < t.rows(); j++) {
    auto row = t.row_words(j);
    std::copy(row.begin(), row.end(), table.words.begin() + j * table.stride);
  }
  return table;
}

}  // namespace

bool for_each_kernel_vector(const BitMatrix& h, size_t weight,
                            const std::function<bool(std::span<const uint32_t>)>& visit) {
  const uint32_t n = static_cast<uint32_t>(h.cols());
  if (weight == 0 || weight > n) return true;
  const size_t left_size = (weight + 1) / 2;
  const size_t right_size = weight / 2;
  if (binomial(n, right_size) > kMaxHalfSupports) {
    throw std::length_error("for_each_kernel_vector: half-support table too large for weight " +
                            std::to_string(weight));
  }
  ColumnTable cols = column_table(h);
  const size_t stride = std::max<size_t>(cols.stride, 1);

  // Table of right halves: every right_size-subset with its syndrome.
  std::vector<uint32_t> right_sets;
  std::vector<uint64_t> right_syn;
  std::vector<std::pair<uint64_t, uint32_t>> index;
  {
    std::vector<uint32_t> c(right_size);
    for (size_t i = 0; i < right_size; i++) c[i] = static_cast<uint32_t>(i);
    std::vector<uint64_t> syn(stride);
    uint32_t id = 0;
    do {
      std::fill(syn.begin(), syn.end(), 0);
      for (uint32_t j : c) {
        const uint64_t* col = cols.col(j);
        for (size_t w = 0; w < cols.stride; w++) syn[w] ^= col[w];
      }
      right_sets.insert(right_sets.end(), c.begin(), c.end());
      right_syn.insert(right_syn.end(), syn.begin(), syn.end());
      index.emplace_back(hash_words(syn.data(), stride), id++);
    } while (right_size > 0 && next_combination(c, n));
    std::sort(index.begin(), index.end());
  }

  std::vector<uint32_t> left(left_size);
  for (size_t i = 0; i < left_size; i++) left[i] = static_cast<uint32_t>(i);
  std::vector<uint64_t> syn(stride);
  std::vector<uint32_t> support(weight);
  do {
    std::fill(syn.begin(), syn.end(), 0);
    for (uint32_t j : left) {
      const uint64_t* col = cols.col(j);
      for (size_t w = 0; w < cols.stride; w++) syn[w] ^= col[w];
    }
    uint64_t key = hash_words(syn.data(), stride);
    auto lo = std::lower_bound(index.begin(), index.end(), std::make_pair(key, uint32_t{0}));
    for (auto it = lo; it != index.end() && it->first == key; ++it) {
      const uint32_t* r = right_sets.data() + size_t{it->second} * right_size;
      if (right_size > 0 && r[0] <= left.back()) continue;
      if (!std::equal(syn.begin(), syn.end(), right_syn.begin() + size_t{it->second} * stride)) continue;
      std::copy(left.begin(), left.end(), support.begin());
      std::copy(r, r + right_size, support.begin() + left_size);
      if (!visit(support)) return false;
    }
  } while (next_combination(left, n));
  return true;
}

namespace {

BitVector support_vector(size_t n, std::span<const uint32_t> support) {
  BitVector v(n);
  for (uint32_t j : support) v.set(j);
  return v;
}

}  // namespace

DistanceReport search_min_logical(const CssCode& code, size_t max_weight) {
  if (max_weight == 0) throw std::invalid_argument("search_min_logical: max_weight must be at least 1");
  DistanceReport report;
  const size_t n = code.n();
  const BitMatrix both = stack({code.hx(), code.hz()});
  for (size_t w = 1; w <= std::min(max_weight, n); w++) {
    uint64_t count_x = 0, count_z = 0;
    std::optional<PauliVector> witness;
    try {
      for_each_kernel_vector(code.hz(), w, [&](std::span<const uint32_t> s) {
        BitVector v = support_vector(n, s);
        if (!code.x_stabilizers().contains(v)) {
          if (!witness) witness = PauliVector::pure_x(v);
          count_x++;
        }
        return true;
      });
      for_each_kernel_vector(code.hx(), w, [&](std::span<const uint32_t> s) {
        BitVector v = support_vector(n, s);
        if (!code.z_stabilizers().contains(v)) {
          if (!witness) witness = PauliVector::pure_z(v);
          count_z++;
        }
        return true;
      });
    } catch (const std::length_error&) {
      return report;
    }
    if (count_x + count_z > 0) {
      uint64_t count_y = 0;
      for_each_kernel_vector(both, w, [&](std::span<const uint32_t> s) {
        BitVector v = support_vector(n, s);
        if (!code.x_stabilizers().contains(v) || !code.z_stabilizers().contains(v)) count_y++;
        return true;
      });
      report.found_weight = w;
      report.multiplicity_x = count_x;
      report.multiplicity_z = count_z;
      report.multiplicity_y = count_y;
      report.witness = std::move(witness);
      report.searched_up_to = w;
      return report;
    }
    report.searched_up_to = w;
  }
  report.searched_up_to = max_weight;
  return report;
}

PureDistance pure_distance(const CssCode& code, size_t max_weight) {
  if (max_weight == 0) throw std::invalid_argument("pure_distance: max_weight must be at least 1");
  auto first_weight = [&](const BitMatrix& h) -> std::optional<size_t> {
    for (size_t w = 1; w <= std::min(max_weight, h.cols()); w++) {
      bool found = false;
      try {
        for_each_kernel_vector(h, w, [&](std::span<const uint32_t>) {
          found = true;
          return false;
        });
      } catch (const std::length_error&) {
        return std::nullopt;
      }
      if (found) return w;
    }
    return std::nullopt;
  };
  return {first_weight(code.hz()), first_weight(code.hx())};
}

}  // namespace qpc
