#include "qpc/zoo.h"

#include <algorithm>
#include <cctype>
#include <random>
#include <stdexcept>
#include <string>

#include "qpc/build.h"
#include "qpc/distance.h"

namespace qpc {

// ---------------------------------------------------------------------------
// Group G of order 20

CayleyElement CayleyElement::from_index(size_t index) {
  if (index >= kOrder) throw std::out_of_range("CayleyElement::from_index");
  return {static_cast<uint8_t>(index / 5), static_cast<uint8_t>(index % 5)};
}

CayleyElement operator*(CayleyElement x, CayleyElement y) {
  // t^b s^c = s^c t^(b 2^c), from ts = st^2.
  unsigned twist = 1u << y.a;
  return {static_cast<uint8_t>((x.a + y.a) % 4), static_cast<uint8_t>((x.b * twist + y.b) % 5)};
}

CayleyElement CayleyElement::pow(unsigned k) const {
  CayleyElement out;
  for (unsigned i = 0; i < k; i++) out = out * *this;
  return out;
}

CayleyElement CayleyElement::inverse() const {
  for (size_t i = 0; i < kOrder; i++) {
    CayleyElement c = from_index(i);
    if (*this * c == identity()) return c;
  }
  throw std::logic_error("CayleyElement::inverse: no inverse found");
}

CayleyElement CayleyElement::parse(std::string_view word) {
  CayleyElement out;
  size_t i = 0;
  auto skip_space = [&] {
    while (i < word.size() && std::isspace(static_cast<unsigned char>(word[i]))) i++;
  };
  skip_space();
  if (word.substr(i) == "1") return out;
  while (i < word.size()) {
    char g = word[i++];
    CayleyElement gen;
    if (g == 's') {
      gen = s();
    } else if (g == 't') {
      gen = t();
    } else {
      throw std::invalid_argument("CayleyElement::parse: unexpected '" + std::string(1, g) + "'");
    }
    unsigned exp = 1;
    if (i < word.size() && word[i] == '^') {
      i++;
      size_t start = i;
      while (i < word.size() && std::isdigit(static_cast<unsigned char>(word[i]))) i++;
      if (start == i) throw std::invalid_argument("CayleyElement::parse: missing exponent");
      exp = static_cast<unsigned>(std::stoul(std::string(word.substr(start, i - start))));
    }
    out = out * gen.pow(exp);
    skip_space();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Quantum Tanner code

TannerSpec default_tanner_spec() {
  TannerSpec spec;
  for (auto w : {"1", "s", "s^3", "t^2 s^2", "t^3 s^2"}) spec.A.push_back(CayleyElement::parse(w));
  for (auto w : {"1", "t s^3", "t^2 s", "t^2 s^2", "t^4 s^2"}) spec.B.push_back(CayleyElement::parse(w));
  spec.h_a = all_ones(1, 5);
  spec.h_b_perp = all_ones(1, 5);
  spec.h_a_perp = difference_matrix(5);
  spec.h_b = difference_matrix(5);
  return spec;
}

void validate(const TannerSpec& spec) {
  auto closed = [](const std::vector<CayleyElement>& set) {
    return std::all_of(set.begin(), set.end(), [&](CayleyElement x) {
      return std::find(set.begin(), set.end(), x.inverse()) != set.end();
    });
  };
  if (!closed(spec.A)) throw std::invalid_argument("TannerSpec: A is not closed under inversion");
  if (!closed(spec.B)) throw std::invalid_argument("TannerSpec: B is not closed under inversion");
  if (!spec.h_a.multiply(spec.h_a_perp.transpose()).is_zero()) {
    throw std::invalid_argument("TannerSpec: h_a and h_a_perp are not orthogonal");
  }
  if (!spec.h_b.multiply(spec.h_b_perp.transpose()).is_zero()) {
    throw std::invalid_argument("TannerSpec: h_b and h_b_perp are not orthogonal");
  }
  if (spec.h_a.cols() != spec.A.size() || spec.h_a_perp.cols() != spec.A.size() ||
      spec.h_b.cols() != spec.B.size() || spec.h_b_perp.cols() != spec.B.size()) {
    throw std::invalid_argument("TannerSpec: local code lengths must match |A| and |B|");
  }
}

CssCode quantum_tanner(const TannerSpec& spec) {
  validate(spec);
  const size_t na = spec.A.size(), nb = spec.B.size();
  const size_t n = CayleyElement::kOrder * na * nb;
  auto qubit = [&](CayleyElement g, size_t ia, size_t ib) { return g.index() * na * nb + ia * nb + ib; };

  const BitMatrix local_x = kron(spec.h_a, spec.h_b);
  const BitMatrix local_z = kron(spec.h_a_perp, spec.h_b_perp);

  // Square (g, a, b) touches (g,0,0), (ag,0,1), (agb,1,1), (gb,1,0). For a
  // vertex of the given class, returns the g of the incident square (a, b).
  auto square_base = [&](CayleyElement v, int cls, CayleyElement a, CayleyElement b) {
    switch (cls) {
      case 0:  // (v,0,0)
        return v;
      case 1:  // (v,0,1): ag = v
        return a.inverse() * v;
      case 2:  // (v,1,1): agb = v
        return a.inverse() * v * b.inverse();
      default:  // (v,1,0): gb = v
        return v * b.inverse();
    }
  };

  auto emit = [&](const BitMatrix& local, std::initializer_list<int> classes) {
    std::vector<BitVector> rows;
    for (int cls : classes) {
      for (size_t gi = 0; gi < CayleyElement::kOrder; gi++) {
        CayleyElement v = CayleyElement::from_index(gi);
        for (size_t r = 0; r < local.rows(); r++) {
          BitVector row(n);
          for (size_t ia = 0; ia < na; ia++) {
            for (size_t ib = 0; ib < nb; ib++) {
              if (!local.get(r, ia * nb + ib)) continue;
              CayleyElement g = square_base(v, cls, spec.A[ia], spec.B[ib]);
              row.flip(qubit(g, ia, ib));
            }
          }
          rows.push_back(std::move(row));
        }
      }
    }
    return BitMatrix::from_rows(rows, n);
  };

  BitMatrix hx = emit(local_x, {0, 2});
  BitMatrix hz = emit(local_z, {1, 3});
  return CssCode(std::move(hx), std::move(hz));
}

// ---------------------------------------------------------------------------
// Bicycle code

CssCode bicycle(const BicycleSpec& spec) {
  if (spec.n % 2 != 0) throw std::invalid_argument("bicycle: n must be even");
  const size_t half = spec.n / 2;
  if (spec.row_weight >= half) throw std::invalid_argument("bicycle: need n/2 > row_weight");
  if (spec.row_weight % 2 != 0) throw std::invalid_argument("bicycle: row_weight must be even");
  if (spec.k % 2 != 0 || spec.k / 2 > half) throw std::invalid_argument("bicycle: k must be even and at most n/2");
  const size_t target_rows = half - spec.k / 2;

  std::mt19937_64 rng(spec.seed);
  constexpr size_t kMaxDraws = 10000;
  for (size_t draw = 0; draw < kMaxDraws; draw++) {
    // The circulant's first row; row i is its cyclic shift by i. Together C and
    // C^T contribute row_weight ones per row of H0, split evenly.
    const size_t per_half = spec.row_weight / 2;
    std::vector<size_t> positions(half);
    for (size_t i = 0; i < half; i++) positions[i] = i;
    std::shuffle(positions.begin(), positions.end(), rng);
    positions.resize(per_half);

    BitMatrix h0(half, spec.n);
    for (size_t i = 0; i < half; i++) {
      for (size_t p : positions) {
        h0.set(i, (i + p) % half);                // C[i][j] = c[(j - i) mod half]
        h0.set(i, half + (i + half - p) % half);  // C^T[i][j] = c[(i - j) mod half]
      }
    }

    std::vector<bool> alive(half, true);
    std::vector<long> col_weight(spec.n, 0);
    for (size_t c = 0; c < spec.n; c++) {
      for (size_t r = 0; r < half; r++) col_weight[c] += h0.get(r, c);
    }
    std::vector<std::vector<size_t>> supports(half);
    for (size_t r = 0; r < half; r++) supports[r] = h0.row(r).support();

    // Every candidate removes the same number of ones, so the mean column
    // weight afterwards is fixed and minimizing the variance means minimizing
    // the sum of squares, i.e. maximizing the current weight sum on the row.
    for (size_t removed = 0; removed < spec.k / 2; removed++) {
      long best_score = -1;
      size_t best_row = half;
      for (size_t r = 0; r < half; r++) {
        if (!alive[r]) continue;
        long score = 0;
        for (size_t c : supports[r]) score += col_weight[c];
        if (score > best_score) {
          best_score = score;
          best_row = r;
        }
      }
      alive[best_row] = false;
      for (size_t c : supports[best_row]) col_weight[c]--;
    }

    std::vector<BitVector> kept;
    for (size_t r = 0; r < half; r++) {
      if (alive[r]) kept.push_back(h0.row(r));
    }
    BitMatrix h1 = BitMatrix::from_rows(kept, spec.n);
    if (rank(h1) == target_rows) return CssCode(h1, h1);
  }
  throw std::runtime_error("bicycle: no full-rank pruned matrix after " + std::to_string(kMaxDraws) + " draws");
}

// ---------------------------------------------------------------------------
// Hypergraph product

CssCode hypergraph_product(const BitMatrix& h) {
  if (rank(h) != h.rows()) {
    throw std::invalid_argument("hypergraph_product: seed matrix must have full row rank");
  }
  const size_t m = h.rows(), n = h.cols();
  const BitMatrix ht = h.transpose();
  BitMatrix hx = hstack({kron(h, BitMatrix::identity(n)), kron(BitMatrix::identity(m), ht)});
  BitMatrix hz = hstack({kron(BitMatrix::identity(n), h), kron(ht, BitMatrix::identity(m))});
  return CssCode(std::move(hx), std::move(hz));
}

BitMatrix hpc_seed_matrix() {
  // Output of find_hpc_seed(kHpcSeedSearchSeed), frozen so the code does not
  // depend on the search staying bit-identical.
  return BitMatrix::from_strings({
      "100000010000101000101",
      "010101100101001001010",
      "100000110100101000010",
      "010010000010110001000",
      "011001100110010000001",
      "000000110011000101001",
      "100010001111000010100",
      "000011001001011001000",
  });
}

BitMatrix find_hpc_seed(uint64_t seed, size_t max_attempts) {
  constexpr size_t kRows = 8, kCols = 21, kMaxColWeight = 4;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<size_t> weight_dist(1, kMaxColWeight);
  std::vector<size_t> rows(kRows);
  for (size_t i = 0; i < kRows; i++) rows[i] = i;
  for (size_t attempt = 0; attempt < max_attempts; attempt++) {
    BitMatrix h(kRows, kCols);
    for (size_t c = 0; c < kCols; c++) {
      std::shuffle(rows.begin(), rows.end(), rng);
      size_t w = weight_dist(rng);
      for (size_t i = 0; i < w; i++) h.set(rows[i], c);
    }
    if (rank(h) != kRows) continue;
    bool low_weight = false;
    for (size_t w = 1; w <= 3 && !low_weight; w++) {
      for_each_kernel_vector(h, w, [&](std::span<const uint32_t>) {
        low_weight = true;
        return false;
      });
    }
    if (low_weight) continue;
    bool has_four = false;
    for_each_kernel_vector(h, 4, [&](std::span<const uint32_t>) {
      has_four = true;
      return false;
    });
    if (has_four) return h;
  }
  throw std::runtime_error("find_hpc_seed: no [21,13,4] matrix found in " + std::to_string(max_attempts) +
                           " attempts");
}

// ---------------------------------------------------------------------------
// Random dense CSS code

CssCode random_css(size_t n, size_t r, uint64_t seed) {
  if (2 * r > n) throw std::invalid_argument("random_css: need 2r <= n");
  std::mt19937_64 rng(seed);
  while (true) {
    BitMatrix a(n, n);
    for (size_t i = 0; i < n; i++) {
      auto words = a.row_words(i);
      for (size_t w = 0; w < words.size(); w++) words[w] = rng();
      if (n % 64 != 0) words.back() &= (uint64_t{1} << (n % 64)) - 1;
    }
    RowReduction red = row_reduce(a);
    if (red.rank != n) continue;
    // transform * A = I, so transform = A^-1.
    BitMatrix inv_t = red.transform.transpose();
    return CssCode(a.select_rows(0, r), inv_t.select_rows(r, 2 * r));
  }
}

}  // namespace qpc
