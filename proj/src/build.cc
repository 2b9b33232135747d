#include "qpc/build.h"

#include <stdexcept>

namespace qpc {

namespace {

bool is_diagonal_position(size_t l, size_t D) {
  // l is 1-based; diagonal positions are (i-1)D + i for i = 1..D.
  return (l - 1) % (D + 1) == 0;
}

BitMatrix row_of(std::initializer_list<int> bits) {
  BitMatrix m(1, bits.size());
  size_t c = 0;
  for (int b : bits) m.set(0, c++, b != 0);
  return m;
}

size_t ipow(size_t base, size_t exp) {
  size_t out = 1;
  for (size_t i = 0; i < exp; i++) out *= base;
  return out;
}

}  // namespace

BitMatrix all_ones(size_t rows, size_t cols) {
  BitMatrix m(rows, cols);
  for (size_t r = 0; r < rows; r++) {
    for (size_t c = 0; c < cols; c++) m.set(r, c);
  }
  return m;
}

BitMatrix difference_matrix(size_t D) {
  if (D < 2) throw std::invalid_argument("difference_matrix: D must be at least 2");
  BitMatrix m(D - 1, D);
  for (size_t i = 0; i + 1 < D; i++) {
    m.set(i, i);
    m.set(i, i + 1);
  }
  return m;
}

ComponentCss bell_pair_component() { return spc_component(2); }

ComponentCss spc_component(size_t length) { return {all_ones(1, length), all_ones(1, length)}; }

ComponentCss shor_component(size_t D) {
  BitMatrix hd = difference_matrix(D);
  return {kron(hd, all_ones(1, D)), kron(BitMatrix::identity(D), hd)};
}

BitMatrix classical_product_pcm(const BitMatrix& h1, const BitMatrix& h2) {
  return stack({kron(h1, BitMatrix::identity(h2.cols())), kron(BitMatrix::identity(h1.cols()), h2)});
}

BitMatrix tensor_product_pcm(const BitMatrix& h1, const BitMatrix& h2) { return kron(h1, h2); }

CssCode asymmetric_product(const ComponentCss& c1, const ComponentCss& c2) {
  c1.validate();
  c2.validate();
  return CssCode(classical_product_pcm(c1.hx, c2.hx), tensor_product_pcm(c1.hz, c2.hz));
}

CssCode symmetric_product(const ComponentCss& c1, const ComponentCss& c2, const ComponentCss& c3,
                          const ComponentCss& c4) {
  for (const auto* c : {&c1, &c2, &c3, &c4}) c->validate();
  auto id = [](const ComponentCss& c) { return BitMatrix::identity(c.n()); };
  BitMatrix hx = stack({
      kron(kron(kron(c1.hx, c2.hx), id(c3)), id(c4)),
      kron(kron(kron(id(c1), id(c2)), c3.hx), c4.hx),
  });
  BitMatrix hz = stack({
      kron(kron(kron(c1.hz, id(c2)), c3.hz), id(c4)),
      kron(kron(kron(id(c1), c2.hz), id(c3)), c4.hz),
  });
  return CssCode(std::move(hx), std::move(hz));
}

CssCode dfold_product(std::span<const ComponentCss> components, size_t folds) {
  if (folds < 2) throw std::invalid_argument("dfold_product: D must be at least 2");
  if (components.size() != folds * folds) {
    throw std::invalid_argument("dfold_product: expected " + std::to_string(folds * folds) +
                                " components, got " + std::to_string(components.size()));
  }
  for (const auto& c : components) c.validate();
  const size_t D = folds;
  std::vector<BitMatrix> x_blocks, z_blocks;
  for (size_t j = 0; j < D; j++) {
    std::vector<BitMatrix> fx, fz;
    for (size_t l = 1; l <= D * D; l++) {
      const ComponentCss& c = components[l - 1];
      bool x_here = j * D + 1 <= l && l <= (j + 1) * D;
      bool z_here = (l - 1) % D == j;
      fx.push_back(x_here ? c.hx : BitMatrix::identity(c.n()));
      fz.push_back(z_here ? c.hz : BitMatrix::identity(c.n()));
    }
    x_blocks.push_back(kron_all(fx));
    z_blocks.push_back(kron_all(fz));
  }
  return CssCode(stack(x_blocks), stack(z_blocks));
}

size_t SpcParams::block() const { return s * ipow(2, D); }

void validate(const SpcParams& p) {
  if (p.D < 2) throw std::invalid_argument("SPC(D,s) requires D >= 2 (got D=" + std::to_string(p.D) + ")");
  if (p.s < 1) throw std::invalid_argument("SPC(D,s) requires s >= 1");
}

std::vector<ComponentCss> spc_components(const SpcParams& p) {
  validate(p);
  std::vector<ComponentCss> out;
  for (size_t l = 1; l <= p.D * p.D; l++) {
    out.push_back(is_diagonal_position(l, p.D) ? spc_component(2 * p.s) : bell_pair_component());
  }
  return out;
}

CssCode spc(const SpcParams& p) { return dfold_product(spc_components(p), p.D); }

PredictedStats predict_spc_stats(const SpcParams& p) {
  validate(p);
  const size_t b = p.block();
  PredictedStats out;
  out.n = ipow(b, p.D);
  out.m = p.D * ipow(b, p.D - 1);
  out.meta = out.m + ipow(b - 1, p.D) - out.n;
  out.k = 2 * ipow(b - 1, p.D) - out.n;
  out.row_weight = b;
  out.col_weight = p.D;
  out.pure_distance = ipow(2, p.D);
  out.distance = ipow(2, p.D);
  return out;
}

SpcWitnesses spc_logical_witnesses(const SpcParams& p) {
  validate(p);
  BitMatrix u(1, 2 * p.s), e1_long(1, 2 * p.s);
  u.set(0, 0);
  u.set(0, 1);
  e1_long.set(0, 0);
  const BitMatrix e1 = row_of({1, 0});
  const BitMatrix u_short = row_of({1, 1});
  std::vector<BitMatrix> a, b;
  for (size_t l = 1; l <= p.D * p.D; l++) {
    bool diag = is_diagonal_position(l, p.D);
    a.push_back(diag ? u : e1);
    b.push_back(diag ? e1_long : u_short);
  }
  return {kron_all(a).row(0), kron_all(b).row(0)};
}

}  // namespace qpc
