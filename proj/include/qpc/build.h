#ifndef QPC_BUILD_H
#define QPC_BUILD_H

#include <span>
#include <vector>

#include "qpc/css.h"

namespace qpc {

/// A component CSS code used as a factor in product constructions. Unlike
/// CssCode it is a plain pair; products validate their own output.
struct ComponentCss {
  BitMatrix hx;
  BitMatrix hz;
  size_t n() const { return hx.cols(); }
  CssCode validate() const { return CssCode(hx, hz); }
};

/// The 2-qubit code with stabilizers XX and ZZ.
ComponentCss bell_pair_component();
/// Single-parity-check component: hx = hz = (1 ... 1) of the given length.
ComponentCss spc_component(size_t length);

/// (H1 (x) I_{n2}) stacked over (I_{n1} (x) H2).
BitMatrix classical_product_pcm(const BitMatrix& h1, const BitMatrix& h2);
/// H1 (x) H2.
BitMatrix tensor_product_pcm(const BitMatrix& h1, const BitMatrix& h2);

/// X checks from the classical product of the X components, Z checks from the
/// tensor product of the Z components.
CssCode asymmetric_product(const ComponentCss& c1, const ComponentCss& c2);

/// Four-component symmetric product; both PCMs are classical products of
/// tensor-product codes.
CssCode symmetric_product(const ComponentCss& c1, const ComponentCss& c2, const ComponentCss& c3,
                          const ComponentCss& c4);

/// D-fold symmetric product over D*D components (component l is index l-1).
/// X stack block j uses the X factors of components jD+1..(j+1)D; Z stack
/// block j uses the Z factors of components l with (l-1) = j mod D.
CssCode dfold_product(std::span<const ComponentCss> components, size_t folds);

struct SpcParams {
  size_t D = 3;
  size_t s = 1;
  size_t block() const;  ///< s * 2^D
};

/// Throws std::invalid_argument unless D >= 2 and s >= 1.
void validate(const SpcParams& p);

/// The D*D component list of SPC(D,s): length-2s all-ones rows on the
/// diagonal positions l = (i-1)D + i, (1 1) elsewhere.
std::vector<ComponentCss> spc_components(const SpcParams& p);
CssCode spc(const SpcParams& p);

struct PredictedStats {
  size_t n = 0;
  size_t k = 0;
  size_t m = 0;     ///< rows per PCM (X and Z alike)
  size_t meta = 0;  ///< meta-checks per PCM
  size_t row_weight = 0;
  size_t col_weight = 0;
  size_t pure_distance = 0;
  size_t distance = 0;
};

/// Closed-form SPC(D,s) parameters.
PredictedStats predict_spc_stats(const SpcParams& p);

struct SpcWitnesses {
  BitVector w;  ///< weight 2^D, undetected by both PCMs, not a stabilizer
  BitVector v;  ///< in both kernels, with w . v = 1
};

SpcWitnesses spc_logical_witnesses(const SpcParams& p);

/// Generalized Shor code: hx = H_D (x) 1_D^T, hz = I_D (x) H_D, where H_D is
/// the (D-1) x D difference matrix. D = 3 is the 9-qubit Shor code.
ComponentCss shor_component(size_t D);
/// (D-1) x D matrix with ones at (i, i) and (i, i+1).
BitMatrix difference_matrix(size_t D);
BitMatrix all_ones(size_t rows, size_t cols);

}  // namespace qpc

#endif
