#ifndef QPC_CSS_H
#define QPC_CSS_H

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "qpc/bitlin.h"

namespace qpc {

/// Single-qubit Pauli symbol. The numeric order doubles as the decoder's
/// tie-break order.
enum class Pauli : uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

inline bool has_x(Pauli p) { return p == Pauli::X || p == Pauli::Y; }
inline bool has_z(Pauli p) { return p == Pauli::Y || p == Pauli::Z; }
inline Pauli pauli_from_bits(bool x, bool z) {
  if (x) return z ? Pauli::Y : Pauli::X;
  return z ? Pauli::Z : Pauli::I;
}
char pauli_char(Pauli p);

/// F4 symplectic inner product: 1 iff the two Paulis anticommute.
inline bool anticommutes(Pauli a, Pauli b) {
  return ((has_x(a) && has_z(b)) != (has_z(a) && has_x(b)));
}

/// n-qubit Pauli operator without phase, stored as its binary (x, z) parts.
class PauliVector {
 public:
  PauliVector() = default;
  explicit PauliVector(size_t n) : vx_(n), vz_(n) {}
  PauliVector(BitVector vx, BitVector vz);

  static PauliVector from_string(std::string_view symbols);  ///< "IXYZ..."
  static PauliVector pure_x(const BitVector& v) { return {v, BitVector(v.size())}; }
  static PauliVector pure_z(const BitVector& v) { return {BitVector(v.size()), v}; }
  static PauliVector pure_y(const BitVector& v) { return {v, v}; }

  size_t size() const { return vx_.size(); }
  Pauli get(size_t j) const { return pauli_from_bits(vx_.get(j), vz_.get(j)); }
  void set(size_t j, Pauli p) {
    vx_.set(j, has_x(p));
    vz_.set(j, has_z(p));
  }
  size_t weight() const { return (vx_ | vz_).weight(); }
  bool is_identity() const { return vx_.is_zero() && vz_.is_zero(); }

  const BitVector& vx() const { return vx_; }
  const BitVector& vz() const { return vz_; }
  BitVector& vx() { return vx_; }
  BitVector& vz() { return vz_; }

  /// Product up to phase.
  PauliVector& operator*=(const PauliVector& other);
  friend PauliVector operator*(PauliVector a, const PauliVector& b) { return a *= b; }
  bool operator==(const PauliVector& other) const = default;

  std::string to_string() const;

 private:
  BitVector vx_;
  BitVector vz_;
};

enum class CheckType : uint8_t { X, Z };

/// A validated CSS code. Rows of hx are X-type stabilizers (detect Z errors),
/// rows of hz are Z-type stabilizers (detect X errors).
class CssCode {
 public:
  /// Throws std::invalid_argument when the column counts differ or when some
  /// X row and Z row overlap on an odd number of qubits.
  CssCode(BitMatrix hx, BitMatrix hz);

  size_t n() const { return hx_.cols(); }
  size_t k() const { return n() - rank_x_ - rank_z_; }
  const BitMatrix& hx() const { return hx_; }
  const BitMatrix& hz() const { return hz_; }
  const BitMatrix& pcm(CheckType t) const { return t == CheckType::X ? hx_ : hz_; }
  size_t rank_x() const { return rank_x_; }
  size_t rank_z() const { return rank_z_; }

  const RowSpace& x_stabilizers() const { return x_space_; }
  const RowSpace& z_stabilizers() const { return z_space_; }

  bool operator==(const CssCode& other) const { return hx_ == other.hx_ && hz_ == other.hz_; }

 private:
  BitMatrix hx_;
  BitMatrix hz_;
  size_t rank_x_ = 0;
  size_t rank_z_ = 0;
  RowSpace x_space_;
  RowSpace z_space_;
};

struct CodeStats {
  size_t n = 0;
  size_t k = 0;
  size_t mx = 0;
  size_t mz = 0;
  size_t meta_x = 0;
  size_t meta_z = 0;
  size_t row_weight_x = 0;
  size_t row_weight_z = 0;
  size_t col_weight_x = 0;
  size_t col_weight_z = 0;

  bool operator==(const CodeStats&) const = default;
};

CodeStats stats(const CssCode& code);
std::string format_stats(const CodeStats& s);

struct Syndrome {
  BitVector sx;  ///< hx * vz
  BitVector sz;  ///< hz * vx
  bool is_zero() const { return sx.is_zero() && sz.is_zero(); }
  bool operator==(const Syndrome&) const = default;
};

Syndrome syndromes(const CssCode& code, const PauliVector& e);

/// True iff the zero-syndrome residual is not a stabilizer. Throws
/// std::logic_error when the residual has a nonzero syndrome.
bool is_logical_failure(const CssCode& code, const PauliVector& residual);

}  // namespace qpc

#endif
