#include "qpc/css.h"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace qpc {

char pauli_char(Pauli p) {
  static constexpr std::array<char, 4> kChars{'I', 'X', 'Y', 'Z'};
  return kChars[static_cast<size_t>(p)];
}

PauliVector::PauliVector(BitVector vx, BitVector vz) : vx_(std::move(vx)), vz_(std::move(vz)) {
  if (vx_.size() != vz_.size()) throw std::invalid_argument("PauliVector: x and z parts differ in length");
}

PauliVector PauliVector::from_string(std::string_view symbols) {
  PauliVector p(symbols.size());
  for (size_t j = 0; j < symbols.size(); j++) {
    switch (symbols[j]) {
      case 'I':
      case '_':
        break;
      case 'X':
        p.set(j, Pauli::X);
        break;
      case 'Y':
        p.set(j, Pauli::Y);
        break;
      case 'Z':
        p.set(j, Pauli::Z);
        break;
      default:
        throw std::invalid_argument("PauliVector::from_string: bad symbol");
    }
  }
  return p;
}

PauliVector& PauliVector::operator*=(const PauliVector& other) {
  vx_ ^= other.vx_;
  vz_ ^= other.vz_;
  return *this;
}

std::string PauliVector::to_string() const {
  std::string s(size(), 'I');
  for (size_t j = 0; j < size(); j++) s[j] = pauli_char(get(j));
  return s;
}

CssCode::CssCode(BitMatrix hx, BitMatrix hz) : hx_(std::move(hx)), hz_(std::move(hz)) {
  if (hx_.cols() != hz_.cols()) {
    throw std::invalid_argument("CssCode: hx has " + std::to_string(hx_.cols()) + " columns but hz has " +
                                std::to_string(hz_.cols()));
  }
  for (size_t i = 0; i < hx_.rows(); i++) {
    auto a = hx_.row_words(i);
    for (size_t j = 0; j < hz_.rows(); j++) {
      auto b = hz_.row_words(j);
      uint64_t acc = 0;
      for (size_t w = 0; w < a.size(); w++) acc ^= a[w] & b[w];
      if (std::popcount(acc) & 1) {
        throw std::invalid_argument("CssCode: X row " + std::to_string(i) + " anticommutes with Z row " +
                                    std::to_string(j));
      }
    }
  }
  x_space_ = RowSpace(hx_);
  z_space_ = RowSpace(hz_);
  rank_x_ = x_space_.dimension();
  rank_z_ = z_space_.dimension();
}

CodeStats stats(const CssCode& code) {
  CodeStats s;
  s.n = code.n();
  s.k = code.k();
  s.mx = code.hx().rows();
  s.mz = code.hz().rows();
  s.meta_x = s.mx - code.rank_x();
  s.meta_z = s.mz - code.rank_z();
  s.row_weight_x = code.hx().max_row_weight();
  s.row_weight_z = code.hz().max_row_weight();
  s.col_weight_x = code.hx().max_column_weight();
  s.col_weight_z = code.hz().max_column_weight();
  return s;
}

std::string format_stats(const CodeStats& s) {
  std::ostringstream out;
  out << "[[" << s.n << "," << s.k << "]]\n";
  out << "X checks: " << s.mx << " (meta-checks " << s.meta_x << "), max row weight " << s.row_weight_x
      << ", max column weight " << s.col_weight_x << "\n";
  out << "Z checks: " << s.mz << " (meta-checks " << s.meta_z << "), max row weight " << s.row_weight_z
      << ", max column weight " << s.col_weight_z << "\n";
  return out.str();
}

Syndrome syndromes(const CssCode& code, const PauliVector& e) {
  if (e.size() != code.n()) throw std::invalid_argument("syndromes: error length does not match code length");
  return {code.hx().multiply(e.vz()), code.hz().multiply(e.vx())};
}

bool is_logical_failure(const CssCode& code, const PauliVector& residual) {
  if (!syndromes(code, residual).is_zero()) {
    throw std::logic_error("is_logical_failure: residual has a nonzero syndrome");
  }
  return !code.x_stabilizers().contains(residual.vx()) || !code.z_stabilizers().contains(residual.vz());
}

}  // namespace qpc
