#ifndef QPC_MATRIX_IO_H
#define QPC_MATRIX_IO_H

#include <filesystem>
#include <iosfwd>

#include "qpc/bitlin.h"

namespace qpc {

/// MacKay alist format. Zero padding in the index lists is accepted on read and
/// never written.
void write_alist(std::ostream& out, const BitMatrix& m);
BitMatrix read_alist(std::istream& in);

/// "rows cols" header followed by one 0/1 string per row.
void write_dense(std::ostream& out, const BitMatrix& m);
BitMatrix read_dense(std::istream& in);

void save_alist(const std::filesystem::path& path, const BitMatrix& m);
BitMatrix load_alist(const std::filesystem::path& path);

}  // namespace qpc

#endif
