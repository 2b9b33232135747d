#include "qpc/matrix_io.h"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qpc {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw std::runtime_error("alist: " + what); }

std::string next_line(std::istream& in, const char* context) {
  std::string line;
  if (!std::getline(in, line)) parse_error(std::string("unexpected end of input while reading ") + context);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

std::vector<size_t> parse_numbers(const std::string& line) {
  std::vector<size_t> out;
  std::istringstream ss(line);
  long long x;
  while (ss >> x) {
    if (x < 0) parse_error("negative entry");
    out.push_back(static_cast<size_t>(x));
  }
  if (!ss.eof()) parse_error("non-numeric token in line '" + line + "'");
  return out;
}

void write_list(std::ostream& out, const std::vector<size_t>& values) {
  for (size_t i = 0; i < values.size(); i++) {
    if (i) out << ' ';
    out << values[i];
  }
  out << '\n';
}

}  // namespace

void write_alist(std::ostream& out, const BitMatrix& m) {
  auto col_w = m.column_weights();
  auto row_w = m.row_weights();
  out << m.cols() << ' ' << m.rows() << '\n';
  out << m.max_column_weight() << ' ' << m.max_row_weight() << '\n';
  write_list(out, col_w);
  write_list(out, row_w);
  BitMatrix t = m.transpose();
  for (size_t c = 0; c < m.cols(); c++) {
    std::vector<size_t> idx;
    for (size_t r : t.row(c).support()) idx.push_back(r + 1);
    write_list(out, idx);
  }
  for (size_t r = 0; r < m.rows(); r++) {
    std::vector<size_t> idx;
    for (size_t c : m.row(r).support()) idx.push_back(c + 1);
    write_list(out, idx);
  }
}

BitMatrix read_alist(std::istream& in) {
  auto dims = parse_numbers(next_line(in, "dimensions"));
  if (dims.size() != 2) parse_error("first line must be 'n m'");
  size_t n = dims[0], m = dims[1];
  auto maxes = parse_numbers(next_line(in, "max weights"));
  if (maxes.size() != 2) parse_error("second line must hold two max weights");
  auto col_w = parse_numbers(next_line(in, "column weights"));
  auto row_w = parse_numbers(next_line(in, "row weights"));
  if (col_w.size() != n || row_w.size() != m) parse_error("weight list length mismatch");

  BitMatrix out(m, n);
  for (size_t c = 0; c < n; c++) {
    size_t count = 0;
    for (size_t idx : parse_numbers(next_line(in, "column lists"))) {
      if (idx == 0) continue;
      if (idx > m) parse_error("row index out of range");
      out.set(idx - 1, c);
      count++;
    }
    if (count != col_w[c]) parse_error("column " + std::to_string(c) + " weight mismatch");
  }
  for (size_t r = 0; r < m; r++) {
    std::vector<size_t> cols;
    for (size_t idx : parse_numbers(next_line(in, "row lists"))) {
      if (idx == 0) continue;
      if (idx > n) parse_error("column index out of range");
      cols.push_back(idx - 1);
    }
    if (cols.size() != row_w[r]) parse_error("row " + std::to_string(r) + " weight mismatch");
    for (size_t c : cols) {
      if (!out.get(r, c)) parse_error("row and column lists disagree");
    }
  }
  return out;
}

void write_dense(std::ostream& out, const BitMatrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  out << m.to_string();
}

BitMatrix read_dense(std::istream& in) {
  size_t rows = 0, cols = 0;
  if (!(in >> rows >> cols)) throw std::runtime_error("dense: missing 'rows cols' header");
  std::string rest;
  std::getline(in, rest);
  BitMatrix m(rows, cols);
  for (size_t r = 0; r < rows; r++) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("dense: missing row " + std::to_string(r));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.size() != cols) throw std::runtime_error("dense: row " + std::to_string(r) + " has wrong length");
    for (size_t c = 0; c < cols; c++) {
      if (line[c] == '1') {
        m.set(r, c);
      } else if (line[c] != '0') {
        throw std::runtime_error("dense: unexpected character in row " + std::to_string(r));
      }
    }
  }
  return m;
}

void save_alist(const std::filesystem::path& path, const BitMatrix& m) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_alist(f, m);
}

BitMatrix load_alist(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path.string());
  return read_alist(f);
}

}  // namespace qpc
