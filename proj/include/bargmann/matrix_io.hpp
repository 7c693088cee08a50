#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>

#include "bargmann/fock.hpp"

namespace bargmann {

/// Metadata written next to a matrix dump.
struct MatrixHeader {
  std::size_t n = 1;
  int N = 0;
  double t = 1.0;
  std::string symbol;
  std::string mode;  // "formal" or "sampled"
};

/// JSON header {n, N, t, symbol, mode}.
std::string matrix_header_json(const MatrixHeader& header);
MatrixHeader parse_matrix_header(const std::string& json_text);

/// CSV with columns row,col,re,im; one line per entry, 17 significant digits.
void write_matrix_csv(std::ostream& os, const OperatorMatrix& A);

/// Reads a CSV written by write_matrix_csv back onto the basis (n, N, t) of the header.
/// Throws std::runtime_error on malformed lines or indices outside the basis.
OperatorMatrix read_matrix_csv(std::istream& is, const MatrixHeader& header);

}  // namespace bargmann
