#include "bargmann/matrix_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "bargmann/json_writer.hpp"

namespace bargmann {

std::string matrix_header_json(const MatrixHeader& header) {
  nlohmann::json j;
  j["n"] = header.n;
  j["N"] = header.N;
  j["t"] = header.t;
  j["symbol"] = header.symbol;
  j["mode"] = header.mode;
  return dump_json(j);
}

MatrixHeader parse_matrix_header(const std::string& json_text) {
  const nlohmann::json j = nlohmann::json::parse(json_text);
  MatrixHeader h;
  h.n = j.at("n").get<std::size_t>();
  h.N = j.at("N").get<int>();
  h.t = j.at("t").get<double>();
  h.symbol = j.at("symbol").get<std::string>();
  h.mode = j.at("mode").get<std::string>();
  return h;
}

void write_matrix_csv(std::ostream& os, const OperatorMatrix& A) {
  os << "row,col,re,im\n";
  for (std::size_t r = 0; r < A.size(); ++r) {
    for (std::size_t c = 0; c < A.size(); ++c) {
      const auto v = A(r, c);
      os << r << ',' << c << ',' << format_double(v.real()) << ',' << format_double(v.imag()) << '\n';
    }
  }
}

OperatorMatrix read_matrix_csv(std::istream& is, const MatrixHeader& header) {
  TruncatedBasis basis(header.n, header.N, header.t);
  OperatorMatrix A = OperatorMatrix::zero(basis);
  Eigen::MatrixXcd entries = A.entries();
  std::string line;
  if (!std::getline(is, line) || line != "row,col,re,im") {
    throw std::runtime_error("read_matrix_csv: missing header line");
  }
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string r, c, re, im;
    if (!std::getline(fields, r, ',') || !std::getline(fields, c, ',') || !std::getline(fields, re, ',') ||
        !std::getline(fields, im)) {
      throw std::runtime_error("read_matrix_csv: malformed line " + std::to_string(lineno));
    }
    const std::size_t row = std::stoul(r), col = std::stoul(c);
    if (row >= basis.size() || col >= basis.size()) {
      throw std::runtime_error("read_matrix_csv: index outside the basis on line " + std::to_string(lineno));
    }
    entries(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = {std::stod(re), std::stod(im)};
  }
  return OperatorMatrix(basis, std::move(entries));
}

}  // namespace bargmann
