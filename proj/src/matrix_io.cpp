#include "opineq/matrix_io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace opineq {

namespace {

bool next_content_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    const auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    if (line[pos] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

ComplexMatrix read_matrix(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!next_content_line(in, line, lineno)) throw ParseError(lineno + 1, "missing 'rows cols' header");
  long rows = 0, cols = 0;
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> rows >> cols) || (hs >> extra)) throw ParseError(lineno, "expected 'rows cols'");
    if (rows < 1 || cols < 1) throw ParseError(lineno, "dimensions must be positive");
  }
  ComplexMatrix a(rows, cols);
  for (long k = 0; k < rows * cols; ++k) {
    if (!next_content_line(in, line, lineno)) throw ParseError(lineno + 1, "too few entries");
    std::istringstream es(line);
    double re = 0.0, im = 0.0;
    std::string extra;
    if (!(es >> re >> im) || (es >> extra)) throw ParseError(lineno, "expected 're im'");
    if (!std::isfinite(re) || !std::isfinite(im)) throw ParseError(lineno, "non-finite entry");
    a(k / cols, k % cols) = Complex(re, im);
  }
  if (next_content_line(in, line, lineno)) throw ParseError(lineno, "trailing data after matrix");
  return a;
}

ComplexMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorKind::IoError, "cannot open " + path);
  return read_matrix(in);
}

ComplexMatrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  return read_matrix(in);
}

void write_matrix(std::ostream& out, const ComplexMatrix& a) {
  const auto old = out.precision(std::numeric_limits<double>::max_digits10);
  out << a.rows() << ' ' << a.cols() << '\n';
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out << a(i, j).real() << ' ' << a(i, j).imag() << '\n';
    }
  }
  out.precision(old);
}

std::string format_matrix(const ComplexMatrix& a) {
  std::ostringstream os;
  write_matrix(os, a);
  return os.str();
}

}  // namespace opineq
