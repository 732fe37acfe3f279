#pragma once

#include <iosfwd>
#include <string>

#include "opineq/linalg.hpp"

namespace opineq {

// Text format: "rows cols" on the first line, then rows*cols lines "re im" in
// row-major order.
ComplexMatrix read_matrix(std::istream& in);
ComplexMatrix read_matrix_file(const std::string& path);
ComplexMatrix parse_matrix(const std::string& text);

void write_matrix(std::ostream& out, const ComplexMatrix& a);
std::string format_matrix(const ComplexMatrix& a);

}  // namespace opineq
