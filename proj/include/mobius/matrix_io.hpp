#pragma once

#include <iosfwd>
#include <string>

#include "mobius/types.hpp"

namespace mobius {

/// Plain-text matrix format: first line the dimension, then dim rows of dim
/// whitespace-separated "re:im" entries. Throws MatrixParseError (with a
/// 1-based line number) on malformed input.
ComplexMatrix read_matrix(std::istream& in);
ComplexMatrix read_matrix_file(const std::string& path);

void write_matrix(std::ostream& out, const ComplexMatrix& m);

}  // namespace mobius
