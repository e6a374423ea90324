#pragma once

#include "kgc/int_matrix.hpp"

#include <iosfwd>
#include <string>

namespace kgc {

// Plain-text matrix format: a header line "rows cols", then rows*cols
// decimal entries in row-major order, whitespace separated.  Entries are
// exact decimals of any length; no width or precision is ever involved.
IntMatrix read_matrix_text(std::istream& in);
void write_matrix_text(std::ostream& out, const IntMatrix& m);

// Reads a matrix from a file holding either the text format above or a JSON
// object {"rows": r, "cols": c, "data": [[...], ...]} -- decided by the
// first non-space byte ('{' means JSON).  Throws io_error if the file cannot
// be opened, invalid_input_error if the contents don't parse.
IntMatrix read_matrix_file(const std::string& path);

} // namespace kgc
