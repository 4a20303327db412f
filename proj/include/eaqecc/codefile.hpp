#pragma once

#include <iosfwd>
#include <string>

#include "eaqecc/code.hpp"

namespace eaqecc {

/// Text code format ('#' starts a comment):
///
///   field p=<int> m=<int> [poly=<int>]
///   layout=plain|symplectic [n=<half-length>]
///   rows=<r> cols=<total length>
///   <r lines of cols space-separated element encodings>
///
/// poly is the modulus encoded as sum c_i p^i, constant term first; it may
/// be omitted when a Conway default exists for (p, m).
LinearCode read_code(std::istream& in);
LinearCode read_code_file(const std::string& path);
LinearCode parse_code(const std::string& text);

void write_code(std::ostream& out, const LinearCode& code);
std::string format_code(const LinearCode& code);

/// Plain matrix (not row-reduced), same header format; used for
/// decomposition basis files.
Matrix read_matrix_file(const std::string& path);
Matrix parse_matrix(const std::string& text);

}  // namespace eaqecc
