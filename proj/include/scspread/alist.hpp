#pragma once

#include <iosfwd>
#include <string>

#include "scspread/protograph.hpp"

namespace scspread {

// Standard alist interchange format: dimensions (columns first), maximum
// degrees, per-column and per-row degree lists, then 1-indexed neighbor
// lists per column and per row.
void write_alist(std::ostream& out, const SparseBinaryMatrix& h);
void write_alist_file(const std::string& path, const SparseBinaryMatrix& h);

// Accepts zero-padded neighbor lists (padding entries are ignored).
SparseBinaryMatrix read_alist(std::istream& in);
SparseBinaryMatrix read_alist_file(const std::string& path);

}  // namespace scspread
