#ifndef SYMDES_MATRIX_IO_HPP
#define SYMDES_MATRIX_IO_HPP

#include <iosfwd>
#include <string>

#include "symdes/ratmatrix.hpp"

namespace symdes {

// Text format:
//   line 1:  <rows> <cols>
//   then one line per row with <cols> whitespace-separated entries,
//   each "p" or "p/q" with q > 0 (input need not be reduced).
// '#' starts a comment running to end of line; blank lines are skipped.
// Parse failures throw parse_error with 1-based line and column.
RatMatrix read_matrix(std::istream& in);
RatMatrix read_matrix_file(const std::string& path);

// Writes the same format, entries reduced with positive denominators.
void write_matrix(std::ostream& out, const RatMatrix& m);
void write_matrix_file(const std::string& path, const RatMatrix& m);

}  // namespace symdes

#endif
