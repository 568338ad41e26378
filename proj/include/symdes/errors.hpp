#ifndef SYMDES_ERRORS_HPP
#define SYMDES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace symdes {

// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Matrix or vector dimensions do not fit the operation.
struct invalid_shape_error : error {
    using error::error;
};

// A parameter makes the requested closed form singular (e.g. alpha = 0).
struct singular_parameter_error : error {
    using error::error;
};

// Inputs are individually well-formed but mutually contradictory.
struct inconsistent_input_error : error {
    using error::error;
};

// The request is outside the implemented domain (e.g. prime-power fields).
struct unsupported_error : error {
    using error::error;
};

// Text input failed to parse; positions are 1-based.
struct parse_error : error {
    int line;
    int column;
    parse_error(const std::string& msg, int line_, int column_)
        : error(msg + " (line " + std::to_string(line_) + ", column " +
                std::to_string(column_) + ")"),
          line(line_), column(column_) {}
};

}  // namespace symdes

#endif
