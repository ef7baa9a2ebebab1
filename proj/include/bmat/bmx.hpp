#pragma once

#include <stdexcept>
#include <string>

#include "bmat/matroid.hpp"

namespace bmat {

// .bmx text format:
//   # comment lines and blank lines are ignored
//   name <text>            (optional)
//   rank <r>
//   labels <l1> ... <ln>
//   r rows of n characters 0/1; spaces between columns are optional
struct ParseError : std::runtime_error {
    int line, column;
    ParseError(int line, int column, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
          line(line), column(column) {}
};

BinaryMatroid parse_bmx(const std::string& text);
BinaryMatroid read_bmx(const std::string& path);
// Normalized form: name (if any), rank, labels, rows without spaces.
std::string emit_bmx(const BinaryMatroid& m);

}  // namespace bmat
