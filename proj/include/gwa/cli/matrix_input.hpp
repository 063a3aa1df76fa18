#pragma once

// Matrix text: "2 -1; -1 2" (rows split by ';' or newlines, optional trailing
// "d: 1 1"), or the file layout
//
//     2
//     2 -1
//     -1 2
//     d: 1 1
//
// Every error carries the 1-based line and column it refers to.

#include "gwa/cartan/cartan.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gwa::cli {

class InputError : public std::invalid_argument {
public:
    InputError(int line, int column, const std::string& what)
        : std::invalid_argument("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line),
          column_(column)
    {
    }
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

struct MatrixInput {
    CartanMatrix matrix;
    std::optional<std::vector<int>> d;
};

MatrixInput parse_matrix(const std::string& text);
MatrixInput parse_matrix_file(const std::string& text);

}  // namespace gwa::cli
