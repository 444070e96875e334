#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hk/rational.hpp"

namespace hk::linalg {

using Row = std::vector<Rat>;
using Matrix = std::vector<Row>;

// Row-reduces in place to reduced echelon form; returns the rank.
std::size_t row_reduce(Matrix& m);

std::size_t rank(Matrix m);

// Basis of {x : rows * x = 0}; `cols` is the number of unknowns.
std::vector<Row> nullspace(Matrix rows, std::size_t cols);

// Solution of the square system a * x = b, or nullopt when singular.
std::optional<Row> solve(Matrix a, Row b);

Rat determinant(Matrix m);

}  // namespace hk::linalg
