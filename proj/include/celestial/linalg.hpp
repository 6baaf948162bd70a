#pragma once

#include <optional>
#include <vector>

#include "celestial/field.hpp"

namespace celestial {

using Matrix = std::vector<std::vector<FieldElement>>;

// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(Matrix& m);
std::size_t rank(Matrix m);
// Basis of {v : m v = 0}.
std::vector<std::vector<FieldElement>> nullspace(Matrix m, std::size_t ncols);
// Some solution of m v = rhs, or nothing when inconsistent.
std::optional<std::vector<FieldElement>> solve(Matrix m, const std::vector<FieldElement>& rhs);

}  // namespace celestial
