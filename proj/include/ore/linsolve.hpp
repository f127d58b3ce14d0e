#pragma once

#include <optional>
#include <vector>

#include "ore/scalar.hpp"

namespace ore {

enum class SolveStatus { unique, singular, inconsistent };

struct SolveResult {
    SolveStatus status;
    std::vector<Scalar> solution;  // valid when status == unique
};

// Exact Gaussian elimination over the coefficient field. `a` has rows.size()
// rows of `cols` entries each; returns the unique solution of a x = b when it
// exists. Overdetermined systems are allowed: extra consistent rows are fine,
// contradictory ones report inconsistent, and rank < cols reports singular.
SolveResult solve_linear(std::vector<std::vector<Scalar>> a, std::vector<Scalar> b,
                         std::size_t cols);

// Inverse of a square matrix given as rows; nullopt when singular.
std::optional<std::vector<std::vector<Scalar>>> invert_matrix(
    std::vector<std::vector<Scalar>> m, const FieldSpec& fs);

}  // namespace ore
