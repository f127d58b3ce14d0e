#include "ore/linsolve.hpp"

namespace ore {

SolveResult solve_linear(std::vector<std::vector<Scalar>> a, std::vector<Scalar> b,
                         std::size_t cols) {
    std::size_t rows = a.size();
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_row(cols, rows);

    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pr = rank;
        while (pr < rows && a[pr][c].is_zero()) ++pr;
        if (pr == rows) continue;
        std::swap(a[pr], a[rank]);
        std::swap(b[pr], b[rank]);
        Scalar inv = a[rank][c].inverse();
        for (std::size_t k = c; k < cols; ++k) a[rank][k] *= inv;
        b[rank] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][c].is_zero()) continue;
            Scalar factor = a[r][c];
            for (std::size_t k = c; k < cols; ++k) a[r][k] -= factor * a[rank][k];
            b[r] -= factor * b[rank];
        }
        pivot_row[c] = rank;
        ++rank;
    }

    for (std::size_t r = rank; r < rows; ++r)
        if (!b[r].is_zero()) return {SolveStatus::inconsistent, {}};

    for (std::size_t c = 0; c < cols; ++c)
        if (pivot_row[c] == rows) return {SolveStatus::singular, {}};

    std::vector<Scalar> x(cols);
    for (std::size_t c = 0; c < cols; ++c) x[c] = b[pivot_row[c]];
    return {SolveStatus::unique, std::move(x)};
}

std::optional<std::vector<std::vector<Scalar>>> invert_matrix(
    std::vector<std::vector<Scalar>> m, const FieldSpec& fs) {
    std::size_t n = m.size();
    std::vector<std::vector<Scalar>> inv(n, std::vector<Scalar>(n, Scalar::zero(fs)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = Scalar::one(fs);

    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pr = c;
        while (pr < n && m[pr][c].is_zero()) ++pr;
        if (pr == n) return std::nullopt;
        std::swap(m[pr], m[c]);
        std::swap(inv[pr], inv[c]);
        Scalar d = m[c][c].inverse();
        for (std::size_t k = 0; k < n; ++k) {
            m[c][k] *= d;
            inv[c][k] *= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c].is_zero()) continue;
            Scalar factor = m[r][c];
            for (std::size_t k = 0; k < n; ++k) {
                m[r][k] -= factor * m[c][k];
                inv[r][k] -= factor * inv[c][k];
            }
        }
    }
    return inv;
}

}  // namespace ore
