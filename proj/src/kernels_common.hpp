#pragma once

// Per-item bodies shared by the serial and OpenMP kernels.

#include <cstdint>
#include <vector>

#include "rat/kernels.hpp"
#include "rat/tableau.hpp"

namespace rat::kernels::detail {

inline std::vector<Neighbour> neighbours_of(const Tiling& t) {
    std::vector<Neighbour> out;
    for (const Flip& f : find_flips(t)) {
        Tiling next = apply_flip(t, f.anchor);
        std::string key = tiling_to_paths(next).key();
        out.push_back({std::move(key), std::move(next)});
    }
    return out;
}

inline std::vector<Mark> decode_marks(std::uint64_t code, std::size_t size) {
    std::vector<Mark> marks(size);
    for (std::size_t i = 0; i < size; ++i) {
        marks[i] = static_cast<Mark>(code % 3);
        code /= 3;
    }
    return marks;
}

/// Largest area brute_force_marks accepts (3^14 candidates).
inline constexpr std::size_t kBruteForceMaxArea = 14;

inline std::uint64_t candidate_count(const TableauFrame& frame) {
    check_limit("brute-force area", frame.size(), kBruteForceMaxArea);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < frame.size(); ++i) total *= 3;
    return total;
}

inline void check_system(const RationalMatrix& a, const std::vector<Rational>& b) {
    for (const auto& row : a)
        if (row.size() != a.size()) throw std::invalid_argument("matrix is not square");
    if (b.size() != a.size()) throw std::invalid_argument("right-hand side has the wrong size");
}

inline std::size_t find_pivot(const RationalMatrix& a, std::size_t col) {
    for (std::size_t row = col; row < a.size(); ++row)
        if (a[row][col] != 0) return row;
    throw SingularSystem("linear system is singular");
}

inline void eliminate_row(RationalMatrix& a, std::vector<Rational>& b, std::size_t pivot, std::size_t row) {
    if (row == pivot || a[row][pivot] == 0) return;
    Rational factor = a[row][pivot] / a[pivot][pivot];
    for (std::size_t c = pivot; c < a.size(); ++c) a[row][c] -= factor * a[pivot][c];
    b[row] -= factor * b[pivot];
}

inline std::vector<Rational> back_substitute(const RationalMatrix& a, std::vector<Rational>& b) {
    // Gauss-Jordan leaves a diagonal matrix.
    std::vector<Rational> x(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        x[i] = b[i] / a[i][i];
        x[i].canonicalize();
    }
    return x;
}

}  // namespace rat::kernels::detail
