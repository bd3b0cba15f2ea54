#include "kernels_common.hpp"

namespace rat::kernels::serial {

std::vector<std::vector<Neighbour>> expand_frontier(std::span<const Tiling> frontier) {
    std::vector<std::vector<Neighbour>> out;
    out.reserve(frontier.size());
    for (const Tiling& t : frontier) out.push_back(detail::neighbours_of(t));
    return out;
}

std::vector<Polynomial> sector_weights(std::span<const Word> words, const Limits& limits) {
    std::vector<Polynomial> out;
    out.reserve(words.size());
    for (const Word& w : words) out.push_back(weight_of_word(w, limits));
    return out;
}

std::vector<std::vector<Mark>> brute_force_marks(const TableauFrame& frame) {
    const std::uint64_t total = detail::candidate_count(frame);
    std::vector<std::vector<Mark>> out;
    for (std::uint64_t code = 0; code < total; ++code) {
        auto marks = detail::decode_marks(code, frame.size());
        if (is_valid_marks(frame, marks)) out.push_back(std::move(marks));
    }
    return out;
}

std::vector<Rational> solve(RationalMatrix a, std::vector<Rational> b) {
    detail::check_system(a, b);
    for (std::size_t col = 0; col < a.size(); ++col) {
        std::size_t p = detail::find_pivot(a, col);
        std::swap(a[p], a[col]);
        std::swap(b[p], b[col]);
        for (std::size_t row = 0; row < a.size(); ++row) detail::eliminate_row(a, b, col, row);
    }
    return detail::back_substitute(a, b);
}

}  // namespace rat::kernels::serial
