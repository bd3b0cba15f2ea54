#include <cstdint>
#include <exception>

#include "kernels_common.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rat::kernels {

namespace {

// Exceptions must not escape an OpenMP region; keep the first and rethrow.
class ErrorSlot {
public:
    template <class F>
    void run(F&& f) {
        try {
            f();
        } catch (...) {
#pragma omp critical(rat_error_slot)
            if (!error_) error_ = std::current_exception();
        }
    }
    void rethrow() const {
        if (error_) std::rethrow_exception(error_);
    }

private:
    std::exception_ptr error_;
};

}  // namespace

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace parallel {

std::vector<std::vector<Neighbour>> expand_frontier(std::span<const Tiling> frontier) {
    std::vector<std::vector<Neighbour>> out(frontier.size());
    ErrorSlot errors;
    const auto n = static_cast<std::int64_t>(frontier.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < n; ++i)
        errors.run([&] { out[static_cast<std::size_t>(i)] = detail::neighbours_of(frontier[static_cast<std::size_t>(i)]); });
    errors.rethrow();
    return out;
}

std::vector<Polynomial> sector_weights(std::span<const Word> words, const Limits& limits) {
    std::vector<Polynomial> out(words.size());
    ErrorSlot errors;
    const auto n = static_cast<std::int64_t>(words.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < n; ++i)
        errors.run([&] { out[static_cast<std::size_t>(i)] = weight_of_word(words[static_cast<std::size_t>(i)], limits); });
    errors.rethrow();
    return out;
}

std::vector<std::vector<Mark>> brute_force_marks(const TableauFrame& frame) {
    const std::uint64_t total = detail::candidate_count(frame);
    constexpr std::uint64_t kChunk = 4096;
    const auto chunks = static_cast<std::int64_t>((total + kChunk - 1) / kChunk);
    std::vector<std::vector<std::vector<Mark>>> found(static_cast<std::size_t>(chunks));
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t c = 0; c < chunks; ++c) {
        const std::uint64_t begin = static_cast<std::uint64_t>(c) * kChunk;
        const std::uint64_t end = std::min(total, begin + kChunk);
        auto& slot = found[static_cast<std::size_t>(c)];
        for (std::uint64_t code = begin; code < end; ++code) {
            auto marks = detail::decode_marks(code, frame.size());
            if (is_valid_marks(frame, marks)) slot.push_back(std::move(marks));
        }
    }
    std::vector<std::vector<Mark>> out;
    for (auto& slot : found)
        for (auto& marks : slot) out.push_back(std::move(marks));
    return out;
}

std::vector<Rational> solve(RationalMatrix a, std::vector<Rational> b) {
    detail::check_system(a, b);
    const auto n = static_cast<std::int64_t>(a.size());
    for (std::size_t col = 0; col < a.size(); ++col) {
        std::size_t p = detail::find_pivot(a, col);
        std::swap(a[p], a[col]);
        std::swap(b[p], b[col]);
#pragma omp parallel for schedule(static)
        for (std::int64_t row = 0; row < n; ++row) detail::eliminate_row(a, b, col, static_cast<std::size_t>(row));
    }
    return detail::back_substitute(a, b);
}

}  // namespace parallel
}  // namespace rat::kernels
