#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rat {

/// Caps on the exponential parts of the build (tiling and filling enumeration).
struct Limits {
    /// Largest diagram area any enumerator will touch. 21 is the largest area of a
    /// word of length 8.
    std::size_t max_area = 21;
    std::size_t max_tilings = 2'000'000;
    std::size_t max_fillings = 20'000'000;

    /// Defaults, with max_area overridden by RAT_MAX_AREA when set.
    static Limits from_environment();
};

class LimitExceeded : public std::runtime_error {
public:
    LimitExceeded(const std::string& what, std::size_t value, std::size_t limit)
        : std::runtime_error(what + " " + std::to_string(value) + " exceeds limit " +
                             std::to_string(limit)) {}
};

inline void check_limit(const char* what, std::size_t value, std::size_t limit) {
    if (value > limit) throw LimitExceeded(what, value, limit);
}

}  // namespace rat
