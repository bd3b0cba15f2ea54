#include "rat/limits.hpp"

#include <cstdlib>
#include <string>

namespace rat {

Limits Limits::from_environment() {
    Limits out;
    if (const char* env = std::getenv("RAT_MAX_AREA"); env != nullptr && *env != '\0') {
        std::size_t used = 0;
        unsigned long long value = 0;
        try {
            value = std::stoull(env, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (env[0] < '0' || env[0] > '9') used = 0;
        if (used == 0 || env[used] != '\0') throw std::invalid_argument("RAT_MAX_AREA must be a non-negative integer");
        out.max_area = static_cast<std::size_t>(value);
    }
    return out;
}

}  // namespace rat
