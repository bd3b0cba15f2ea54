#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace rat::cli {

enum class OutputFormat { Text, Json };
enum class TilingChoice { Minimal, Maximal };
enum class CountKind { Mct, Classes, Macmahon };

inline constexpr const char* kSchemaVersion = "1";

/// Word length accepted for single-word commands without --max-area.
inline constexpr std::size_t kDefaultMaxWordLength = 8;
/// n accepted for whole-sector commands without --max-area.
inline constexpr std::size_t kDefaultMaxSectorN = 6;

struct CommandRequest {
    std::string subcommand;  // weight fillings tilings stationary verify count render
    std::optional<std::string> word;
    std::optional<std::size_t> n, r;
    std::optional<std::string> alpha, beta, q;  // "p/q" or integers
    OutputFormat output = OutputFormat::Text;
    std::optional<std::string> out_file;
    std::optional<std::size_t> max_area;

    TilingChoice tiling = TilingChoice::Minimal;
    std::optional<std::size_t> filling_index;  // render

    std::vector<std::string> suites;  // verify; empty means all
    std::size_t max_n = 5;

    CountKind count = CountKind::Classes;
    std::vector<std::size_t> count_args;  // n r [k] | n r | a b c
};

/// Exit codes: 0 success, 1 verification failure, 2 invalid request.
int run(const CommandRequest& request, std::ostream& out, std::ostream& err);

}  // namespace rat::cli
