#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rat/limits.hpp"

namespace rat {

/// Outcome of one property family: how many cases ran and a line per failing case.
struct SuiteResult {
    std::string name;
    std::size_t checked = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

/// Matrix-Ansatz identities for words of length <= max_n.
SuiteResult ansatz_suite(std::size_t max_n, const Limits& limits = {});
/// Equal weights on every tiling, flip-graph connectivity, heights equal to flip
/// distance, for words of length <= max_n.
SuiteResult tiling_independence_suite(std::size_t max_n, const Limits& limits = {});
/// rat_to_mct injective, weight-preserving and onto the direct enumeration, n <= max_n.
SuiteResult bijection_suite(std::size_t max_n, const Limits& limits = {});
/// Closed forms against enumeration for n <= max_n.
SuiteResult closed_forms_suite(std::size_t max_n, const Limits& limits = {});
/// Stationary distribution against normalized weights for n <= max_n.
SuiteResult main_theorem_suite(std::size_t max_n, const Limits& limits = {});
/// Strip enumeration against the brute-force filter, and the normal-form weight
/// identity, for words of length <= max_n.
SuiteResult fillings_suite(std::size_t max_n, const Limits& limits = {});

/// Suite names in their canonical order.
const std::vector<std::string>& suite_names();
SuiteResult run_suite(const std::string& name, std::size_t max_n, const Limits& limits = {});

}  // namespace rat
