#pragma once

// Data-parallel inner loops. Every kernel has an OpenMP implementation in
// `parallel` and a plain loop in `serial`; the serial versions are the reference
// the tests and the benchmark compare against. Results never depend on thread
// scheduling: each work item writes its own slot and slots are merged in order.

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rat/algebra.hpp"
#include "rat/diagram.hpp"
#include "rat/limits.hpp"
#include "rat/tiling.hpp"

namespace rat {

enum class Mark : std::uint8_t;
class TableauFrame;

using RationalMatrix = std::vector<std::vector<Rational>>;

class SingularSystem : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class SectorTiling : std::uint8_t { Minimal, Maximal };

namespace kernels {

struct Neighbour {
    std::string key;  // PathConfig key
    Tiling tiling;
};

namespace serial {
/// All single-flip neighbours of each frontier tiling, in find_flips order.
std::vector<std::vector<Neighbour>> expand_frontier(std::span<const Tiling> frontier);
/// weight_of_word for each word.
std::vector<Polynomial> sector_weights(std::span<const Word> words, const Limits& limits);
/// Every valid mark vector among the 3^area candidates, in base-3 counting order.
std::vector<std::vector<Mark>> brute_force_marks(const TableauFrame& frame);
/// Solves a x = b exactly by Gaussian elimination.
std::vector<Rational> solve(RationalMatrix a, std::vector<Rational> b);
}  // namespace serial

namespace parallel {
std::vector<std::vector<Neighbour>> expand_frontier(std::span<const Tiling> frontier);
std::vector<Polynomial> sector_weights(std::span<const Word> words, const Limits& limits);
std::vector<std::vector<Mark>> brute_force_marks(const TableauFrame& frame);
std::vector<Rational> solve(RationalMatrix a, std::vector<Rational> b);
}  // namespace parallel

/// Threads OpenMP will use (1 when built without OpenMP).
int max_threads();

}  // namespace kernels
}  // namespace rat
