#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "rat/diagram.hpp"
#include "rat/tableau.hpp"
#include "rat/tiling.hpp"

namespace rat {

class InconsistentInputs : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// SVG 1.1 drawing of Γ(w) on a triangular lattice with a 40-unit pitch: tiles,
/// alpha/beta glyphs, dashed north and west lines, and the word on the boundary.
/// The tiling defaults to the filling's tiling, then to the minimal tiling.
/// Output depends only on the inputs.
std::string render_svg(const Word& w, const std::optional<Filling>& filling = std::nullopt,
                       const std::optional<Tiling>& tiling = std::nullopt);

}  // namespace rat
