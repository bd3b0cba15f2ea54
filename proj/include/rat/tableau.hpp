#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "rat/algebra.hpp"
#include "rat/diagram.hpp"
#include "rat/limits.hpp"
#include "rat/tiling.hpp"

namespace rat {

enum class Mark : std::uint8_t { Empty = 0, Alpha = 1, Beta = 2 };

char mark_char(Mark m);  // '.', 'a', 'b'

/// A tiling together with its strip structure, shared by every filling of it.
class TableauFrame {
public:
    explicit TableauFrame(Tiling t);

    const Tiling& tiling() const { return tiling_; }
    const Word& type() const { return tiling_.diagram().type(); }
    std::size_t size() const { return tiling_.size(); }
    const std::vector<TileIncidence>& incidence() const { return incidence_; }
    /// Tile indices per north-strip, bottom to top.
    const std::vector<std::vector<std::size_t>>& north_strips() const { return north_; }
    /// Tile indices per west-strip, right to left.
    const std::vector<std::vector<std::size_t>>& west_strips() const { return west_; }

private:
    Tiling tiling_;
    std::vector<TileIncidence> incidence_;
    std::vector<std::vector<std::size_t>> north_, west_;
};

using FramePtr = std::shared_ptr<const TableauFrame>;
FramePtr make_frame(Tiling t);

class Filling {
public:
    Filling(FramePtr frame, std::vector<Mark> marks);

    const TableauFrame& frame() const { return *frame_; }
    const FramePtr& shared_frame() const { return frame_; }
    const Tiling& tiling() const { return frame_->tiling(); }
    const std::vector<Mark>& marks() const { return marks_; }
    Mark at(const Tile& t) const;

    friend bool operator==(const Filling& a, const Filling& b) {
        return a.tiling() == b.tiling() && a.marks_ == b.marks_;
    }

private:
    FramePtr frame_;
    std::vector<Mark> marks_;
};

/// Checks the tile-type rules and the emptiness of tiles above an alpha in its
/// north-strip and left of a beta in its west-strip.
bool is_valid_marks(const TableauFrame& frame, std::span<const Mark> marks);
bool is_valid_filling(const Filling& f);

/// Tiles that carry a north line or a west line.
std::vector<bool> line_mask(const TableauFrame& frame, std::span<const Mark> marks);

using FillingVisitor = std::function<void(std::span<const Mark>)>;

/// Strip-by-strip enumeration: one alpha position (or none) per north-strip, then
/// one compatible beta position (or none) per west-strip.
void for_each_filling(const TableauFrame& frame, const FillingVisitor& visit);

std::vector<Filling> enumerate_fillings(const Tiling& t, const Limits& limits = {});
/// Filters all 3^area mark assignments through is_valid_marks.
std::vector<Filling> brute_force_fillings(const Tiling& t, const Limits& limits = {});

struct WeightMonomial {
    unsigned alpha = 0;
    unsigned beta = 0;
    unsigned q = 0;

    Polynomial to_polynomial() const;
    friend auto operator<=>(const WeightMonomial&, const WeightMonomial&) = default;
};

WeightMonomial weight_of_marks(const TableauFrame& frame, std::span<const Mark> marks);
WeightMonomial weight_of_filling(const Filling& f);

/// alpha^k beta^ell: the weight of the boundary edges of a word.
Polynomial boundary_factor(const Word& w);
/// p / boundary_factor(w); throws std::domain_error when some term is not divisible.
Polynomial strip_boundary_factor(const Polynomial& p, const Word& w);

/// Sum of filling weights; the tiling defaults to the minimal one.
Polynomial weight_of_word(const Word& w, const Limits& limits = {});
Polynomial weight_of_word(const Tiling& t, const Limits& limits = {});

struct NormalForm {
    unsigned i = 0;  // north-strips without an alpha
    unsigned j = 0;  // west-strips without a beta
    unsigned t = 0;  // q-weighted tiles
    unsigned m = 0;  // number of A's

    /// q^t alpha^(n-r-i) beta^(n-r-j).
    WeightMonomial monomial(std::size_t n) const;
};

NormalForm normal_form(const Filling& f);

class NoCaseMatch : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Incoming line state on the two strips that cross a hexagon: whether the tile
/// below it in its north-strip holds an alpha or a north line, and whether the tile
/// right of it in its west-strip holds a beta or a west line.
struct HexagonContext {
    bool north_line = false;
    bool west_line = false;
    friend auto operator<=>(const HexagonContext&, const HexagonContext&) = default;
};

/// Marks of a hexagon in the tile order of minimal_hexagon()/maximal_hexagon().
using LocalMarks = std::array<Mark, 3>;

/// Weight-preserving correspondence between local fillings of a minimal hexagon and
/// of a maximal hexagon, per context. Built by matching local signatures (symbol
/// counts, q count, outgoing lines) and checked to be a bijection on construction.
class PhiTable {
public:
    static const PhiTable& instance();

    std::optional<LocalMarks> to_maximal(HexagonContext c, const LocalMarks& m) const;
    std::optional<LocalMarks> to_minimal(HexagonContext c, const LocalMarks& m) const;
    /// Number of (context, local filling) cases on each side.
    std::size_t case_count() const { return min_to_max_.size(); }

    /// Re-derives every case and checks involution, weight and line preservation.
    bool self_check() const;

private:
    PhiTable();
    std::map<std::pair<HexagonContext, LocalMarks>, LocalMarks> min_to_max_, max_to_min_;
};

Filling weight_preserving_flip(const Filling& f, LatticePoint anchor);

/// Z_{n,r}(alpha, beta, q): the sum of weight_of_word over all words of length n with r A's.
Polynomial partition_function(std::size_t n, std::size_t r, const Limits& limits = {});

/// Z_{n,r,k}(alpha, beta, 1) keyed by k, the number of west-strips without a beta,
/// enumerated on maximal tilings.
std::map<unsigned, Polynomial> refined_partition_function(std::size_t n, std::size_t r,
                                                          const Limits& limits = {});
/// Sum_k Z_{n,r,k} x^k.
Polynomial refined_generating_function(std::size_t n, std::size_t r, const Limits& limits = {});

}  // namespace rat
