#include "rat/tableau.hpp"

#include <algorithm>

#include "rat/kernels.hpp"

namespace rat {

char mark_char(Mark m) {
    switch (m) {
        case Mark::Empty: return '.';
        case Mark::Alpha: return 'a';
        case Mark::Beta: return 'b';
    }
    return '?';
}

TableauFrame::TableauFrame(Tiling t) : tiling_(std::move(t)), incidence_(rat::incidence(tiling_)) {
    StripDecomposition s = strips(tiling_);
    auto indices = [&](const Strip& strip) {
        std::vector<std::size_t> out;
        out.reserve(strip.tiles.size());
        for (const Tile& tile : strip.tiles) out.push_back(*tiling_.index_of(tile));
        return out;
    };
    for (const Strip& strip : s.north) north_.push_back(indices(strip));
    for (const Strip& strip : s.west) west_.push_back(indices(strip));
}

FramePtr make_frame(Tiling t) { return std::make_shared<const TableauFrame>(std::move(t)); }

Filling::Filling(FramePtr frame, std::vector<Mark> marks) : frame_(std::move(frame)), marks_(std::move(marks)) {
    if (marks_.size() != frame_->size()) throw std::invalid_argument("filling does not cover the tiling");
}

Mark Filling::at(const Tile& t) const {
    auto idx = tiling().index_of(t);
    if (!idx) throw std::invalid_argument("tile not in tiling");
    return marks_[*idx];
}

namespace {

bool mark_allowed(TileKind kind, Mark m) {
    switch (m) {
        case Mark::Empty: return true;
        case Mark::Alpha: return kind != TileKind::DA;
        case Mark::Beta: return kind != TileKind::AE;
    }
    return false;
}

// Marks every tile strictly after the first `symbol` along each strip.
void mark_lines(const std::vector<std::vector<std::size_t>>& strips, std::span<const Mark> marks, Mark symbol,
                std::vector<bool>& on_line) {
    for (const auto& strip : strips) {
        bool line = false;
        for (std::size_t idx : strip) {
            if (line) on_line[idx] = true;
            if (marks[idx] == symbol) line = true;
        }
    }
}

}  // namespace

bool is_valid_marks(const TableauFrame& frame, std::span<const Mark> marks) {
    if (marks.size() != frame.size()) return false;
    const auto& tiles = frame.tiling().tiles();
    for (std::size_t i = 0; i < tiles.size(); ++i)
        if (!mark_allowed(tiles[i].kind, marks[i])) return false;
    auto strip_ok = [&](const std::vector<std::vector<std::size_t>>& strips, Mark symbol) {
        for (const auto& strip : strips) {
            bool seen = false;
            for (std::size_t idx : strip) {
                if (seen && marks[idx] != Mark::Empty) return false;
                if (marks[idx] == symbol) seen = true;
            }
        }
        return true;
    };
    return strip_ok(frame.north_strips(), Mark::Alpha) && strip_ok(frame.west_strips(), Mark::Beta);
}

bool is_valid_filling(const Filling& f) { return is_valid_marks(f.frame(), f.marks()); }

std::vector<bool> line_mask(const TableauFrame& frame, std::span<const Mark> marks) {
    std::vector<bool> on_line(frame.size(), false);
    mark_lines(frame.north_strips(), marks, Mark::Alpha, on_line);
    mark_lines(frame.west_strips(), marks, Mark::Beta, on_line);
    return on_line;
}

void for_each_filling(const TableauFrame& frame, const FillingVisitor& visit) {
    const auto& north = frame.north_strips();
    const auto& west = frame.west_strips();
    std::vector<Mark> marks(frame.size(), Mark::Empty);
    // above_alpha[i]: tile i lies strictly above an alpha in its north-strip.
    std::vector<bool> above_alpha(frame.size(), false);

    std::function<void(std::size_t)> place_betas = [&](std::size_t j) {
        if (j == west.size()) {
            visit(marks);
            return;
        }
        const auto& strip = west[j];
        place_betas(j + 1);
        // A beta empties every tile to its left, so no alpha may sit there.
        std::size_t first_allowed = 0;
        for (std::size_t p = 0; p < strip.size(); ++p)
            if (marks[strip[p]] == Mark::Alpha) first_allowed = p + 1;
        for (std::size_t p = first_allowed; p < strip.size(); ++p) {
            std::size_t idx = strip[p];
            if (above_alpha[idx]) continue;
            marks[idx] = Mark::Beta;
            place_betas(j + 1);
            marks[idx] = Mark::Empty;
        }
    };

    std::function<void(std::size_t)> place_alphas = [&](std::size_t i) {
        if (i == north.size()) {
            place_betas(0);
            return;
        }
        const auto& strip = north[i];
        place_alphas(i + 1);
        for (std::size_t p = 0; p < strip.size(); ++p) {
            marks[strip[p]] = Mark::Alpha;
            for (std::size_t above = p + 1; above < strip.size(); ++above) above_alpha[strip[above]] = true;
            place_alphas(i + 1);
            for (std::size_t above = p + 1; above < strip.size(); ++above) above_alpha[strip[above]] = false;
            marks[strip[p]] = Mark::Empty;
        }
    };
    place_alphas(0);
}

std::vector<Filling> enumerate_fillings(const Tiling& t, const Limits& limits) {
    check_limit("diagram area", t.size(), limits.max_area);
    FramePtr frame = make_frame(t);
    std::vector<Filling> out;
    for_each_filling(*frame, [&](std::span<const Mark> marks) {
        out.emplace_back(frame, std::vector<Mark>(marks.begin(), marks.end()));
        check_limit("filling count", out.size(), limits.max_fillings);
    });
    return out;
}

std::vector<Filling> brute_force_fillings(const Tiling& t, const Limits& limits) {
    check_limit("diagram area", t.size(), limits.max_area);
    FramePtr frame = make_frame(t);
    std::vector<Filling> out;
    for (auto& marks : kernels::parallel::brute_force_marks(*frame)) out.emplace_back(frame, std::move(marks));
    return out;
}

Polynomial WeightMonomial::to_polynomial() const { return Polynomial::monomial({alpha, beta, q, 0}); }

WeightMonomial weight_of_marks(const TableauFrame& frame, std::span<const Mark> marks) {
    const Word& w = frame.type();
    WeightMonomial out{static_cast<unsigned>(w.k()), static_cast<unsigned>(w.ell()), 0};
    std::vector<bool> on_line = line_mask(frame, marks);
    for (std::size_t i = 0; i < marks.size(); ++i) {
        switch (marks[i]) {
            case Mark::Alpha: ++out.alpha; break;
            case Mark::Beta: ++out.beta; break;
            case Mark::Empty:
                if (!on_line[i]) ++out.q;
                break;
        }
    }
    return out;
}

WeightMonomial weight_of_filling(const Filling& f) { return weight_of_marks(f.frame(), f.marks()); }

Polynomial boundary_factor(const Word& w) {
    return Polynomial::monomial({static_cast<unsigned>(w.k()), static_cast<unsigned>(w.ell()), 0, 0});
}

Polynomial strip_boundary_factor(const Polynomial& p, const Word& w) {
    const auto k = static_cast<unsigned>(w.k()), ell = static_cast<unsigned>(w.ell());
    Polynomial out;
    for (const auto& [e, c] : p.terms()) {
        if (e[0] < k || e[1] < ell) throw std::domain_error("polynomial is not divisible by the boundary factor");
        out += Polynomial::monomial({e[0] - k, e[1] - ell, e[2], e[3]}, c);
    }
    return out;
}

Polynomial weight_of_word(const Tiling& t, const Limits& limits) {
    check_limit("diagram area", t.size(), limits.max_area);
    TableauFrame frame(t);
    std::map<WeightMonomial, std::size_t> tally;
    std::size_t count = 0;
    for_each_filling(frame, [&](std::span<const Mark> marks) {
        ++tally[weight_of_marks(frame, marks)];
        check_limit("filling count", ++count, limits.max_fillings);
    });
    Polynomial out;
    for (const auto& [m, c] : tally)
        out += Polynomial::monomial({m.alpha, m.beta, m.q, 0}, Integer(static_cast<unsigned long>(c)));
    return out;
}

Polynomial weight_of_word(const Word& w, const Limits& limits) {
    check_limit("diagram area", diagram_area(w), limits.max_area);
    return weight_of_word(minimal_tiling(make_diagram(w)), limits);
}

WeightMonomial NormalForm::monomial(std::size_t n) const {
    return {static_cast<unsigned>(n - m - i), static_cast<unsigned>(n - m - j), t};
}

NormalForm normal_form(const Filling& f) {
    const TableauFrame& frame = f.frame();
    const auto& marks = f.marks();
    auto strips_without = [&](const std::vector<std::vector<std::size_t>>& strips, Mark symbol) {
        unsigned count = 0;
        for (const auto& strip : strips)
            if (std::none_of(strip.begin(), strip.end(), [&](std::size_t i) { return marks[i] == symbol; })) ++count;
        return count;
    };
    NormalForm nf;
    nf.i = strips_without(frame.north_strips(), Mark::Alpha);
    nf.j = strips_without(frame.west_strips(), Mark::Beta);
    nf.t = weight_of_marks(frame, marks).q;
    nf.m = static_cast<unsigned>(frame.type().r());
    return nf;
}

// ---------------------------------------------------------------------------
// Weight-preserving flip.

namespace {

struct HexagonShape {
    std::array<TileKind, 3> kinds;
    std::array<int, 2> north;  // local indices, bottom to top
    std::array<int, 2> west;   // local indices, right to left
};

// minimal_hexagon order: DE, AE, DA. North: AE below DE. West: DE right of DA.
constexpr HexagonShape kMinShape{{TileKind::DE, TileKind::AE, TileKind::DA}, {1, 0}, {0, 2}};
// maximal_hexagon order: DA, AE, DE. North: DE below AE. West: DA right of DE.
constexpr HexagonShape kMaxShape{{TileKind::DA, TileKind::AE, TileKind::DE}, {2, 1}, {0, 2}};

struct LocalSignature {
    unsigned alpha = 0, beta = 0, q = 0;
    bool north_out = false, west_out = false;
    friend auto operator<=>(const LocalSignature&, const LocalSignature&) = default;
};

std::optional<LocalSignature> local_signature(const HexagonShape& shape, HexagonContext ctx, const LocalMarks& m) {
    for (int i = 0; i < 3; ++i)
        if (!mark_allowed(shape.kinds[static_cast<std::size_t>(i)], m[static_cast<std::size_t>(i)])) return std::nullopt;
    std::array<bool, 3> on_line{false, false, false};
    auto walk = [&](const std::array<int, 2>& order, bool line, Mark symbol) -> std::optional<bool> {
        for (int local : order) {
            auto idx = static_cast<std::size_t>(local);
            if (line) {
                if (m[idx] != Mark::Empty) return std::nullopt;
                on_line[idx] = true;
            }
            if (m[idx] == symbol) line = true;
        }
        return line;
    };
    auto north_out = walk(shape.north, ctx.north_line, Mark::Alpha);
    auto west_out = walk(shape.west, ctx.west_line, Mark::Beta);
    if (!north_out || !west_out) return std::nullopt;
    LocalSignature sig;
    sig.north_out = *north_out;
    sig.west_out = *west_out;
    for (std::size_t i = 0; i < 3; ++i) {
        if (m[i] == Mark::Alpha) ++sig.alpha;
        if (m[i] == Mark::Beta) ++sig.beta;
        if (m[i] == Mark::Empty && !on_line[i]) ++sig.q;
    }
    return sig;
}

std::vector<LocalMarks> all_local_marks() {
    std::vector<LocalMarks> out;
    constexpr std::array<Mark, 3> kMarks{Mark::Empty, Mark::Alpha, Mark::Beta};
    for (Mark a : kMarks)
        for (Mark b : kMarks)
            for (Mark c : kMarks) out.push_back({a, b, c});
    return out;
}

constexpr std::array<HexagonContext, 4> kContexts{
    HexagonContext{false, false}, HexagonContext{false, true}, HexagonContext{true, false}, HexagonContext{true, true}};

}  // namespace

PhiTable::PhiTable() {
    for (HexagonContext ctx : kContexts) {
        std::map<LocalSignature, std::vector<LocalMarks>> min_side, max_side;
        for (const LocalMarks& m : all_local_marks()) {
            if (auto sig = local_signature(kMinShape, ctx, m)) min_side[*sig].push_back(m);
            if (auto sig = local_signature(kMaxShape, ctx, m)) max_side[*sig].push_back(m);
        }
        if (min_side.size() != max_side.size()) throw NoCaseMatch("hexagon signatures differ between sides");
        for (const auto& [sig, mins] : min_side) {
            auto it = max_side.find(sig);
            if (it == max_side.end() || it->second.size() != mins.size())
                throw NoCaseMatch("no maximal-hexagon case matches a minimal-hexagon filling");
            for (std::size_t i = 0; i < mins.size(); ++i) {
                min_to_max_[{ctx, mins[i]}] = it->second[i];
                max_to_min_[{ctx, it->second[i]}] = mins[i];
            }
        }
    }
}

const PhiTable& PhiTable::instance() {
    static const PhiTable table;
    return table;
}

std::optional<LocalMarks> PhiTable::to_maximal(HexagonContext c, const LocalMarks& m) const {
    auto it = min_to_max_.find({c, m});
    if (it == min_to_max_.end()) return std::nullopt;
    return it->second;
}

std::optional<LocalMarks> PhiTable::to_minimal(HexagonContext c, const LocalMarks& m) const {
    auto it = max_to_min_.find({c, m});
    if (it == max_to_min_.end()) return std::nullopt;
    return it->second;
}

bool PhiTable::self_check() const {
    if (min_to_max_.size() != max_to_min_.size()) return false;
    for (HexagonContext ctx : kContexts) {
        for (const LocalMarks& m : all_local_marks()) {
            auto sig = local_signature(kMinShape, ctx, m);
            auto image = to_maximal(ctx, m);
            if (sig.has_value() != image.has_value()) return false;
            if (!image) continue;
            if (local_signature(kMaxShape, ctx, *image) != sig) return false;
            if (to_minimal(ctx, *image) != m) return false;
        }
    }
    return true;
}

Filling weight_preserving_flip(const Filling& f, LatticePoint anchor) {
    const Tiling& t = f.tiling();
    auto dir = hexagon_at(t, anchor);
    if (!dir) throw NotAHexagon("no flippable hexagon at the given anchor");
    const bool from_min = *dir == FlipDirection::MinToMax;
    const auto from_tiles = from_min ? minimal_hexagon(anchor) : maximal_hexagon(anchor);
    const auto to_tiles = from_min ? maximal_hexagon(anchor) : minimal_hexagon(anchor);
    const HexagonShape& shape = from_min ? kMinShape : kMaxShape;

    const TableauFrame& frame = f.frame();
    const auto& marks = f.marks();
    std::array<std::size_t, 3> idx{};
    LocalMarks local{};
    for (std::size_t i = 0; i < 3; ++i) {
        idx[i] = *t.index_of(from_tiles[i]);
        local[i] = marks[idx[i]];
    }
    // The line state entering the hexagon is decided by the strip tiles before it.
    auto incoming = [&](const std::vector<std::size_t>& strip, int pos, Mark symbol) {
        for (int p = 0; p < pos; ++p)
            if (marks[strip[static_cast<std::size_t>(p)]] == symbol) return true;
        return false;
    };
    const TileIncidence& north_entry = frame.incidence()[idx[static_cast<std::size_t>(shape.north[0])]];
    const TileIncidence& west_entry = frame.incidence()[idx[static_cast<std::size_t>(shape.west[0])]];
    HexagonContext ctx{
        incoming(frame.north_strips()[static_cast<std::size_t>(north_entry.north)], north_entry.north_pos, Mark::Alpha),
        incoming(frame.west_strips()[static_cast<std::size_t>(west_entry.west)], west_entry.west_pos, Mark::Beta)};

    const PhiTable& table = PhiTable::instance();
    auto image = from_min ? table.to_maximal(ctx, local) : table.to_minimal(ctx, local);
    if (!image) throw NoCaseMatch("hexagon filling matches no flip case");

    Tiling flipped = apply_flip(t, anchor);
    FramePtr out_frame = make_frame(flipped);
    std::vector<Mark> out(flipped.size(), Mark::Empty);
    for (std::size_t i = 0; i < flipped.size(); ++i) {
        const Tile& tile = flipped.tiles()[i];
        auto in_hex = std::find(to_tiles.begin(), to_tiles.end(), tile);
        if (in_hex != to_tiles.end())
            out[i] = (*image)[static_cast<std::size_t>(in_hex - to_tiles.begin())];
        else
            out[i] = marks[*t.index_of(tile)];
    }
    return Filling(out_frame, std::move(out));
}

// ---------------------------------------------------------------------------
// Partition functions.

Polynomial partition_function(std::size_t n, std::size_t r, const Limits& limits) {
    if (r > n) throw std::invalid_argument("r must not exceed n");
    auto words = words_with(n, r);
    Polynomial total;
    for (const Polynomial& p : kernels::parallel::sector_weights(words, limits)) total += p;
    return total;
}

std::map<unsigned, Polynomial> refined_partition_function(std::size_t n, std::size_t r, const Limits& limits) {
    if (r > n) throw std::invalid_argument("r must not exceed n");
    std::map<unsigned, std::map<std::pair<unsigned, unsigned>, std::size_t>> tally;
    for (const Word& w : words_with(n, r)) {
        check_limit("diagram area", diagram_area(w), limits.max_area);
        TableauFrame frame(maximal_tiling(make_diagram(w)));
        for_each_filling(frame, [&](std::span<const Mark> marks) {
            unsigned without_beta = 0;
            for (const auto& strip : frame.west_strips())
                if (std::none_of(strip.begin(), strip.end(), [&](std::size_t i) { return marks[i] == Mark::Beta; }))
                    ++without_beta;
            WeightMonomial m = weight_of_marks(frame, marks);
            ++tally[without_beta][{m.alpha, m.beta}];
        });
    }
    std::map<unsigned, Polynomial> out;
    for (const auto& [k, terms] : tally) {
        Polynomial p;
        for (const auto& [ab, c] : terms)
            p += Polynomial::monomial({ab.first, ab.second, 0, 0}, Integer(static_cast<unsigned long>(c)));
        out[k] = p;
    }
    return out;
}

Polynomial refined_generating_function(std::size_t n, std::size_t r, const Limits& limits) {
    Polynomial out;
    for (const auto& [k, p] : refined_partition_function(n, r, limits)) out += p * Polynomial::symbol(Symbol::X, k);
    return out;
}

}  // namespace rat
