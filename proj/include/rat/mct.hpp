#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "rat/diagram.hpp"
#include "rat/limits.hpp"
#include "rat/tableau.hpp"

namespace rat {

class NotMinimalTiling : public std::invalid_argument {
public:
    NotMinimalTiling() : std::invalid_argument("filling is not on the minimal tiling") {}
};
class NotQZero : public std::invalid_argument {
public:
    NotQZero() : std::invalid_argument("filling has a positive q exponent") {}
};

/// Multi-Catalan tableau. Rows are the D and A letters of the type, top to bottom in
/// word order; columns are the E and A letters, right to left in word order. The
/// diagram is justified to the northwest, so row s holds one box for every column
/// letter after s, and box (s, w) exists exactly when s precedes w in the word.
/// The southeast boundary, read from the northeast, spells the type: D is a south
/// step, E a west step, A a west step followed by a south step (an inner corner).
class MCTableau {
public:
    explicit MCTableau(Word type);

    const Word& type() const { return type_; }
    /// Word positions of the row letters (D, A) and column letters (E, A).
    const std::vector<std::size_t>& row_letters() const { return rows_; }
    const std::vector<std::size_t>& column_letters() const { return columns_; }

    std::vector<std::size_t> row_lengths() const;     // weakly decreasing
    std::vector<std::size_t> column_heights() const;  // right to left

    bool has_box(std::size_t s, std::size_t w) const { return s < w && w < type_.size() && is_row(s) && is_column(w); }
    Mark at(std::size_t s, std::size_t w) const;
    void set(std::size_t s, std::size_t w, Mark m);

    bool is_row(std::size_t pos) const { return type_[pos] != Letter::E; }
    bool is_column(std::size_t pos) const { return type_[pos] != Letter::D; }

    /// Boundary step labels from the northeast corner: one entry per step.
    std::string boundary_labels() const;

    friend bool operator==(const MCTableau& a, const MCTableau& b) {
        return a.type_ == b.type_ && a.marks_ == b.marks_;
    }
    friend bool operator<(const MCTableau& a, const MCTableau& b) {
        return a.type_ != b.type_ ? a.type_ < b.type_ : a.marks_ < b.marks_;
    }

private:
    std::size_t slot(std::size_t s, std::size_t w) const;

    Word type_;
    std::vector<std::size_t> rows_, columns_;
    std::vector<Mark> marks_;  // n x n, indexed by word positions
};

/// A box is forced empty when a beta lies right of it in its row, an alpha lies
/// below it in its column, or an A letter sits strictly between its row and column
/// letters, which puts an A-row below it in its column. AA boxes are placeholders
/// and always count as forced.
bool is_forced_empty(const MCTableau& t, std::size_t s, std::size_t w);

bool is_valid_mct(const MCTableau& t);

std::vector<MCTableau> enumerate_mct(const Word& w, const Limits& limits = {});

struct MCTWeight {
    unsigned alpha = 0;
    unsigned beta = 0;
    friend auto operator<=>(const MCTWeight&, const MCTWeight&) = default;
};

/// Symbols in the tableau times alpha^k beta^(n-k-r).
MCTWeight mct_weight(const MCTableau& t);

/// Reads the minimal-tiling filling box by box (each tile becomes the box of its
/// crossing row and column letters) and moves each beta of a DA tile to the
/// right-most box of its row that may hold it.
MCTableau rat_to_mct(const Filling& f);

struct BijectionWordResult {
    Word word;
    std::size_t rat_count = 0;  // q = 0 fillings on the minimal tiling
    std::size_t image_count = 0;
    std::size_t mct_count = 0;
    bool injective = false;
    bool weights_match = false;
    bool ok() const { return injective && weights_match && image_count == mct_count && rat_count == mct_count; }
};

struct BijectionReport {
    std::size_t n = 0, r = 0;
    std::vector<BijectionWordResult> words;
    bool ok() const;
    std::size_t total_mct() const;
};

BijectionReport verify_bijection(std::size_t n, std::size_t r, const Limits& limits = {});

}  // namespace rat
