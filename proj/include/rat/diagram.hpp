#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rat {

/// Heavy particle (D), light particle (A), hole (E). Declaration order is the
/// lexicographic order used for state enumeration: D < A < E.
enum class Letter : std::uint8_t { D = 0, A = 1, E = 2 };

char letter_char(Letter l);

class BadCharacter : public std::invalid_argument {
public:
    explicit BadCharacter(std::size_t index);
    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters);

    /// Case-insensitive; empty text and foreign characters are rejected.
    static Word parse(std::string_view text);

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    const std::vector<Letter>& letters() const { return letters_; }
    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

    std::size_t count(Letter l) const;
    std::size_t k() const { return count(Letter::D); }
    std::size_t ell() const { return count(Letter::E); }
    std::size_t r() const { return count(Letter::A); }
    std::size_t n() const { return size(); }

    /// Word positions of the letters equal to `l`, in word order.
    std::vector<std::size_t> positions(Letter l) const;

    Word slice(std::size_t from, std::size_t to) const;
    Word operator+(const Word& other) const;

    std::string to_string() const;

    friend auto operator<=>(const Word&, const Word&) = default;
    friend bool operator==(const Word&, const Word&) = default;

private:
    std::vector<Letter> letters_;
};

/// All words of length n with exactly r A's, lexicographic in D < A < E.
std::vector<Word> words_with(std::size_t n, std::size_t r);
/// All words of length exactly n.
std::vector<Word> all_words(std::size_t n);

struct LatticePoint {
    int x = 0;
    int y = 0;

    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
    LatticePoint operator+(const LatticePoint& o) const { return {x + o.x, y + o.y}; }
    LatticePoint operator-(const LatticePoint& o) const { return {x - o.x, y - o.y}; }
};

inline constexpr LatticePoint kSouth{0, -1};
inline constexpr LatticePoint kWest{-1, 0};
inline constexpr LatticePoint kSouthWest{-1, -1};

enum class EdgeKind : std::uint8_t { South, West, SouthWest };

/// A unit lattice edge identified by its northeast endpoint.
struct Edge {
    EdgeKind kind = EdgeKind::South;
    LatticePoint anchor;

    LatticePoint head() const;  // the other (southwest) endpoint
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

EdgeKind edge_kind_of(Letter l);
LatticePoint step_of(EdgeKind kind);

/// The region between the path P1 read from the word (south for D, west for E,
/// southwest for A) and the sorted path P2 (west^ell, southwest^r, south^k), both
/// starting at the origin.
class RhombicDiagram {
public:
    const Word& type() const { return type_; }
    const std::vector<Edge>& p1() const { return p1_; }
    const std::vector<Edge>& p2() const { return p2_; }
    /// E-edges of P1 in right-to-left order (index 0 is label 1).
    const std::vector<Edge>& e_labels() const { return e_labels_; }
    /// D-edges of P1 in top-to-bottom order (index 0 is label 1).
    const std::vector<Edge>& d_labels() const { return d_labels_; }
    /// A-edges of P1 in word order.
    const std::vector<Edge>& a_labels() const { return a_labels_; }

    LatticePoint southwest_corner() const;
    int min_x() const { return min_x_; }

    /// Lowest y of P1 and highest y of P2 in column x; the region's lattice points
    /// in that column are exactly lower..upper.
    int lower(int x) const { return lower_[static_cast<std::size_t>(-x)]; }
    int upper(int x) const { return upper_[static_cast<std::size_t>(-x)]; }

    bool contains(LatticePoint p) const;
    bool on_p1(LatticePoint p) const;
    bool p1_has(const Edge& e) const;
    bool p2_has(const Edge& e) const;
    std::vector<LatticePoint> lattice_points() const;

    std::size_t area() const { return area_; }

private:
    friend RhombicDiagram build_diagram(const Word& w);

    Word type_;
    std::vector<Edge> p1_, p2_;
    std::vector<Edge> e_labels_, d_labels_, a_labels_;
    std::vector<LatticePoint> p1_points_;
    std::vector<int> lower_, upper_;
    int min_x_ = 0;
    std::size_t area_ = 0;
};

RhombicDiagram build_diagram(const Word& w);

/// Tile count of any tiling: the number of inverted pairs D..E, D..A, A..E in w.
std::size_t diagram_area(const Word& w);
inline std::size_t diagram_area(const RhombicDiagram& d) { return d.area(); }

/// Reads the type word back from a labeled southeast boundary path.
Word word_from_boundary(const std::vector<Edge>& p1);

}  // namespace rat
