#include "rat/diagram.hpp"

#include <algorithm>
#include <cctype>

namespace rat {

char letter_char(Letter l) {
    switch (l) {
        case Letter::D: return 'D';
        case Letter::A: return 'A';
        case Letter::E: return 'E';
    }
    return '?';
}

BadCharacter::BadCharacter(std::size_t index)
    : std::invalid_argument("bad character at index " + std::to_string(index) +
                            " (expected D, A or E)"),
      index_(index) {}

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

Word Word::parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty word");
    std::vector<Letter> letters;
    letters.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (std::toupper(static_cast<unsigned char>(text[i]))) {
            case 'D': letters.push_back(Letter::D); break;
            case 'A': letters.push_back(Letter::A); break;
            case 'E': letters.push_back(Letter::E); break;
            default: throw BadCharacter(i);
        }
    }
    return Word(std::move(letters));
}

std::size_t Word::count(Letter l) const {
    return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), l));
}

std::vector<std::size_t> Word::positions(Letter l) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < letters_.size(); ++i)
        if (letters_[i] == l) out.push_back(i);
    return out;
}

Word Word::slice(std::size_t from, std::size_t to) const {
    return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(from),
                                    letters_.begin() + static_cast<std::ptrdiff_t>(to)));
}

Word Word::operator+(const Word& other) const {
    std::vector<Letter> joined = letters_;
    joined.insert(joined.end(), other.letters_.begin(), other.letters_.end());
    return Word(std::move(joined));
}

std::string Word::to_string() const {
    std::string out;
    out.reserve(letters_.size());
    for (Letter l : letters_) out += letter_char(l);
    return out;
}

namespace {

void extend_words(std::vector<Letter>& prefix, std::size_t n, std::size_t r_left,
                  std::vector<Word>& out) {
    std::size_t remaining = n - prefix.size();
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (Letter l : {Letter::D, Letter::A, Letter::E}) {
        bool is_a = l == Letter::A;
        if (is_a && r_left == 0) continue;
        if (!is_a && r_left == remaining) continue;
        prefix.push_back(l);
        extend_words(prefix, n, r_left - (is_a ? 1 : 0), out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Word> words_with(std::size_t n, std::size_t r) {
    std::vector<Word> out;
    if (r > n) return out;
    std::vector<Letter> prefix;
    extend_words(prefix, n, r, out);
    return out;
}

std::vector<Word> all_words(std::size_t n) {
    std::vector<Word> out;
    for (std::size_t r = 0; r <= n; ++r) {
        auto sector = words_with(n, r);
        out.insert(out.end(), sector.begin(), sector.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

LatticePoint Edge::head() const { return anchor + step_of(kind); }

EdgeKind edge_kind_of(Letter l) {
    switch (l) {
        case Letter::D: return EdgeKind::South;
        case Letter::E: return EdgeKind::West;
        case Letter::A: return EdgeKind::SouthWest;
    }
    return EdgeKind::South;
}

LatticePoint step_of(EdgeKind kind) {
    switch (kind) {
        case EdgeKind::South: return kSouth;
        case EdgeKind::West: return kWest;
        case EdgeKind::SouthWest: return kSouthWest;
    }
    return kSouth;
}

LatticePoint RhombicDiagram::southwest_corner() const {
    int k = static_cast<int>(type_.k()), r = static_cast<int>(type_.r()),
        l = static_cast<int>(type_.ell());
    return {-(l + r), -(k + r)};
}

bool RhombicDiagram::contains(LatticePoint p) const {
    if (p.x > 0 || p.x < min_x_) return false;
    return p.y >= lower(p.x) && p.y <= upper(p.x);
}

bool RhombicDiagram::on_p1(LatticePoint p) const {
    return std::binary_search(p1_points_.begin(), p1_points_.end(), p);
}

bool RhombicDiagram::p1_has(const Edge& e) const {
    return std::find(p1_.begin(), p1_.end(), e) != p1_.end();
}

bool RhombicDiagram::p2_has(const Edge& e) const {
    return std::find(p2_.begin(), p2_.end(), e) != p2_.end();
}

std::vector<LatticePoint> RhombicDiagram::lattice_points() const {
    std::vector<LatticePoint> out;
    for (int x = 0; x >= min_x_; --x)
        for (int y = upper(x); y >= lower(x); --y) out.push_back({x, y});
    return out;
}

RhombicDiagram build_diagram(const Word& w) {
    RhombicDiagram d;
    d.type_ = w;
    LatticePoint at{0, 0};
    d.p1_points_.push_back(at);
    for (Letter l : w) {
        Edge e{edge_kind_of(l), at};
        d.p1_.push_back(e);
        if (l == Letter::E) d.e_labels_.push_back(e);
        if (l == Letter::D) d.d_labels_.push_back(e);
        if (l == Letter::A) d.a_labels_.push_back(e);
        at = e.head();
        d.p1_points_.push_back(at);
    }
    at = {0, 0};
    auto walk_p2 = [&](EdgeKind kind, std::size_t times) {
        for (std::size_t i = 0; i < times; ++i) {
            Edge e{kind, at};
            d.p2_.push_back(e);
            at = e.head();
        }
    };
    walk_p2(EdgeKind::West, w.ell());
    walk_p2(EdgeKind::SouthWest, w.r());
    walk_p2(EdgeKind::South, w.k());

    d.min_x_ = -static_cast<int>(w.ell() + w.r());
    std::size_t columns = static_cast<std::size_t>(-d.min_x_) + 1;
    d.lower_.assign(columns, 0);
    d.upper_.assign(columns, 0);
    std::vector<bool> seen_lower(columns, false), seen_upper(columns, false);
    for (LatticePoint p : d.p1_points_) {
        auto c = static_cast<std::size_t>(-p.x);
        if (!seen_lower[c] || p.y < d.lower_[c]) d.lower_[c] = p.y;
        seen_lower[c] = true;
    }
    LatticePoint q{0, 0};
    auto visit_upper = [&](LatticePoint p) {
        auto c = static_cast<std::size_t>(-p.x);
        if (!seen_upper[c] || p.y > d.upper_[c]) d.upper_[c] = p.y;
        seen_upper[c] = true;
    };
    visit_upper(q);
    for (const Edge& e : d.p2_) visit_upper(e.head());

    std::sort(d.p1_points_.begin(), d.p1_points_.end());
    d.area_ = diagram_area(w);
    return d;
}

std::size_t diagram_area(const Word& w) {
    std::size_t ds = 0, as = 0, area = 0;
    for (Letter l : w) {
        switch (l) {
            case Letter::D: ++ds; break;
            case Letter::A: area += ds; ++as; break;
            case Letter::E: area += ds + as; break;
        }
    }
    return area;
}

Word word_from_boundary(const std::vector<Edge>& p1) {
    std::vector<Letter> letters;
    letters.reserve(p1.size());
    for (const Edge& e : p1) {
        switch (e.kind) {
            case EdgeKind::South: letters.push_back(Letter::D); break;
            case EdgeKind::West: letters.push_back(Letter::E); break;
            case EdgeKind::SouthWest: letters.push_back(Letter::A); break;
        }
    }
    return Word(std::move(letters));
}

}  // namespace rat
