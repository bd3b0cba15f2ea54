#include "rat/mct.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rat {

MCTableau::MCTableau(Word type) : type_(std::move(type)), marks_(type_.size() * type_.size(), Mark::Empty) {
    for (std::size_t i = 0; i < type_.size(); ++i) {
        if (is_row(i)) rows_.push_back(i);
        if (is_column(i)) columns_.push_back(i);
    }
}

std::size_t MCTableau::slot(std::size_t s, std::size_t w) const {
    if (!has_box(s, w)) throw std::out_of_range("no such box");
    return s * type_.size() + w;
}

Mark MCTableau::at(std::size_t s, std::size_t w) const { return marks_[slot(s, w)]; }
void MCTableau::set(std::size_t s, std::size_t w, Mark m) { marks_[slot(s, w)] = m; }

std::vector<std::size_t> MCTableau::row_lengths() const {
    std::vector<std::size_t> out;
    for (std::size_t s : rows_)
        out.push_back(static_cast<std::size_t>(std::count_if(columns_.begin(), columns_.end(),
                                                             [&](std::size_t w) { return w > s; })));
    return out;
}

std::vector<std::size_t> MCTableau::column_heights() const {
    std::vector<std::size_t> out;
    for (std::size_t w : columns_)
        out.push_back(static_cast<std::size_t>(std::count_if(rows_.begin(), rows_.end(),
                                                             [&](std::size_t s) { return s < w; })));
    return out;
}

std::string MCTableau::boundary_labels() const {
    std::string out;
    for (Letter l : type_) {
        if (l == Letter::A)
            out += "AA";
        else
            out += letter_char(l);
    }
    return out;
}

bool is_forced_empty(const MCTableau& t, std::size_t s, std::size_t w) {
    const Word& type = t.type();
    for (std::size_t between = s + 1; between < w; ++between) {
        if (type[between] == Letter::A) return true;
        if (t.is_column(between) && t.at(s, between) == Mark::Beta) return true;
        if (t.is_row(between) && t.at(between, w) == Mark::Alpha) return true;
    }
    return type[s] == Letter::A && type[w] == Letter::A;
}

namespace {

// Symbol a non-forced box must hold; DE boxes accept either.
bool accepts(Letter row, Letter column, Mark m) {
    switch (m) {
        case Mark::Empty: return false;
        case Mark::Alpha: return column == Letter::E;
        case Mark::Beta: return row == Letter::D;
    }
    return false;
}

}  // namespace

bool is_valid_mct(const MCTableau& t) {
    const Word& type = t.type();
    for (std::size_t s : t.row_letters()) {
        for (std::size_t w : t.column_letters()) {
            if (w <= s) continue;
            const Mark m = t.at(s, w);
            const bool forced = is_forced_empty(t, s, w);
            if (forced && m != Mark::Empty) return false;
            if (!forced && !accepts(type[s], type[w], m)) return false;
        }
    }
    return true;
}

std::vector<MCTableau> enumerate_mct(const Word& word, const Limits& limits) {
    check_limit("diagram area", diagram_area(word), limits.max_area);
    // Columns right to left, each bottom to top: the forced status of a box then
    // depends only on boxes already decided.
    MCTableau t(word);
    std::vector<std::pair<std::size_t, std::size_t>> order;
    for (std::size_t w : t.column_letters())
        for (auto it = t.row_letters().rbegin(); it != t.row_letters().rend(); ++it)
            if (*it < w) order.emplace_back(*it, w);

    std::vector<MCTableau> out;
    std::function<void(std::size_t)> place = [&](std::size_t i) {
        if (i == order.size()) {
            out.push_back(t);
            check_limit("tableau count", out.size(), limits.max_fillings);
            return;
        }
        auto [s, w] = order[i];
        if (is_forced_empty(t, s, w)) {
            place(i + 1);
            return;
        }
        for (Mark m : {Mark::Alpha, Mark::Beta}) {
            if (!accepts(word[s], word[w], m)) continue;
            t.set(s, w, m);
            place(i + 1);
            t.set(s, w, Mark::Empty);
        }
    };
    place(0);
    return out;
}

MCTWeight mct_weight(const MCTableau& t) {
    const Word& type = t.type();
    MCTWeight out{static_cast<unsigned>(type.k()), static_cast<unsigned>(type.ell())};
    for (std::size_t s : t.row_letters()) {
        for (std::size_t w : t.column_letters()) {
            if (w <= s) continue;
            if (t.at(s, w) == Mark::Alpha) ++out.alpha;
            if (t.at(s, w) == Mark::Beta) ++out.beta;
        }
    }
    return out;
}

MCTableau rat_to_mct(const Filling& f) {
    const Tiling& tiling = f.tiling();
    if (!(tiling == minimal_tiling(tiling.shared_diagram()))) throw NotMinimalTiling();
    if (weight_of_filling(f).q != 0) throw NotQZero();

    const Word& word = tiling.diagram().type();
    MCTableau t(word);
    std::set<std::size_t> beta_rows;
    const auto& inc = f.frame().incidence();
    for (std::size_t i = 0; i < tiling.size(); ++i) {
        const Mark m = f.marks()[i];
        if (m == Mark::Alpha) t.set(inc[i].row_letter, inc[i].column_letter, Mark::Alpha);
        if (m == Mark::Beta) beta_rows.insert(inc[i].row_letter);
    }
    for (std::size_t s : beta_rows) {
        // Boxes of row s from right to left.
        for (std::size_t w = s + 1; w < word.size(); ++w) {
            if (!t.is_column(w) || t.at(s, w) == Mark::Alpha || is_forced_empty(t, s, w)) continue;
            t.set(s, w, Mark::Beta);
            break;
        }
    }
    if (!is_valid_mct(t)) throw std::logic_error("unraveled tableau of " + word.to_string() + " is not multi-Catalan");
    return t;
}

bool BijectionReport::ok() const {
    return std::all_of(words.begin(), words.end(), [](const BijectionWordResult& w) { return w.ok(); });
}

std::size_t BijectionReport::total_mct() const {
    std::size_t total = 0;
    for (const auto& w : words) total += w.mct_count;
    return total;
}

BijectionReport verify_bijection(std::size_t n, std::size_t r, const Limits& limits) {
    BijectionReport report;
    report.n = n;
    report.r = r;
    for (const Word& word : words_with(n, r)) {
        BijectionWordResult result;
        result.word = word;
        std::vector<MCTableau> direct = enumerate_mct(word, limits);
        result.mct_count = direct.size();

        std::vector<MCTableau> images;
        std::multiset<MCTWeight> rat_weights, mct_weights;
        for (const Filling& f : enumerate_fillings(minimal_tiling(make_diagram(word)), limits)) {
            WeightMonomial w = weight_of_filling(f);
            if (w.q != 0) continue;
            ++result.rat_count;
            images.push_back(rat_to_mct(f));
            rat_weights.insert({w.alpha, w.beta});
        }
        for (const MCTableau& t : direct) mct_weights.insert(mct_weight(t));

        std::vector<MCTableau> sorted = images;
        std::sort(sorted.begin(), sorted.end());
        result.injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        result.image_count = sorted.size();

        std::multiset<MCTWeight> image_weights;
        for (const MCTableau& t : images) image_weights.insert(mct_weight(t));
        result.weights_match = image_weights == rat_weights && mct_weights == rat_weights;
        report.words.push_back(std::move(result));
    }
    return report;
}

}  // namespace rat
