#include "rat/markov.hpp"

#include <algorithm>

#include "rat/tableau.hpp"

namespace rat {

void ChainParams::validate() const {
    if (alpha <= 0 || alpha > 1) throw BadParams("alpha must lie in (0, 1]");
    if (beta <= 0 || beta > 1) throw BadParams("beta must lie in (0, 1]");
    if (q < 0 || q > 1) throw BadParams("q must lie in [0, 1]");
}

std::size_t ChainSpec::index_of(const Word& w) const {
    auto it = std::lower_bound(states.begin(), states.end(), w);
    if (it == states.end() || *it != w) throw std::invalid_argument("word is not a state of this chain");
    return static_cast<std::size_t>(it - states.begin());
}

std::vector<Word> state_space(std::size_t n, std::size_t r) {
    if (r > n) throw std::invalid_argument("r must not exceed n");
    return words_with(n, r);
}

ChainSpec build_chain(std::size_t n, std::size_t r, const ChainParams& params) {
    params.validate();
    ChainSpec c;
    c.n = n;
    c.r = r;
    c.params = params;
    c.states = state_space(n, r);
    const std::size_t size = c.states.size();
    c.P.assign(size, std::vector<Rational>(size, Rational(0)));
    const Rational scale(1, static_cast<long>(n + 1));

    for (std::size_t from = 0; from < size; ++from) {
        const Word& w = c.states[from];
        std::vector<Letter> letters = w.letters();
        auto move = [&](const std::vector<Letter>& to, const Rational& rate) {
            if (rate == 0) return;
            c.P[from][c.index_of(Word(to))] += rate * scale;
        };
        for (std::size_t i = 0; i + 1 < n; ++i) {
            Letter a = letters[i], b = letters[i + 1];
            // Heavier particle on the left hops right at rate 1, back at rate q.
            // Weight order D > A > E matches the Letter enumeration order.
            if (a == b) continue;
            std::vector<Letter> swapped = letters;
            std::swap(swapped[i], swapped[i + 1]);
            move(swapped, a < b ? Rational(1) : params.q);
        }
        if (n > 0 && letters.front() == Letter::E) {
            std::vector<Letter> to = letters;
            to.front() = Letter::D;
            move(to, params.alpha);
        }
        if (n > 0 && letters.back() == Letter::D) {
            std::vector<Letter> to = letters;
            to.back() = Letter::E;
            move(to, params.beta);
        }
        Rational off = 0;
        for (std::size_t to = 0; to < size; ++to)
            if (to != from) off += c.P[from][to];
        c.P[from][from] = 1 - off;
    }
    return c;
}

std::vector<Rational> stationary_distribution(const ChainSpec& c) {
    const std::size_t size = c.states.size();
    if (size == 0) return {};
    // Rows of (P - I)^T, with the last equation replaced by the normalization.
    RationalMatrix a(size, std::vector<Rational>(size));
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) a[i][j] = c.P[j][i] - (i == j ? 1 : 0);
    std::vector<Rational> b(size, Rational(0));
    std::fill(a.back().begin(), a.back().end(), Rational(1));
    b.back() = 1;
    return kernels::serial::solve(std::move(a), std::move(b));
}

bool MainTheoremReport::ok() const { return mismatches() == 0; }

std::size_t MainTheoremReport::mismatches() const {
    return static_cast<std::size_t>(
        std::count_if(states.begin(), states.end(), [](const StateComparison& s) { return !s.match; }));
}

MainTheoremReport verify_main_theorem(std::size_t n, std::size_t r, const ChainParams& params,
                                      const Limits& limits) {
    ChainSpec chain = build_chain(n, r, params);
    std::vector<Rational> pi = stationary_distribution(chain);
    std::vector<Polynomial> weights = kernels::parallel::sector_weights(chain.states, limits);

    MainTheoremReport report;
    report.n = n;
    report.r = r;
    report.params = params;
    for (const Polynomial& w : weights) report.partition += w;
    const Binding at = params.binding();
    const Rational z = report.partition.evaluate(at);
    for (std::size_t i = 0; i < chain.states.size(); ++i) {
        StateComparison s{chain.states[i], pi[i], weights[i].evaluate(at) / z, false};
        s.predicted.canonicalize();
        s.match = s.stationary == s.predicted;
        report.states.push_back(std::move(s));
    }
    return report;
}

const Polynomial& WeightCache::operator()(const Word& w) {
    auto it = cache_.find(w);
    if (it != cache_.end()) return it->second;
    Polynomial p = w.empty() ? Polynomial(1) : weight_of_word(w, limits_);
    return cache_.emplace(w, std::move(p)).first->second;
}

const char* ansatz_identity_name(AnsatzIdentity id) {
    switch (id) {
        case AnsatzIdentity::DE: return "DE";
        case AnsatzIdentity::DA: return "DA";
        case AnsatzIdentity::AE: return "AE";
        case AnsatzIdentity::RightD: return "right-D";
        case AnsatzIdentity::LeftE: return "left-E";
    }
    return "?";
}

bool AnsatzReport::ok() const {
    return std::all_of(identities.begin(), identities.end(),
                       [](const AnsatzResult& r) { return r.failures.empty(); });
}

AnsatzReport verify_ansatz_identities(std::size_t max_n, const Limits& limits) {
    WeightCache weight(limits);
    const Polynomial a = Polynomial::symbol(Symbol::Alpha);
    const Polynomial b = Polynomial::symbol(Symbol::Beta);
    const Polynomial q = Polynomial::symbol(Symbol::Q);
    const Polynomial ab = a * b;
    const Word D({Letter::D}), A({Letter::A}), E({Letter::E});

    std::vector<std::vector<Word>> words_by_length(max_n + 1);
    for (std::size_t len = 0; len <= max_n; ++len)
        words_by_length[len] = len == 0 ? std::vector<Word>{Word()} : all_words(len);

    AnsatzReport report;
    report.max_n = max_n;
    auto check = [&](AnsatzIdentity id, std::size_t extra, auto&& holds) {
        AnsatzResult result{id, 0, {}};
        for (std::size_t lx = 0; lx + extra <= max_n; ++lx) {
            for (std::size_t ly = 0; lx + ly + extra <= max_n; ++ly) {
                for (const Word& x : words_by_length[lx]) {
                    for (const Word& y : words_by_length[ly]) {
                        ++result.checked;
                        if (!holds(x, y)) result.failures.push_back(x.to_string() + "|" + y.to_string());
                    }
                }
            }
        }
        report.identities.push_back(std::move(result));
    };

    check(AnsatzIdentity::DE, 2, [&](const Word& x, const Word& y) {
        return weight(x + D + E + y) == ab * (weight(x + D + y) + weight(x + E + y)) + q * weight(x + E + D + y);
    });
    check(AnsatzIdentity::DA, 2, [&](const Word& x, const Word& y) {
        return weight(x + D + A + y) == ab * weight(x + A + y) + q * weight(x + A + D + y);
    });
    check(AnsatzIdentity::AE, 2, [&](const Word& x, const Word& y) {
        return weight(x + A + E + y) == ab * weight(x + A + y) + q * weight(x + E + A + y);
    });
    // The boundary identities have only one free side.
    auto only_x = [&](AnsatzIdentity id, auto&& holds) {
        AnsatzResult result{id, 0, {}};
        for (std::size_t len = 0; len + 1 <= max_n; ++len) {
            for (const Word& x : words_by_length[len]) {
                ++result.checked;
                if (!holds(x)) result.failures.push_back(x.to_string());
            }
        }
        report.identities.push_back(std::move(result));
    };
    only_x(AnsatzIdentity::RightD, [&](const Word& x) { return weight(x + D) == a * weight(x); });
    only_x(AnsatzIdentity::LeftE, [&](const Word& y) { return weight(E + y) == b * weight(y); });
    return report;
}

}  // namespace rat
